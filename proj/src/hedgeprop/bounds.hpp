#pragma once

namespace hedgeprop {

// Finite search window all set-valued operations are computed within.  Every
// verdict is relative to these bounds and reports them.
struct Bounds {
  int hedge_depth = 2;   // nesting of abstract symbols; a bare variable has depth 0
  int term_depth = 3;    // ground-term levels; a constant has depth 1
  int max_hedges = 10000;
  int max_substitutions_per_match = 10000;

  bool operator==(const Bounds&) const = default;
};

}  // namespace hedgeprop
