#pragma once

#include <map>
#include <vector>

#include "hedgeprop/algebra.hpp"
#include "hedgeprop/term.hpp"

namespace hedgeprop {

// All ground terms of one algebra up to a depth bound, grouped into
// denotation classes.  Every value reached within the bound is a class key;
// the representative of a class is its smallest member (node count first,
// then printed spelling).
struct GroundSpace {
  int depth = 0;
  std::vector<Term> terms;            // every distinct in-carrier term within the bound
  std::vector<Element> term_values;   // aligned with terms
  std::vector<Element> class_keys;    // ascending
  std::map<Element, std::vector<int>> members;  // value -> indices into terms
  std::map<Element, Term> representative;

  bool has_class(Element e) const { return members.count(e) != 0; }
};

// Throws errc::empty_space when no ground term fits the bound (for instance
// a signature without rank-0 symbols).
GroundSpace enumerate_ground_space(const Algebra& alg, int term_depth);

}  // namespace hedgeprop
