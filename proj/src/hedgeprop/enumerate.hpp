#pragma once

#include <vector>

#include "hedgeprop/bounds.hpp"
#include "hedgeprop/hedge.hpp"
#include "hedgeprop/language.hpp"

namespace hedgeprop {

struct HedgeEnumeration {
  std::vector<Hedge> hedges;  // canonical, ordered by (size, printed spelling)
  bool truncated = false;     // max_hedges cut the list
};

// Every abstract hedge over the pair's positive-rank symbols up to
// bounds.hedge_depth, one per variable-renaming class (all results are
// canonical), capped at bounds.max_hedges after ordering.
HedgeEnumeration enumerate_hedges(const LanguagePair& lp, const Bounds& bounds);

}  // namespace hedgeprop
