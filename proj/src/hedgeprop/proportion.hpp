#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hedgeprop/engine.hpp"

namespace hedgeprop {

// How an arrow query was decided: by everything in the single-side sets
// being trivial, by a non-empty set maximal among the rival target classes,
// or not at all.
enum class ArrowCase { all_trivial, maximal, fails };

inline const char* arrow_case_name(ArrowCase c) {
  switch (c) {
    case ArrowCase::all_trivial: return "all_trivial";
    case ArrowCase::maximal: return "maximal";
    default: return "fails";
  }
}

struct RivalEntry {
  Element cls = 0;
  std::set<Justification> members;  // non-trivial pair justifications toward this class
  bool covers_d = false;            // J(d) is a subset of this rival's set
  bool covered_by_d = false;        // this rival's set is a subset of J(d)
};

struct ArrowVerdict {
  Orientation orientation = Orientation::forward;
  Element a = 0, b = 0, c = 0, d = 0;  // oriented source pair, oriented target pair
  bool holds = false;
  ArrowCase kase = ArrowCase::fails;
  std::set<Justification> witnesses;        // non-trivial members of J(d)
  std::set<Justification> trivial_members;  // trivial members of the pair set at d
  size_t single_source_size = 0, single_target_size = 0;  // the case-(a) sets
  std::vector<RivalEntry> rivals;
  bool rivals_truncated = false;  // more than kMaxRivalReport classes omitted
  bool sets_truncated = false;    // a contributing match hit its cap
  bool hedges_truncated = false;

  static constexpr size_t kMaxRivalReport = 100;
};

ArrowVerdict holds_arrow(Engine& eng, Orientation o, Element a, Element b, Element c, Element d);

// The derivation rule: forward and reversed arrows in the given direction,
// and their mirrors read against the swapped pair.
struct ProportionVerdict {
  Element a = 0, b = 0, c = 0, d = 0;
  bool holds = false;
  std::array<ArrowVerdict, 4> premises;
};

ProportionVerdict holds_proportion(Engine& eng, Element a, Element b, Element c, Element d);

// True iff every member of `J` (canonical justifications) lies in the pair
// set toward d and toward no other target class; the empty set never
// characterizes anything.
bool is_characteristic(Engine& eng, Orientation o, const std::set<Justification>& J, Element a,
                       Element b, Element c, Element d);

// Which certificate the one-member shortcut yields for j at this query:
// part 1 pins the forward arrow, part 2 additionally the reversed arrow,
// part 3 the whole proportion.
enum class UniquenessPart { not_applicable, part1, part2, part3 };

inline const char* uniqueness_part_name(UniquenessPart p) {
  switch (p) {
    case UniquenessPart::part1: return "part1";
    case UniquenessPart::part2: return "part2";
    case UniquenessPart::part3: return "part3";
    default: return "not_applicable";
  }
}

struct UniquenessResult {
  UniquenessPart part = UniquenessPart::not_applicable;
  bool member = false;      // j belongs to the pair set at d
  bool target_fwd = false;  // lhs at c forces rhs at d
  bool target_bwd = false;  // rhs at d forces lhs at c
  bool source_fwd = false;  // lhs at a forces rhs at b
  bool source_bwd = false;  // rhs at b forces lhs at a
  bool var_condition = false;  // every lhs z/hedge variable reoccurs in the rhs
};

UniquenessResult uniqueness_lemma(Engine& eng, Orientation o, const Justification& j, Element a,
                                  Element b, Element c, Element d);

// Functional shortcut for a hedge with a single z-variable: instantiate
// b := first image of `t` with z at a, d := first image with z at c, certify
// directly when each side's substitutions all agree on one image, and fall
// back to the maximality search otherwise.  Certification never outruns the
// search semantics.
struct FunctionalVerdict {
  enum class Route { theorem_direct, confirmed_by_search, not_certified };

  bool certified = false;
  Route route = Route::not_certified;
  Element a = 0, c = 0;
  std::optional<Element> b, d;          // unset when a side has no valid image
  bool target_determinate = false;      // exactly one target image value
  bool source_determinate = false;      // exactly one source image value
  std::vector<Element> target_values;   // distinct target image values, ascending
  std::vector<Element> source_values;   // distinct source image values, ascending
  std::optional<std::pair<Substitution, Substitution>> divergent;  // two differing targets
  std::vector<Substitution> d_candidates;  // matches of t at d on the target side
  bool d_candidates_truncated = false;
  std::string certificate;              // "z1 -> ..." on the direct route
  std::optional<ArrowVerdict> search;   // present when the fallback ran
};

inline const char* functional_route_name(FunctionalVerdict::Route r) {
  switch (r) {
    case FunctionalVerdict::Route::theorem_direct: return "direct";
    case FunctionalVerdict::Route::confirmed_by_search: return "confirmed_by_search";
    default: return "not_certified";
  }
}

FunctionalVerdict functional_proportion(Engine& eng, const Hedge& t, const Term& a_term,
                                        const Term& c_term);

// Runs the arrow decision for every target class as d.
struct SolveResult {
  Element a = 0, b = 0, c = 0;
  std::vector<Element> tried;           // every target class examined
  std::vector<ArrowVerdict> holders;    // witness count descending, then class ascending
};

SolveResult solve_d(Engine& eng, Element a, Element b, Element c);

}  // namespace hedgeprop
