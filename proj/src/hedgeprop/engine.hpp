#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hedgeprop/algebra.hpp"
#include "hedgeprop/bounds.hpp"
#include "hedgeprop/enumerate.hpp"
#include "hedgeprop/ground_space.hpp"
#include "hedgeprop/hedge.hpp"
#include "hedgeprop/substitution.hpp"

namespace hedgeprop {

// A query direction: forward reads (source, target) as built, swapped reads
// the pair the other way around (used by the mirrored premises).
enum class Orientation : int { forward = 0, swapped = 1 };

inline Side source_of(Orientation o) {
  return o == Orientation::forward ? Side::source : Side::target;
}
inline Side target_of(Orientation o) {
  return o == Orientation::forward ? Side::target : Side::source;
}

// Denotation-level variable images: an element, a rank-0 pair index for
// x-variables, or the empty hedge.
constexpr int64_t kLambda = -1;
constexpr int64_t kUndef = -2;

using Row = std::vector<int64_t>;  // aligned with a hedge's variables_in_order

// Every satisfying denotation-level assignment of one hedge on one side,
// bucketed by the value the hedge takes.
struct MatchBuckets {
  std::vector<Variable> vars;
  std::map<Element, std::vector<Row>> by_value;
  bool truncated = false;  // a bucket hit max_substitutions_per_match
};

struct JustificationSet {
  std::set<Justification> members;
  std::set<Justification> trivial;  // the members that are trivial (see producer)
  bool truncated = false;           // some contributing match was capped

  bool all_trivial() const { return members.size() == trivial.size(); }
  std::set<Justification> nontrivial() const;
};

// One bilingual session: two algebras, the pairing, bounded ground spaces,
// the abstract hedge enumeration, and memoized set computations on top.
// Set-valued results are canonical (std::set over the structural order), so
// repeated runs and different worker counts produce identical output.
class Engine {
 public:
  Engine(const Algebra& source, const Algebra& target, LanguagePair lp, Bounds bounds);

  const Bounds& bounds() const { return bounds_; }
  const LanguagePair& pair() const { return lp_; }
  const LanguagePair& pair(Orientation o) const {
    return o == Orientation::forward ? lp_ : swapped_lp_;
  }
  const Algebra& algebra(Side s) const { return *algs_[side_index(s)]; }
  const GroundSpace& space(Side s) const { return spaces_[side_index(s)]; }
  const std::vector<Hedge>& hedges() const { return hedges_; }
  bool hedges_truncated() const { return hedges_truncated_; }
  int thread_count() const { return threads_; }

  // Ground term -> its element on that side (throws when non-ground or the
  // evaluation leaves the carrier).
  Element resolve(Side s, const Term& t) const;
  // Class representative as a term; identity spelling for values reached by
  // hedges but outside every class.
  Term representative(Side s, Element e) const;
  std::string element_name(Side s, Element e) const { return algebra(s).element_name(e); }

  // All substitutions making `h` denote `e` on side `s`, x-variables ranging
  // over the side's rank-0 pair indices; z and hedge images are materialized
  // as class representatives.
  std::vector<Substitution> match_hedge(const Hedge& h, Element e, Side s, bool* truncated = nullptr);

  // Denotation-level matching of an arbitrary hedge (not necessarily from
  // the enumeration), bucketed by value.
  MatchBuckets compute_buckets(const Hedge& h, Side s) const;

  // One denotation-level evaluation of `h` on side `s`; `value_of` supplies
  // an element, rank-0 pair index, or kLambda per variable.  Returns the
  // element, or kUndef when an application misses its rank or leaves the
  // carrier, or kLambda when the whole hedge is an empty image.
  int64_t eval_on(const Hedge& h, Side s,
                  const std::function<int64_t(const Variable&)>& value_of) const;

  // Jus of a single side: patterns s -> t with one ground substitution
  // taking s to `a` and t to `b` denotationally.  `trivial` is flagged with
  // respect to that side.
  const JustificationSet& jus_arrow(Side s, Element a, Element b);

  // Linked pair sets for every target value at once: justifications whose
  // one substitution pair (x-images shared by pair index) sends lhs/rhs to
  // a/b on the oriented source and lhs to c on the oriented target; keyed by
  // the rhs target value d.  `trivial` is flagged pair-wide.
  const std::map<Element, JustificationSet>& jus_pair_all(Orientation o, Element a, Element b,
                                                          Element c);
  const JustificationSet& jus_arrow_pair(Orientation o, Element a, Element b, Element c,
                                         Element d);

  // Bounded triviality: member of Jus(a -> b) for every ordered pair of
  // denotation classes of that side / of both sides.
  bool is_trivial(const Justification& j, Side s);
  bool is_trivial_pair(const Justification& j);

 private:
  LanguagePair lp_, swapped_lp_;
  const Algebra* algs_[2];
  Bounds bounds_;
  GroundSpace spaces_[2];
  std::vector<Hedge> hedges_;
  bool hedges_truncated_ = false;
  struct HedgeLess {
    bool operator()(const Hedge& a, const Hedge& b) const { return compare_hedges(a, b) < 0; }
  };
  std::map<Hedge, int, HedgeLess> hedge_index_;
  int threads_ = 1;

  // lazily built per (hedge index, side); inside a parallel pass each index
  // is touched by exactly one worker
  std::vector<std::unique_ptr<MatchBuckets>> bucket_cache_[2];

  std::map<std::tuple<int, Element, Element>, JustificationSet> jus_single_;
  std::map<std::tuple<int, Element, Element, Element>, std::map<Element, JustificationSet>>
      jus_pair_;
  std::map<Justification, std::array<std::optional<bool>, 2>> trivial_;
  static const JustificationSet empty_set_;

  const MatchBuckets& buckets(int hedge_idx, Side s);
  void fill_trivial_flags(JustificationSet& set, bool pair_scope, Side s);

  struct Candidate;  // one rhs instance over an lhs hedge's variable pool
  std::vector<Candidate> candidates_for(int lhs_idx) const;

  friend struct EngineTestPeek;
};

}  // namespace hedgeprop
