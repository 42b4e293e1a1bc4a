#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hedgeprop/language.hpp"

namespace hedgeprop {

// The three variable kinds of an abstract hedge: x-variables stand for a
// paired constant, z-variables for a ground term, hedge variables for a
// ground term or the empty hedge (which deletes the argument position).
enum class VarKind : uint8_t { constant = 0, term = 1, hedge = 2 };

struct Variable {
  VarKind kind = VarKind::term;
  uint32_t id = 0;  // 1-based within its kind

  auto operator<=>(const Variable&) const = default;
};

std::string print_variable(const Variable& v);  // "x3", "z1", "Z2"

// An abstract hedge over the merged language: internal nodes carry a pair
// index of positive merged rank and exactly merged-rank children, leaves are
// variables.  Rank-0 pair symbols never occur (constants are reached through
// x-variables).
struct Hedge {
  int32_t symbol = -1;  // pair index; -1 marks a variable leaf
  Variable var{};
  std::vector<Hedge> kids;

  bool is_leaf() const { return symbol < 0; }
  bool operator==(const Hedge&) const = default;
};

inline Hedge make_leaf(VarKind kind, uint32_t id) { return Hedge{-1, {kind, id}, {}}; }
inline Hedge make_hedge(int32_t symbol, std::vector<Hedge> kids) {
  return Hedge{symbol, {}, std::move(kids)};
}

// Leaves have depth 0; an application is one deeper than its deepest child.
int hedge_depth(const Hedge& h);
int hedge_size(const Hedge& h);

struct VarSets {
  std::set<uint32_t> constant, term, hedge;

  const std::set<uint32_t>& of(VarKind k) const {
    switch (k) {
      case VarKind::constant: return constant;
      case VarKind::term: return term;
      default: return hedge;
    }
  }
  bool contains(const Variable& v) const { return of(v.kind).count(v.id) != 0; }
};

VarSets vars_of(const Hedge& h);
// Distinct variables in pre-order first-occurrence order.
std::vector<Variable> variables_in_order(const Hedge& h);

// Renames variables of each kind to 1,2,... by pre-order first occurrence.
// Idempotent; two hedges differing only by an injective renaming map to the
// same result.
Hedge canonical_hedge(const Hedge& h);

// Total structural order: size first, then pre-order node comparison.
std::strong_ordering compare_hedges(const Hedge& a, const Hedge& b);

// Checks the shape rules above against `lp` (positive merged rank, exact
// child counts); throws on violation.
void validate_hedge(const Hedge& h, const LanguagePair& lp);

std::string print_hedge(const Hedge& h, const LanguagePair& lp);

// A rewrite pattern lhs -> rhs.  Valid only when every z-variable and every
// hedge variable of the rhs occurs in the lhs (x-variables are free to be
// fresh).  Stored canonically: variables renamed by first occurrence across
// lhs then rhs.
struct Justification {
  Hedge lhs, rhs;

  // Canonicalizes; throws errc::invalid_justification on a rhs-only
  // z-variable or hedge variable.
  static Justification make(Hedge lhs, Hedge rhs);

  int size() const { return hedge_size(lhs) + hedge_size(rhs); }
  bool operator==(const Justification&) const = default;
  std::strong_ordering operator<=>(const Justification& o) const;
};

std::string print_justification(const Justification& j, const LanguagePair& lp);

// Renames the variables of (lhs, rhs) jointly by first occurrence, lhs first.
void canonicalize_pair(Hedge& lhs, Hedge& rhs);

}  // namespace hedgeprop
