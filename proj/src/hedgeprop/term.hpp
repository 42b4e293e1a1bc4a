#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hedgeprop/language.hpp"

namespace hedgeprop {

// A concrete term over one side's signature.  Leaves are rank-0 symbols or
// z-variables (symbol == -1); internal nodes carry exactly rank(symbol)
// arguments.  Constant placeholders and hedge variables never occur here.
struct Term {
  int32_t symbol = -1;  // side-signature index; -1 marks a z-variable leaf
  uint32_t var = 0;     // variable id when symbol == -1 (ids start at 1)
  std::vector<Term> args;

  bool is_var() const { return symbol < 0; }
  bool operator==(const Term&) const = default;
};

inline Term make_var_term(uint32_t id) { return Term{-1, id, {}}; }
inline Term make_term(int32_t symbol, std::vector<Term> args = {}) {
  return Term{symbol, 0, std::move(args)};
}

// Leaves have depth 1; an application is one deeper than its deepest argument.
int term_depth(const Term& t);
// Total node count.
int term_size(const Term& t);
bool term_is_ground(const Term& t);
void collect_term_vars(const Term& t, std::set<uint32_t>& out);

// Total structural order: size first, then a pre-order node comparison.
// Deterministic and signature-independent; used wherever term sets need a
// reproducible order.
std::strong_ordering compare_terms(const Term& a, const Term& b);

std::string print_term(const Term& t, const Signature& sig);

}  // namespace hedgeprop
