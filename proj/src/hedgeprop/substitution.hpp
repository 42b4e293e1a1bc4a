#pragma once

#include <map>
#include <optional>
#include <string>

#include "hedgeprop/hedge.hpp"
#include "hedgeprop/term.hpp"

namespace hedgeprop {

// A ground substitution into one side's language.  The symbol part is fixed
// by the pairing (pair index i maps to that side's i-th paired symbol);
// x-variables pick a pair index of a rank-0 symbol, z-variables a ground
// term, hedge variables a ground term or the empty hedge (std::nullopt).
struct Substitution {
  Side side = Side::target;
  std::map<uint32_t, int32_t> constant_map;           // x id -> pair index
  std::map<uint32_t, Term> term_map;                  // z id -> ground term
  std::map<uint32_t, std::optional<Term>> hedge_map;  // Z id -> ground term or empty

  bool operator==(const Substitution&) const = default;
};

// Applies `s` to `h`: merged symbols become the side's paired symbols,
// variables are replaced by their images, and empty-hedge images delete
// their argument position.  After deletion every node must carry exactly
// its side rank (errc::arity_mismatch otherwise); an empty image at the
// root raises errc::lambda_at_root; a variable without an image raises
// errc::unbound_variable.
Term apply_substitution(const Hedge& h, const Substitution& s, const LanguagePair& lp);

// "{h/S, z1/0, Z1/_lambda_}": the symbol part for positive-rank pairs first,
// then x, z, Z images by id.  The empty hedge prints as "_lambda_".
std::string print_substitution(const Substitution& s, const LanguagePair& lp);

}  // namespace hedgeprop
