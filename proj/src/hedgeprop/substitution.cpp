#include "hedgeprop/substitution.hpp"

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

namespace {

// nullopt encodes the empty hedge while results bubble up.
std::optional<Term> apply_at(const Hedge& h, const Substitution& s, const LanguagePair& lp) {
  if (h.is_leaf()) {
    switch (h.var.kind) {
      case VarKind::constant: {
        auto it = s.constant_map.find(h.var.id);
        if (it == s.constant_map.end())
          fail(errc::unbound_variable, print_variable(h.var) + " has no image");
        int pair_idx = it->second;
        if (lp.rank(s.side, pair_idx) != 0)
          fail(errc::rank_mismatch, print_variable(h.var) + " must map to a rank-0 symbol, got '" +
                                        lp.name(s.side, pair_idx) + "'");
        return make_term(lp.side_symbol(s.side, pair_idx));
      }
      case VarKind::term: {
        auto it = s.term_map.find(h.var.id);
        if (it == s.term_map.end())
          fail(errc::unbound_variable, print_variable(h.var) + " has no image");
        return it->second;
      }
      case VarKind::hedge: {
        auto it = s.hedge_map.find(h.var.id);
        if (it == s.hedge_map.end())
          fail(errc::unbound_variable, print_variable(h.var) + " has no image");
        return it->second;  // may be the empty hedge
      }
    }
  }
  std::vector<Term> args;
  for (const auto& k : h.kids) {
    if (auto t = apply_at(k, s, lp)) args.push_back(std::move(*t));
    // an empty-hedge image deletes its position
  }
  int rank = lp.rank(s.side, h.symbol);
  if (static_cast<int>(args.size()) != rank)
    fail(errc::arity_mismatch, "'" + lp.name(s.side, h.symbol) + "' needs " +
                                   std::to_string(rank) + " arguments after deletion, got " +
                                   std::to_string(args.size()));
  return make_term(lp.side_symbol(s.side, h.symbol), std::move(args));
}

}  // namespace

Term apply_substitution(const Hedge& h, const Substitution& s, const LanguagePair& lp) {
  auto t = apply_at(h, s, lp);
  if (!t) fail(errc::lambda_at_root, "the whole hedge maps to the empty hedge");
  return *t;
}

std::string print_substitution(const Substitution& s, const LanguagePair& lp) {
  const Signature& sig = lp.signature(s.side);
  std::string out = "{";
  bool first = true;
  auto add = [&](const std::string& piece) {
    if (!first) out += ", ";
    out += piece;
    first = false;
  };
  for (int i : lp.positive_rank_indices()) add(lp.merged_name(i) + "/" + lp.name(s.side, i));
  for (const auto& [id, pair_idx] : s.constant_map)
    add(print_variable({VarKind::constant, id}) + "/" + lp.name(s.side, pair_idx));
  for (const auto& [id, t] : s.term_map)
    add(print_variable({VarKind::term, id}) + "/" + print_term(t, sig));
  for (const auto& [id, t] : s.hedge_map)
    add(print_variable({VarKind::hedge, id}) + "/" + (t ? print_term(*t, sig) : "_lambda_"));
  out += "}";
  return out;
}

}  // namespace hedgeprop
