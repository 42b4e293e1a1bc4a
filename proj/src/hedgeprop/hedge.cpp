#include "hedgeprop/hedge.hpp"

#include <array>
#include <map>

#include "hedgeprop/errors.hpp"
#include "hedgeprop/term.hpp"

namespace hedgeprop {

int term_depth(const Term& t) {
  int d = 0;
  for (const auto& a : t.args) d = std::max(d, term_depth(a));
  return d + 1;
}

int term_size(const Term& t) {
  int n = 1;
  for (const auto& a : t.args) n += term_size(a);
  return n;
}

bool term_is_ground(const Term& t) {
  if (t.is_var()) return false;
  for (const auto& a : t.args)
    if (!term_is_ground(a)) return false;
  return true;
}

void collect_term_vars(const Term& t, std::set<uint32_t>& out) {
  if (t.is_var()) {
    out.insert(t.var);
    return;
  }
  for (const auto& a : t.args) collect_term_vars(a, out);
}

namespace {

std::strong_ordering compare_term_nodes(const Term& a, const Term& b) {
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  if (a.is_var()) return a.var <=> b.var;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (auto c = compare_term_nodes(a.args[i], b.args[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (auto c = term_size(a) <=> term_size(b); c != 0) return c;
  return compare_term_nodes(a, b);
}

std::string print_term(const Term& t, const Signature& sig) {
  if (t.is_var()) return "z" + std::to_string(t.var);
  std::string s = sig.at(t.symbol).name;
  if (!t.args.empty()) {
    s += '(';
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) s += ',';
      s += print_term(t.args[i], sig);
    }
    s += ')';
  }
  return s;
}

std::string print_variable(const Variable& v) {
  switch (v.kind) {
    case VarKind::constant: return "x" + std::to_string(v.id);
    case VarKind::term: return "z" + std::to_string(v.id);
    default: return "Z" + std::to_string(v.id);
  }
}

int hedge_depth(const Hedge& h) {
  if (h.is_leaf()) return 0;
  int d = 0;
  for (const auto& k : h.kids) d = std::max(d, hedge_depth(k));
  return d + 1;
}

int hedge_size(const Hedge& h) {
  int n = 1;
  for (const auto& k : h.kids) n += hedge_size(k);
  return n;
}

namespace {

void collect_vars(const Hedge& h, VarSets& out) {
  if (h.is_leaf()) {
    switch (h.var.kind) {
      case VarKind::constant: out.constant.insert(h.var.id); break;
      case VarKind::term: out.term.insert(h.var.id); break;
      case VarKind::hedge: out.hedge.insert(h.var.id); break;
    }
    return;
  }
  for (const auto& k : h.kids) collect_vars(k, out);
}

void collect_order(const Hedge& h, std::vector<Variable>& order, std::set<Variable>& seen) {
  if (h.is_leaf()) {
    if (seen.insert(h.var).second) order.push_back(h.var);
    return;
  }
  for (const auto& k : h.kids) collect_order(k, order, seen);
}

using Renaming = std::array<std::map<uint32_t, uint32_t>, 3>;

void rename_first_occurrence(Hedge& h, Renaming& map) {
  if (h.is_leaf()) {
    auto& m = map[static_cast<size_t>(h.var.kind)];
    auto [it, fresh] = m.emplace(h.var.id, static_cast<uint32_t>(m.size() + 1));
    h.var.id = it->second;
    return;
  }
  for (auto& k : h.kids) rename_first_occurrence(k, map);
}

std::strong_ordering compare_hedge_nodes(const Hedge& a, const Hedge& b) {
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  if (a.is_leaf()) return a.var <=> b.var;
  if (auto c = a.kids.size() <=> b.kids.size(); c != 0) return c;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (auto c = compare_hedge_nodes(a.kids[i], b.kids[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

VarSets vars_of(const Hedge& h) {
  VarSets out;
  collect_vars(h, out);
  return out;
}

std::vector<Variable> variables_in_order(const Hedge& h) {
  std::vector<Variable> order;
  std::set<Variable> seen;
  collect_order(h, order, seen);
  return order;
}

Hedge canonical_hedge(const Hedge& h) {
  Hedge copy = h;
  Renaming map;
  rename_first_occurrence(copy, map);
  return copy;
}

std::strong_ordering compare_hedges(const Hedge& a, const Hedge& b) {
  if (auto c = hedge_size(a) <=> hedge_size(b); c != 0) return c;
  return compare_hedge_nodes(a, b);
}

void validate_hedge(const Hedge& h, const LanguagePair& lp) {
  if (h.is_leaf()) {
    if (h.var.id == 0) fail(errc::parse_error, "variable ids start at 1");
    return;
  }
  if (h.symbol < 0 || h.symbol >= lp.size())
    fail(errc::unknown_symbol, "pair index " + std::to_string(h.symbol));
  int rank = lp.merged_rank(h.symbol);
  if (rank == 0)
    fail(errc::parse_error, "abstract hedges contain no constant symbols ('" +
                                lp.merged_name(h.symbol) + "' has rank 0)");
  if (static_cast<int>(h.kids.size()) != rank)
    fail(errc::arity_mismatch, "'" + lp.merged_name(h.symbol) + "' expects " +
                                   std::to_string(rank) + " children, got " +
                                   std::to_string(h.kids.size()));
  for (const auto& k : h.kids) validate_hedge(k, lp);
}

std::string print_hedge(const Hedge& h, const LanguagePair& lp) {
  if (h.is_leaf()) return print_variable(h.var);
  std::string s = lp.merged_name(h.symbol);
  s += '(';
  for (size_t i = 0; i < h.kids.size(); ++i) {
    if (i) s += ',';
    s += print_hedge(h.kids[i], lp);
  }
  s += ')';
  return s;
}

void canonicalize_pair(Hedge& lhs, Hedge& rhs) {
  Renaming map;
  rename_first_occurrence(lhs, map);
  rename_first_occurrence(rhs, map);
}

Justification Justification::make(Hedge lhs, Hedge rhs) {
  VarSets left = vars_of(lhs);
  for (const Variable& v : variables_in_order(rhs)) {
    if (v.kind != VarKind::constant && !left.contains(v))
      fail(errc::invalid_justification,
           "right side introduces " + print_variable(v) + " absent from the left side");
  }
  Justification j;
  j.lhs = std::move(lhs);
  j.rhs = std::move(rhs);
  canonicalize_pair(j.lhs, j.rhs);
  return j;
}

std::strong_ordering Justification::operator<=>(const Justification& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  if (auto c = compare_hedges(lhs, o.lhs); c != 0) return c;
  return compare_hedges(rhs, o.rhs);
}

std::string print_justification(const Justification& j, const LanguagePair& lp) {
  return print_hedge(j.lhs, lp) + " -> " + print_hedge(j.rhs, lp);
}

}  // namespace hedgeprop
