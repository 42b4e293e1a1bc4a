#include "hedgeprop/algebra.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "hedgeprop/errors.hpp"
#include "hedgeprop/parse.hpp"

namespace hedgeprop {

using nlohmann::json;

Algebra::Algebra(std::string name, Signature sig,
                 std::variant<NatSegment, FiniteUniverse> universe,
                 std::vector<Interpretation> interps)
    : name_(std::move(name)),
      sig_(std::move(sig)),
      universe_(std::move(universe)),
      interps_(std::move(interps)) {
  if (auto* fin = std::get_if<FiniteUniverse>(&universe_)) {
    for (Element i = 0; i < fin->elements.size(); ++i) {
      auto [it, fresh] = finite_index_.emplace(fin->elements[i], i);
      if (!fresh) fail(errc::parse_error, "universe element '" + fin->elements[i] + "' repeated");
    }
  }
  validate();
}

uint32_t Algebra::universe_size() const {
  if (auto* nat = std::get_if<NatSegment>(&universe_)) return nat->max + 1;
  return static_cast<uint32_t>(std::get<FiniteUniverse>(universe_).elements.size());
}

void Algebra::validate() const {
  if (sig_.size() == 0) fail(errc::parse_error, "algebra '" + name_ + "' declares no symbols");
  if (universe_size() == 0) fail(errc::parse_error, "algebra '" + name_ + "' has an empty universe");
  if (static_cast<int>(interps_.size()) != sig_.size())
    fail(errc::size_mismatch, "every symbol needs an interpretation");
  uint32_t n = universe_size();
  for (int i = 0; i < sig_.size(); ++i) {
    const SymbolDecl& d = sig_.at(i);
    const Interpretation& ip = interps_[static_cast<size_t>(i)];
    auto need_nat = [&](const char* b) {
      if (!is_nat_segment())
        fail(errc::rank_mismatch,
             "builtin '" + std::string(b) + "' ('" + d.name + "') needs a natural-number segment");
    };
    switch (ip.kind) {
      case Interpretation::Kind::succ:
        need_nat("succ");
        if (d.rank != 1) fail(errc::rank_mismatch, "'" + d.name + "': succ has rank 1");
        break;
      case Interpretation::Kind::plus:
      case Interpretation::Kind::times:
        need_nat("plus/times");
        if (d.rank != 2) fail(errc::rank_mismatch, "'" + d.name + "': plus/times have rank 2");
        break;
      case Interpretation::Kind::constant:
        if (d.rank != 0) fail(errc::rank_mismatch, "'" + d.name + "': constants have rank 0");
        if (ip.param >= n) fail(errc::partial_table, "'" + d.name + "': value outside the universe");
        break;
      case Interpretation::Kind::proj:
        if (d.rank < 1 || ip.param >= static_cast<uint32_t>(d.rank))
          fail(errc::rank_mismatch, "'" + d.name + "': projection argument out of range");
        break;
      case Interpretation::Kind::table: {
        double expected = std::pow(static_cast<double>(n), d.rank);
        if (expected > 1e7)
          fail(errc::parse_error, "'" + d.name + "': table over this universe would need " +
                                      std::to_string(expected) + " entries");
        if (ip.table.size() != static_cast<size_t>(expected))
          fail(errc::partial_table, "'" + d.name + "': table has " +
                                        std::to_string(ip.table.size()) + " entries, needs " +
                                        std::to_string(static_cast<size_t>(expected)));
        for (Element e : ip.table)
          if (e >= n) fail(errc::partial_table, "'" + d.name + "': table value outside the universe");
        break;
      }
    }
  }
}

std::optional<Element> Algebra::apply(int sym, std::span<const Element> args) const {
  const Interpretation& ip = interps_[static_cast<size_t>(sym)];
  uint32_t n = universe_size();
  switch (ip.kind) {
    case Interpretation::Kind::succ: {
      uint64_t v = static_cast<uint64_t>(args[0]) + 1;
      if (v >= n) return std::nullopt;
      return static_cast<Element>(v);
    }
    case Interpretation::Kind::plus: {
      uint64_t v = static_cast<uint64_t>(args[0]) + args[1];
      if (v >= n) return std::nullopt;
      return static_cast<Element>(v);
    }
    case Interpretation::Kind::times: {
      uint64_t v = static_cast<uint64_t>(args[0]) * args[1];
      if (v >= n) return std::nullopt;
      return static_cast<Element>(v);
    }
    case Interpretation::Kind::constant: return ip.param;
    case Interpretation::Kind::proj: return args[ip.param];
    case Interpretation::Kind::table: {
      size_t idx = 0;
      for (Element a : args) idx = idx * n + a;
      return ip.table[idx];
    }
  }
  return std::nullopt;
}

std::string Algebra::element_name(Element e) const {
  if (is_nat_segment()) return std::to_string(e);
  return std::get<FiniteUniverse>(universe_).elements[e];
}

std::optional<Element> Algebra::element_of_name(const std::string& name) const {
  if (is_nat_segment()) {
    if (name.empty()) return std::nullopt;
    uint64_t v = 0;
    for (char c : name) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + static_cast<uint64_t>(c - '0');
      if (v > std::get<NatSegment>(universe_).max) return std::nullopt;
    }
    return static_cast<Element>(v);
  }
  auto it = finite_index_.find(name);
  if (it == finite_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& msg) {
  fail(errc::parse_error, origin + ": " + msg);
}

Element element_from_json(const json& v, const Algebra* finite_lookup, uint32_t n,
                          const std::string& origin, const std::string& what) {
  if (v.is_number_unsigned()) {
    uint64_t e = v.get<uint64_t>();
    if (e >= n) fail(errc::partial_table, origin + ": " + what + " outside the universe");
    return static_cast<Element>(e);
  }
  if (v.is_string() && finite_lookup) {
    if (auto e = finite_lookup->element_of_name(v.get<std::string>())) return *e;
    fail(errc::partial_table, origin + ": " + what + " '" + v.get<std::string>() +
                                  "' is not a universe element");
  }
  bad(origin, what + " must be an element index or name");
}

}  // namespace

Algebra Algebra::from_json_text(const std::string& text, const std::string& origin,
                                std::optional<uint32_t> max_universe) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad(origin, e.what());
  }
  if (!doc.is_object()) bad(origin, "top level must be an object");
  std::string name = doc.value("name", origin);

  std::variant<NatSegment, FiniteUniverse> universe;
  if (!doc.contains("universe")) bad(origin, "missing 'universe'");
  const json& uni = doc["universe"];
  std::string kind = uni.value("kind", "");
  if (kind == "nat") {
    NatSegment seg;
    seg.max = uni.value("max", seg.max);
    if (max_universe) seg.max = *max_universe;
    universe = seg;
  } else if (kind == "finite") {
    FiniteUniverse fin;
    if (!uni.contains("elements") || !uni["elements"].is_array())
      bad(origin, "finite universe needs an 'elements' array");
    for (const json& e : uni["elements"]) {
      if (!e.is_string()) bad(origin, "universe elements must be strings");
      fin.elements.push_back(e.get<std::string>());
    }
    universe = fin;
  } else {
    bad(origin, "universe kind must be 'nat' or 'finite'");
  }

  // A throwaway carrier-only algebra so tables can name finite elements.
  std::optional<Algebra> lookup;
  uint32_t n = 0;
  if (auto* fin = std::get_if<FiniteUniverse>(&universe)) {
    n = static_cast<uint32_t>(fin->elements.size());
    if (n == 0) bad(origin, "finite universe is empty");
    lookup.emplace(name, Signature({{"e", 0}}), *fin,
                   std::vector<Interpretation>{{Interpretation::Kind::constant, 0, {}}});
  } else {
    n = std::get<NatSegment>(universe).max + 1;
  }

  if (!doc.contains("symbols") || !doc["symbols"].is_array() || doc["symbols"].empty())
    bad(origin, "missing non-empty 'symbols' array");
  std::vector<SymbolDecl> decls;
  std::vector<Interpretation> interps;
  for (const json& s : doc["symbols"]) {
    SymbolDecl d;
    d.name = s.value("name", "");
    if (!is_valid_symbol_name(d.name))
      bad(origin, "bad symbol name '" + d.name + "' (allowed: letters, digits, _ + *)");
    if (is_reserved_name(d.name))
      bad(origin, "symbol name '" + d.name + "' is a reserved variable spelling");
    if (!s.contains("rank") || !s["rank"].is_number_unsigned())
      bad(origin, "'" + d.name + "' needs an unsigned 'rank'");
    uint64_t rank = s["rank"].get<uint64_t>();
    if (rank > 8) bad(origin, "'" + d.name + "': rank " + std::to_string(rank) + " is too large");
    d.rank = static_cast<int>(rank);

    if (!s.contains("interp") || !s["interp"].is_object())
      bad(origin, "'" + d.name + "' needs an 'interp' object");
    const json& ip = s["interp"];
    Interpretation out;
    if (ip.contains("builtin")) {
      std::string b = ip["builtin"].get<std::string>();
      if (b == "succ") {
        out.kind = Interpretation::Kind::succ;
      } else if (b == "plus") {
        out.kind = Interpretation::Kind::plus;
      } else if (b == "times") {
        out.kind = Interpretation::Kind::times;
      } else if (b == "const") {
        out.kind = Interpretation::Kind::constant;
        if (!ip.contains("value")) bad(origin, "'" + d.name + "': const needs 'value'");
        out.param = element_from_json(ip["value"], lookup ? &*lookup : nullptr, n, origin,
                                      "constant value");
      } else if (b == "proj") {
        out.kind = Interpretation::Kind::proj;
        out.param = ip.value("arg", 0u);
      } else {
        fail(errc::unknown_builtin, origin + ": '" + b + "' ('" + d.name + "')");
      }
    } else if (ip.contains("table")) {
      out.kind = Interpretation::Kind::table;
      if (!ip["table"].is_array()) bad(origin, "'" + d.name + "': 'table' must be an array");
      for (const json& v : ip["table"])
        out.table.push_back(
            element_from_json(v, lookup ? &*lookup : nullptr, n, origin, "table value"));
    } else {
      bad(origin, "'" + d.name + "': interp needs 'builtin' or 'table'");
    }
    decls.push_back(std::move(d));
    interps.push_back(std::move(out));
  }
  return Algebra(std::move(name), Signature(std::move(decls)), std::move(universe),
                 std::move(interps));
}

Algebra Algebra::load_file(const std::string& path, std::optional<uint32_t> max_universe) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), path, max_universe);
}

std::optional<Element> evaluate_opt(const Term& t, const Algebra& alg,
                                    const std::map<uint32_t, Element>& assignment) {
  if (t.is_var()) {
    auto it = assignment.find(t.var);
    if (it == assignment.end())
      fail(errc::unbound_variable, "z" + std::to_string(t.var) + " has no assigned element");
    return it->second;
  }
  std::vector<Element> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) {
    auto v = evaluate_opt(a, alg, assignment);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  return alg.apply(t.symbol, args);
}

Element evaluate(const Term& t, const Algebra& alg, const std::map<uint32_t, Element>& assignment) {
  auto v = evaluate_opt(t, alg, assignment);
  if (!v)
    fail(errc::out_of_universe,
         "'" + print_term(t, alg.signature()) + "' leaves the bounded universe");
  return *v;
}

namespace {

// Calls fn(values) for every total assignment, where `values` is keyed by the
// term's variable ids; returns false early when fn does.
bool for_each_assignment(const std::vector<uint32_t>& vars, uint32_t n,
                         const std::function<bool(const std::map<uint32_t, Element>&)>& fn) {
  std::map<uint32_t, Element> values;
  for (uint32_t v : vars) values[v] = 0;
  while (true) {
    if (!fn(values)) return false;
    size_t i = 0;
    for (; i < vars.size(); ++i) {
      Element& e = values[vars[i]];
      if (++e < n) break;
      e = 0;
    }
    if (i == vars.size()) return true;
  }
}

}  // namespace

bool is_injective_term(const Term& t, const Algebra& alg) {
  std::set<uint32_t> var_set;
  collect_term_vars(t, var_set);
  std::vector<uint32_t> vars(var_set.begin(), var_set.end());
  std::set<Element> seen;
  return for_each_assignment(vars, alg.universe_size(), [&](const auto& values) {
    auto v = evaluate_opt(t, alg, values);
    if (!v) return true;  // outside the carrier: point skipped
    return seen.insert(*v).second;
  });
}

bool is_constant_term(const Term& t, const Algebra& alg) {
  std::set<uint32_t> var_set;
  collect_term_vars(t, var_set);
  std::vector<uint32_t> vars(var_set.begin(), var_set.end());
  std::optional<Element> common;
  return for_each_assignment(vars, alg.universe_size(), [&](const auto& values) {
    auto v = evaluate_opt(t, alg, values);
    if (!v) return true;
    if (!common) common = *v;
    return *common == *v;
  });
}

LanguagePair pairing_from_json_text(const std::string& text, const std::string& origin,
                                    const Algebra& source, const Algebra& target) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad(origin, e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    bad(origin, "pairing needs a 'pairs' array");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const json& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      bad(origin, "each pair must be [source-symbol, target-symbol]");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return LanguagePair::build(source.signature(), target.signature(), pairs);
}

LanguagePair load_pairing_file(const std::string& path, const Algebra& source,
                               const Algebra& target) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return pairing_from_json_text(buf.str(), path, source, target);
}

}  // namespace hedgeprop
