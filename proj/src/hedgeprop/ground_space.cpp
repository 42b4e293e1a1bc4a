#include "hedgeprop/ground_space.hpp"

#include <algorithm>
#include <cmath>

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

GroundSpace enumerate_ground_space(const Algebra& alg, int term_depth) {
  if (term_depth < 1) fail(errc::empty_space, "term depth must be at least 1");
  GroundSpace out;
  out.depth = term_depth;
  const Signature& sig = alg.signature();

  // terms grouped by exact depth, with their values; only in-carrier terms
  // are kept, so arguments never evaluate outside the carrier.
  std::vector<std::vector<std::pair<Term, Element>>> by_depth(
      static_cast<size_t>(term_depth) + 1);

  for (int s = 0; s < sig.size(); ++s) {
    if (sig.at(s).rank != 0) continue;
    Term t = make_term(s);
    if (auto v = alg.apply(s, {})) by_depth[1].emplace_back(std::move(t), *v);
  }

  for (int d = 2; d <= term_depth; ++d) {
    std::vector<std::pair<Term, Element>> pool;  // depth <= d-1
    for (int d2 = 1; d2 < d; ++d2)
      pool.insert(pool.end(), by_depth[static_cast<size_t>(d2)].begin(),
                  by_depth[static_cast<size_t>(d2)].end());
    if (pool.empty()) continue;
    size_t deep_start = pool.size() - by_depth[static_cast<size_t>(d - 1)].size();
    if (by_depth[static_cast<size_t>(d - 1)].empty()) continue;  // no exact-depth-d terms
    for (int s = 0; s < sig.size(); ++s) {
      int rank = sig.at(s).rank;
      if (rank == 0) continue;
      double projected = std::pow(static_cast<double>(pool.size()), rank);
      if (projected > 2e6)
        fail(errc::parse_error, "ground term enumeration for '" + sig.at(s).name +
                                    "' would visit " + std::to_string(projected) + " tuples");
      std::vector<size_t> idx(static_cast<size_t>(rank), 0);
      while (true) {
        // exact depth d: at least one argument from the deepest layer
        if (std::any_of(idx.begin(), idx.end(), [&](size_t i) { return i >= deep_start; })) {
          std::vector<Term> args;
          std::vector<Element> vals;
          args.reserve(idx.size());
          for (size_t i : idx) {
            args.push_back(pool[i].first);
            vals.push_back(pool[i].second);
          }
          if (auto v = alg.apply(s, vals))
            by_depth[static_cast<size_t>(d)].emplace_back(make_term(s, std::move(args)), *v);
        }
        size_t k = 0;
        for (; k < idx.size(); ++k) {
          if (++idx[k] < pool.size()) break;
          idx[k] = 0;
        }
        if (k == idx.size()) break;
      }
    }
  }

  for (int d = 1; d <= term_depth; ++d) {
    for (auto& [t, v] : by_depth[static_cast<size_t>(d)]) {
      out.members[v].push_back(static_cast<int>(out.terms.size()));
      out.terms.push_back(std::move(t));
      out.term_values.push_back(v);
    }
  }
  if (out.terms.empty())
    fail(errc::empty_space, "no ground term of '" + alg.name() + "' fits depth " +
                                std::to_string(term_depth));

  for (const auto& [value, idxs] : out.members) {
    out.class_keys.push_back(value);
    const Term* best = &out.terms[static_cast<size_t>(idxs[0])];
    std::string best_print = print_term(*best, sig);
    int best_size = term_size(*best);
    for (size_t i = 1; i < idxs.size(); ++i) {
      const Term& t = out.terms[static_cast<size_t>(idxs[i])];
      int sz = term_size(t);
      if (sz > best_size) continue;
      std::string p = print_term(t, sig);
      if (sz < best_size || p < best_print) {
        best = &t;
        best_size = sz;
        best_print = std::move(p);
      }
    }
    out.representative.emplace(value, *best);
  }
  return out;
}

}  // namespace hedgeprop
