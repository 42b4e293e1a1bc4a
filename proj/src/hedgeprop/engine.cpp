#include "hedgeprop/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <tuple>

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

const JustificationSet Engine::empty_set_{};

std::set<Justification> JustificationSet::nontrivial() const {
  std::set<Justification> out;
  for (const auto& j : members)
    if (!trivial.count(j)) out.insert(j);
  return out;
}

namespace {

int resolve_thread_count() {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  if (const char* env = std::getenv("HEDGEPROP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) t = static_cast<int>(v);
  }
  return std::clamp(t, 1, 64);
}

// Evaluates an abstract hedge on one side under denotation-level images
// (elements for z/hedge variables, rank-0 pair indices for x-variables,
// kLambda for an empty-hedge image).  Deleted positions fall out; a child
// count that misses the side rank or a carrier exit yields kUndef.
template <typename Resolver>
int64_t eval_hedge(const Hedge& h, const LanguagePair& lp, const Algebra& alg, Side s,
                   const Resolver& value_of) {
  if (h.is_leaf()) {
    if (h.var.kind == VarKind::constant) {
      int64_t p = value_of(h.var);
      if (p < 0 || lp.rank(s, static_cast<int>(p)) != 0) return kUndef;
      auto v = alg.apply(lp.side_symbol(s, static_cast<int>(p)), {});
      return v ? static_cast<int64_t>(*v) : kUndef;
    }
    return value_of(h.var);
  }
  std::vector<Element> args;
  args.reserve(h.kids.size());
  for (const auto& k : h.kids) {
    int64_t v = eval_hedge(k, lp, alg, s, value_of);
    if (v == kUndef) return kUndef;
    if (v == kLambda) continue;  // deleted position
    args.push_back(static_cast<Element>(v));
  }
  if (static_cast<int>(args.size()) != lp.rank(s, h.symbol)) return kUndef;
  auto v = alg.apply(lp.side_symbol(s, h.symbol), args);
  return v ? static_cast<int64_t>(*v) : kUndef;
}

// All injective maps of slots 1..n into pool ids 1..pool.
void each_injection(int n, int pool, std::vector<uint32_t>& map, std::vector<bool>& used, int k,
                    const std::function<void()>& done) {
  if (k == n) {
    done();
    return;
  }
  for (int p = 1; p <= pool; ++p) {
    if (used[static_cast<size_t>(p)]) continue;
    used[static_cast<size_t>(p)] = true;
    map[static_cast<size_t>(k)] = static_cast<uint32_t>(p);
    each_injection(n, pool, map, used, k + 1, done);
    used[static_cast<size_t>(p)] = false;
  }
}

// x-slots may also take fresh ids past the pool, introduced in slot order so
// every renaming class appears exactly once.
void each_x_injection(int n, int pool, int fresh_used, std::vector<uint32_t>& map,
                      std::vector<bool>& used, int k, const std::function<void()>& done) {
  if (k == n) {
    done();
    return;
  }
  for (int p = 1; p <= pool; ++p) {
    if (used[static_cast<size_t>(p)]) continue;
    used[static_cast<size_t>(p)] = true;
    map[static_cast<size_t>(k)] = static_cast<uint32_t>(p);
    each_x_injection(n, pool, fresh_used, map, used, k + 1, done);
    used[static_cast<size_t>(p)] = false;
  }
  map[static_cast<size_t>(k)] = static_cast<uint32_t>(pool + fresh_used + 1);
  each_x_injection(n, pool, fresh_used + 1, map, used, k + 1, done);
}

void rewrite_leaf_ids(Hedge& h, const std::vector<uint32_t>& zmap,
                      const std::vector<uint32_t>& zhmap, const std::vector<uint32_t>& xmap) {
  if (h.is_leaf()) {
    switch (h.var.kind) {
      case VarKind::term: h.var.id = zmap[h.var.id - 1]; break;
      case VarKind::hedge: h.var.id = zhmap[h.var.id - 1]; break;
      case VarKind::constant: h.var.id = xmap[h.var.id - 1]; break;
    }
    return;
  }
  for (auto& k : h.kids) rewrite_leaf_ids(k, zmap, zhmap, xmap);
}

}  // namespace

// One rhs instance over an lhs hedge's variable pool: the instantiated rhs,
// and for each of its distinct variables either the lhs row slot or the
// fresh-x odometer position supplying its image.
struct Engine::Candidate {
  Hedge rhs;
  std::map<Variable, std::pair<bool, size_t>> align;  // true: lhs slot, false: fresh idx
  int nfresh = 0;
};

Engine::Engine(const Algebra& source, const Algebra& target, LanguagePair lp, Bounds bounds)
    : lp_(std::move(lp)), bounds_(bounds) {
  algs_[0] = &source;
  algs_[1] = &target;
  swapped_lp_ = lp_.swapped();
  spaces_[0] = enumerate_ground_space(source, bounds_.term_depth);
  spaces_[1] = enumerate_ground_space(target, bounds_.term_depth);
  HedgeEnumeration en = enumerate_hedges(lp_, bounds_);
  hedges_ = std::move(en.hedges);
  hedges_truncated_ = en.truncated;
  for (int i = 0; i < static_cast<int>(hedges_.size()); ++i)
    hedge_index_.emplace(hedges_[static_cast<size_t>(i)], i);
  bucket_cache_[0].resize(hedges_.size());
  bucket_cache_[1].resize(hedges_.size());
  threads_ = resolve_thread_count();
}

Element Engine::resolve(Side s, const Term& t) const {
  if (!term_is_ground(t))
    fail(errc::unbound_variable,
         "'" + print_term(t, algebra(s).signature()) + "' must be ground here");
  return evaluate(t, algebra(s));
}

Term Engine::representative(Side s, Element e) const {
  const GroundSpace& sp = space(s);
  auto it = sp.representative.find(e);
  if (it == sp.representative.end())
    fail(errc::out_of_universe, "no ground term within depth " + std::to_string(sp.depth) +
                                    " denotes " + algebra(s).element_name(e) + " on the " +
                                    side_name(s) + " side");
  return it->second;
}

MatchBuckets Engine::compute_buckets(const Hedge& h, Side s) const {
  MatchBuckets out;
  out.vars = variables_in_order(h);
  const Algebra& alg = algebra(s);
  const GroundSpace& sp = space(s);

  std::vector<std::vector<int64_t>> domain;
  domain.reserve(out.vars.size());
  for (const Variable& v : out.vars) {
    std::vector<int64_t> d;
    switch (v.kind) {
      case VarKind::constant:
        for (int p : lp_.rank0_indices(s)) d.push_back(p);
        break;
      case VarKind::term:
        for (Element e : sp.class_keys) d.push_back(static_cast<int64_t>(e));
        break;
      case VarKind::hedge:
        d.push_back(kLambda);  // the empty hedge comes first
        for (Element e : sp.class_keys) d.push_back(static_cast<int64_t>(e));
        break;
    }
    if (d.empty()) return out;
    domain.push_back(std::move(d));
  }

  std::map<Variable, size_t> slot;
  for (size_t i = 0; i < out.vars.size(); ++i) slot.emplace(out.vars[i], i);

  Row row(out.vars.size());
  std::vector<size_t> idx(out.vars.size(), 0);
  while (true) {
    for (size_t i = 0; i < row.size(); ++i) row[i] = domain[i][idx[i]];
    int64_t val =
        eval_hedge(h, lp_, alg, s, [&](const Variable& v) { return row[slot.at(v)]; });
    if (val >= 0) {
      auto& bucket = out.by_value[static_cast<Element>(val)];
      if (static_cast<int>(bucket.size()) < bounds_.max_substitutions_per_match)
        bucket.push_back(row);
      else
        out.truncated = true;
    }
    size_t k = 0;
    for (; k < idx.size(); ++k) {
      if (++idx[k] < domain[k].size()) break;
      idx[k] = 0;
    }
    if (k == idx.size()) break;
  }
  return out;
}

int64_t Engine::eval_on(const Hedge& h, Side s,
                        const std::function<int64_t(const Variable&)>& value_of) const {
  return eval_hedge(h, lp_, algebra(s), s, value_of);
}

const MatchBuckets& Engine::buckets(int hedge_idx, Side s) {
  auto& cell = bucket_cache_[side_index(s)][static_cast<size_t>(hedge_idx)];
  if (!cell)
    cell = std::make_unique<MatchBuckets>(
        compute_buckets(hedges_[static_cast<size_t>(hedge_idx)], s));
  return *cell;
}

std::vector<Substitution> Engine::match_hedge(const Hedge& h, Element e, Side s,
                                              bool* truncated) {
  MatchBuckets B = compute_buckets(h, s);
  if (truncated) *truncated = B.truncated;
  std::vector<Substitution> out;
  auto it = B.by_value.find(e);
  if (it == B.by_value.end()) return out;
  for (const Row& row : it->second) {
    Substitution sub;
    sub.side = s;
    for (size_t k = 0; k < B.vars.size(); ++k) {
      const Variable& v = B.vars[k];
      switch (v.kind) {
        case VarKind::constant:
          sub.constant_map[v.id] = static_cast<int32_t>(row[k]);
          break;
        case VarKind::term:
          sub.term_map[v.id] = representative(s, static_cast<Element>(row[k]));
          break;
        case VarKind::hedge:
          if (row[k] == kLambda)
            sub.hedge_map[v.id] = std::nullopt;
          else
            sub.hedge_map[v.id] = representative(s, static_cast<Element>(row[k]));
          break;
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<Engine::Candidate> Engine::candidates_for(int lhs_idx) const {
  const Hedge& lhs = hedges_[static_cast<size_t>(lhs_idx)];
  VarSets pools = vars_of(lhs);
  // canonical hedges use ids 1..n per kind
  int Pz = static_cast<int>(pools.term.size());
  int Pzh = static_cast<int>(pools.hedge.size());
  int Px = static_cast<int>(pools.constant.size());

  std::map<Variable, size_t> lhs_slot;
  {
    auto order = variables_in_order(lhs);
    for (size_t i = 0; i < order.size(); ++i) lhs_slot.emplace(order[i], i);
  }

  std::vector<Candidate> out;
  for (const Hedge& shape : hedges_) {
    VarSets sv = vars_of(shape);
    int nz = static_cast<int>(sv.term.size());
    int nzh = static_cast<int>(sv.hedge.size());
    int nx = static_cast<int>(sv.constant.size());
    if (nz > Pz || nzh > Pzh) continue;

    std::vector<uint32_t> zmap(static_cast<size_t>(nz)), zhmap(static_cast<size_t>(nzh)),
        xmap(static_cast<size_t>(nx));
    std::vector<bool> zused(static_cast<size_t>(Pz) + 1, false),
        zhused(static_cast<size_t>(Pzh) + 1, false),
        xused(static_cast<size_t>(Px) + 1, false);

    auto emit = [&] {
      Candidate c;
      c.rhs = shape;
      rewrite_leaf_ids(c.rhs, zmap, zhmap, xmap);
      for (const Variable& v : variables_in_order(c.rhs)) {
        if (v.kind == VarKind::constant && v.id > static_cast<uint32_t>(Px)) {
          c.align[v] = {false, v.id - static_cast<uint32_t>(Px) - 1};
          c.nfresh = std::max(c.nfresh, static_cast<int>(v.id) - Px);
        } else {
          c.align[v] = {true, lhs_slot.at(v)};
        }
      }
      out.push_back(std::move(c));
    };
    each_injection(nz, Pz, zmap, zused, 0, [&] {
      each_injection(nzh, Pzh, zhmap, zhused, 0, [&] {
        each_x_injection(nx, Px, 0, xmap, xused, 0, emit);
      });
    });
  }
  return out;
}

namespace {

// Cartesian walk over fresh-x images (pair indices from `xdom`).
template <typename Fn>
bool for_each_fresh(int nfresh, const std::vector<int>& xdom, std::vector<int64_t>& fresh,
                    int k, const Fn& fn) {
  if (k == nfresh) return fn();
  for (int p : xdom) {
    fresh[static_cast<size_t>(k)] = p;
    if (for_each_fresh(nfresh, xdom, fresh, k + 1, fn)) return true;
  }
  return false;
}

}  // namespace

const JustificationSet& Engine::jus_arrow(Side s, Element a, Element b) {
  auto key = std::make_tuple(side_index(s), a, b);
  if (auto it = jus_single_.find(key); it != jus_single_.end()) return it->second;

  JustificationSet result;
  std::vector<int> xdom = lp_.rank0_indices(s);
  for (int i = 0; i < static_cast<int>(hedges_.size()); ++i) {
    const MatchBuckets& B = buckets(i, s);
    auto rit = B.by_value.find(a);
    if (rit == B.by_value.end()) continue;
    result.truncated = result.truncated || B.truncated;
    const std::vector<Row>& rows = rit->second;
    for (const Candidate& c : candidates_for(i)) {
      std::vector<int64_t> fresh(static_cast<size_t>(c.nfresh));
      bool found = false;
      for (const Row& row : rows) {
        auto value_of = [&](const Variable& v) -> int64_t {
          const auto& [from_lhs, idx] = c.align.at(v);
          return from_lhs ? row[idx] : fresh[idx];
        };
        found = for_each_fresh(c.nfresh, xdom, fresh, 0, [&] {
          return eval_hedge(c.rhs, lp_, algebra(s), s, value_of) ==
                 static_cast<int64_t>(b);
        });
        if (found) break;
      }
      if (found)
        result.members.insert(
            Justification::make(hedges_[static_cast<size_t>(i)], c.rhs));
    }
  }
  fill_trivial_flags(result, /*pair_scope=*/false, s);
  return jus_single_.emplace(key, std::move(result)).first->second;
}

const std::map<Element, JustificationSet>& Engine::jus_pair_all(Orientation o, Element a,
                                                                Element b, Element c) {
  auto key = std::make_tuple(static_cast<int>(o), a, b, c);
  if (auto it = jus_pair_.find(key); it != jus_pair_.end()) return it->second;

  Side ss = source_of(o), ts = target_of(o);
  std::vector<int> xdom = lp_.shared_rank0_indices();
  std::set<int64_t> shared(xdom.begin(), xdom.end());

  struct Local {
    std::map<Element, std::set<Justification>> by_d;
    bool truncated = false;
  };

  int n = static_cast<int>(hedges_.size());
  auto work = [&](int first, int step, Local& L) {
    for (int i = first; i < n; i += step) {
      const MatchBuckets& BA = buckets(i, ss);
      const MatchBuckets& BB = buckets(i, ts);
      auto ra = BA.by_value.find(a);
      auto rc = BB.by_value.find(c);
      if (ra == BA.by_value.end() || rc == BB.by_value.end()) continue;
      L.truncated = L.truncated || BA.truncated || BB.truncated;

      // x positions of the lhs row layout; a pair substitution shares the
      // x-part, restricted to indices of rank 0 on both sides
      std::vector<size_t> xpos;
      for (size_t k = 0; k < BA.vars.size(); ++k)
        if (BA.vars[k].kind == VarKind::constant) xpos.push_back(k);
      auto group = [&](const std::vector<Row>& rows) {
        std::map<std::vector<int64_t>, std::vector<const Row*>> g;
        for (const Row& r : rows) {
          std::vector<int64_t> kx;
          kx.reserve(xpos.size());
          bool ok = true;
          for (size_t k : xpos) {
            if (!shared.count(r[k])) {
              ok = false;
              break;
            }
            kx.push_back(r[k]);
          }
          if (ok) g[std::move(kx)].push_back(&r);
        }
        return g;
      };
      auto GA = group(ra->second);
      auto GB = group(rc->second);
      if (GA.empty() || GB.empty()) continue;

      for (const Candidate& cand : candidates_for(i)) {
        std::vector<int64_t> fresh(static_cast<size_t>(cand.nfresh));
        for (const auto& [xkey, rowsA] : GA) {
          auto gb = GB.find(xkey);
          if (gb == GB.end()) continue;
          for_each_fresh(cand.nfresh, xdom, fresh, 0, [&] {
            bool any_b = false;
            for (const Row* rowA : rowsA) {
              auto value_of = [&](const Variable& v) -> int64_t {
                const auto& [from_lhs, idx] = cand.align.at(v);
                return from_lhs ? (*rowA)[idx] : fresh[idx];
              };
              if (eval_hedge(cand.rhs, lp_, algebra(ss), ss, value_of) ==
                  static_cast<int64_t>(b)) {
                any_b = true;
                break;
              }
            }
            if (!any_b) return false;
            for (const Row* rowB : gb->second) {
              auto value_of = [&](const Variable& v) -> int64_t {
                const auto& [from_lhs, idx] = cand.align.at(v);
                return from_lhs ? (*rowB)[idx] : fresh[idx];
              };
              int64_t d = eval_hedge(cand.rhs, lp_, algebra(ts), ts, value_of);
              if (d >= 0)
                L.by_d[static_cast<Element>(d)].insert(
                    Justification::make(hedges_[static_cast<size_t>(i)], cand.rhs));
            }
            return false;  // keep scanning every fresh choice
          });
        }
      }
    }
  };

  std::vector<Local> locals;
  int T = (threads_ > 1 && n >= 32) ? threads_ : 1;
  locals.resize(static_cast<size_t>(T));
  if (T == 1) {
    work(0, 1, locals[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<size_t>(T - 1));
    for (int t = 1; t < T; ++t)
      pool.emplace_back([&, t] { work(t, T, locals[static_cast<size_t>(t)]); });
    work(0, T, locals[0]);
  }

  std::map<Element, JustificationSet> merged;
  bool truncated = false;
  for (Local& L : locals) {
    truncated = truncated || L.truncated;
    for (auto& [d, set] : L.by_d)
      merged[d].members.insert(set.begin(), set.end());
  }
  for (auto& [d, set] : merged) {
    set.truncated = truncated;
    fill_trivial_flags(set, /*pair_scope=*/true, Side::source);
  }
  return jus_pair_.emplace(key, std::move(merged)).first->second;
}

const JustificationSet& Engine::jus_arrow_pair(Orientation o, Element a, Element b, Element c,
                                               Element d) {
  const auto& all = jus_pair_all(o, a, b, c);
  auto it = all.find(d);
  return it == all.end() ? empty_set_ : it->second;
}

void Engine::fill_trivial_flags(JustificationSet& set, bool pair_scope, Side s) {
  for (const Justification& j : set.members) {
    bool t = pair_scope ? is_trivial_pair(j) : is_trivial(j, s);
    if (t) set.trivial.insert(j);
  }
}

bool Engine::is_trivial(const Justification& j, Side s) {
  auto& cell = trivial_[j][static_cast<size_t>(side_index(s))];
  if (cell) return *cell;

  const GroundSpace& sp = space(s);
  const MatchBuckets* B = nullptr;
  MatchBuckets local;
  if (auto it = hedge_index_.find(j.lhs); it != hedge_index_.end()) {
    B = &buckets(it->second, s);
  } else {
    local = compute_buckets(j.lhs, s);
    B = &local;
  }

  // rhs variables beyond the lhs pool are fresh x-variables
  uint32_t px = static_cast<uint32_t>(vars_of(j.lhs).constant.size());
  std::map<Variable, size_t> lhs_slot;
  {
    auto order = variables_in_order(j.lhs);
    for (size_t i = 0; i < order.size(); ++i) lhs_slot.emplace(order[i], i);
  }
  int nfresh = 0;
  std::map<Variable, std::pair<bool, size_t>> align;
  for (const Variable& v : variables_in_order(j.rhs)) {
    if (v.kind == VarKind::constant && v.id > px) {
      align[v] = {false, v.id - px - 1};
      nfresh = std::max(nfresh, static_cast<int>(v.id - px));
    } else {
      align[v] = {true, lhs_slot.at(v)};
    }
  }
  std::vector<int> xdom = lp_.rank0_indices(s);

  std::set<Element> classes(sp.class_keys.begin(), sp.class_keys.end());
  bool result = true;
  for (Element aa : sp.class_keys) {
    auto rit = B->by_value.find(aa);
    if (rit == B->by_value.end()) {
      result = false;
      break;
    }
    std::set<Element> reached;  // class values only
    std::vector<int64_t> fresh(static_cast<size_t>(nfresh));
    for (const Row& row : rit->second) {
      auto value_of = [&](const Variable& v) -> int64_t {
        const auto& [from_lhs, idx] = align.at(v);
        return from_lhs ? row[idx] : fresh[idx];
      };
      for_each_fresh(nfresh, xdom, fresh, 0, [&] {
        int64_t v = eval_hedge(j.rhs, lp_, algebra(s), s, value_of);
        if (v >= 0 && classes.count(static_cast<Element>(v)))
          reached.insert(static_cast<Element>(v));
        return reached.size() == classes.size();
      });
      if (reached.size() == classes.size()) break;
    }
    if (reached.size() != classes.size()) {
      result = false;
      break;
    }
  }
  cell = result;
  return result;
}

bool Engine::is_trivial_pair(const Justification& j) {
  return is_trivial(j, Side::source) && is_trivial(j, Side::target);
}

}  // namespace hedgeprop
