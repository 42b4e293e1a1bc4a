#include "hedgeprop/proportion.hpp"

#include <algorithm>
#include <functional>

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

namespace {

struct RhsAlign {
  std::map<Variable, std::pair<bool, size_t>> slots;  // true: lhs row slot, false: fresh idx
  int nfresh = 0;
};

RhsAlign align_rhs(const Justification& j, const std::vector<Variable>& lhs_order) {
  RhsAlign a;
  std::map<Variable, size_t> slot;
  for (size_t i = 0; i < lhs_order.size(); ++i) slot.emplace(lhs_order[i], i);
  uint32_t px = static_cast<uint32_t>(vars_of(j.lhs).constant.size());
  for (const Variable& v : variables_in_order(j.rhs)) {
    if (v.kind == VarKind::constant && v.id > px) {
      a.slots[v] = {false, v.id - px - 1};
      a.nfresh = std::max(a.nfresh, static_cast<int>(v.id - px));
    } else {
      a.slots[v] = {true, slot.at(v)};
    }
  }
  return a;
}

// Visits every side-local ground assignment of j's variables as the pair
// (lhs value, rhs value), rhs possibly kUndef/kLambda.
void sweep_justification(Engine& eng, Side s, const Justification& j,
                         const std::function<void(Element, int64_t)>& fn) {
  MatchBuckets B = eng.compute_buckets(j.lhs, s);
  RhsAlign A = align_rhs(j, B.vars);
  const std::vector<int>& xdom = eng.pair().rank0_indices(s);
  std::vector<int64_t> fresh(static_cast<size_t>(A.nfresh));

  for (const auto& [lhs_value, rows] : B.by_value) {
    for (const Row& row : rows) {
      std::function<void(int)> rec = [&](int k) {
        if (k == A.nfresh) {
          auto value_of = [&](const Variable& v) -> int64_t {
            const auto& [from_lhs, idx] = A.slots.at(v);
            return from_lhs ? row[idx] : fresh[idx];
          };
          fn(lhs_value, eng.eval_on(j.rhs, s, value_of));
          return;
        }
        for (int p : xdom) {
          fresh[static_cast<size_t>(k)] = p;
          rec(k + 1);
        }
      };
      rec(0);
    }
  }
}

}  // namespace

ArrowVerdict holds_arrow(Engine& eng, Orientation o, Element a, Element b, Element c,
                         Element d) {
  ArrowVerdict v;
  v.orientation = o;
  v.a = a;
  v.b = b;
  v.c = c;
  v.d = d;
  v.hedges_truncated = eng.hedges_truncated();

  const JustificationSet& sA = eng.jus_arrow(source_of(o), a, b);
  const JustificationSet& sB = eng.jus_arrow(target_of(o), c, d);
  v.single_source_size = sA.members.size();
  v.single_target_size = sB.members.size();
  v.sets_truncated = sA.truncated || sB.truncated;

  if (sA.all_trivial() && sB.all_trivial()) {
    v.holds = true;
    v.kase = ArrowCase::all_trivial;
    return v;
  }

  const JustificationSet& Jd = eng.jus_arrow_pair(o, a, b, c, d);
  v.sets_truncated = v.sets_truncated || Jd.truncated;
  v.witnesses = Jd.nontrivial();
  v.trivial_members = Jd.trivial;

  bool maximal = !v.witnesses.empty();
  for (Element d2 : eng.space(target_of(o)).class_keys) {
    if (d2 == d) continue;
    const JustificationSet& Jd2 = eng.jus_arrow_pair(o, a, b, c, d2);
    RivalEntry entry;
    entry.cls = d2;
    entry.members = Jd2.nontrivial();
    entry.covers_d = std::includes(entry.members.begin(), entry.members.end(),
                                   v.witnesses.begin(), v.witnesses.end());
    entry.covered_by_d = std::includes(v.witnesses.begin(), v.witnesses.end(),
                                       entry.members.begin(), entry.members.end());
    if (entry.covers_d && !entry.covered_by_d) maximal = false;
    if (v.rivals.size() < ArrowVerdict::kMaxRivalReport)
      v.rivals.push_back(std::move(entry));
    else
      v.rivals_truncated = true;
  }
  v.holds = maximal && !v.witnesses.empty();
  v.kase = v.holds ? ArrowCase::maximal : ArrowCase::fails;
  return v;
}

ProportionVerdict holds_proportion(Engine& eng, Element a, Element b, Element c, Element d) {
  ProportionVerdict out;
  out.a = a;
  out.b = b;
  out.c = c;
  out.d = d;
  out.premises[0] = holds_arrow(eng, Orientation::forward, a, b, c, d);
  out.premises[1] = holds_arrow(eng, Orientation::forward, b, a, d, c);
  out.premises[2] = holds_arrow(eng, Orientation::swapped, c, d, a, b);
  out.premises[3] = holds_arrow(eng, Orientation::swapped, d, c, b, a);
  out.holds = true;
  for (const auto& p : out.premises) out.holds = out.holds && p.holds;
  return out;
}

bool is_characteristic(Engine& eng, Orientation o, const std::set<Justification>& J, Element a,
                       Element b, Element c, Element d) {
  if (J.empty()) return false;
  auto contained_in = [&](const JustificationSet& S) {
    return std::includes(S.members.begin(), S.members.end(), J.begin(), J.end());
  };
  if (!contained_in(eng.jus_arrow_pair(o, a, b, c, d))) return false;
  for (Element d2 : eng.space(target_of(o)).class_keys) {
    if (d2 == d) continue;
    if (contained_in(eng.jus_arrow_pair(o, a, b, c, d2))) return false;
  }
  return true;
}

UniquenessResult uniqueness_lemma(Engine& eng, Orientation o, const Justification& j, Element a,
                                  Element b, Element c, Element d) {
  UniquenessResult r;
  r.member = eng.jus_arrow_pair(o, a, b, c, d).members.count(j) > 0;

  VarSets lv = vars_of(j.lhs), rv = vars_of(j.rhs);
  r.var_condition =
      std::includes(rv.term.begin(), rv.term.end(), lv.term.begin(), lv.term.end()) &&
      std::includes(rv.hedge.begin(), rv.hedge.end(), lv.hedge.begin(), lv.hedge.end());

  bool tf = true, tb = true, sf = true, sb = true;
  sweep_justification(eng, target_of(o), j, [&](Element lhs_value, int64_t rhs_value) {
    if (lhs_value == c && rhs_value != static_cast<int64_t>(d)) tf = false;
    if (rhs_value == static_cast<int64_t>(d) && lhs_value != c) tb = false;
  });
  sweep_justification(eng, source_of(o), j, [&](Element lhs_value, int64_t rhs_value) {
    if (lhs_value == a && rhs_value != static_cast<int64_t>(b)) sf = false;
    if (rhs_value == static_cast<int64_t>(b) && lhs_value != a) sb = false;
  });
  r.target_fwd = tf;
  r.target_bwd = tb;
  r.source_fwd = sf;
  r.source_bwd = sb;

  if (!r.member) return r;
  if (tf && tb && r.var_condition && sf && sb)
    r.part = UniquenessPart::part3;
  else if (tf && tb && r.var_condition)
    r.part = UniquenessPart::part2;
  else if (tf)
    r.part = UniquenessPart::part1;
  return r;
}

namespace {

// Substitution from a raw row, pinning the single z-variable to a term for
// `pinned` (its class representative when one exists, the query's own term
// otherwise).
Substitution materialize_row(Engine& eng, Side s, const std::vector<Variable>& vars,
                             const Row& row, uint32_t zid, Element pinned,
                             const Term& pinned_term) {
  Substitution sub;
  sub.side = s;
  for (size_t k = 0; k < vars.size(); ++k) {
    const Variable& v = vars[k];
    switch (v.kind) {
      case VarKind::constant:
        sub.constant_map[v.id] = static_cast<int32_t>(row[k]);
        break;
      case VarKind::term:
        if (v.id == zid && !eng.space(s).has_class(pinned))
          sub.term_map[v.id] = pinned_term;
        else
          sub.term_map[v.id] = eng.representative(s, static_cast<Element>(row[k]));
        break;
      case VarKind::hedge:
        if (row[k] == kLambda)
          sub.hedge_map[v.id] = std::nullopt;
        else
          sub.hedge_map[v.id] = eng.representative(s, static_cast<Element>(row[k]));
        break;
    }
  }
  return sub;
}

}  // namespace

FunctionalVerdict functional_proportion(Engine& eng, const Hedge& t, const Term& a_term,
                                        const Term& c_term) {
  VarSets tv = vars_of(t);
  if (tv.term.size() != 1)
    fail(errc::precondition_violated,
         "the functional shortcut needs a hedge with exactly one distinct z-variable, got " +
             std::to_string(tv.term.size()));
  uint32_t zid = *tv.term.begin();

  FunctionalVerdict out;
  out.a = eng.resolve(Side::source, a_term);
  out.c = eng.resolve(Side::target, c_term);

  std::vector<Variable> order = variables_in_order(t);

  // Walks every assignment with z pinned; x ranges over `xdom` pair indices.
  auto sweep = [&](Side s, Element pinned, const std::vector<int>& xdom,
                   const std::function<bool(const Row&, Element)>& visit) {
    std::vector<std::vector<int64_t>> domain;
    for (const Variable& v : order) {
      std::vector<int64_t> dom;
      switch (v.kind) {
        case VarKind::constant:
          for (int p : xdom) dom.push_back(p);
          break;
        case VarKind::term:
          dom.push_back(static_cast<int64_t>(pinned));
          break;
        case VarKind::hedge:
          dom.push_back(kLambda);
          for (Element e : eng.space(s).class_keys) dom.push_back(static_cast<int64_t>(e));
          break;
      }
      if (dom.empty()) return;
      domain.push_back(std::move(dom));
    }
    std::map<Variable, size_t> slot;
    for (size_t i = 0; i < order.size(); ++i) slot.emplace(order[i], i);
    Row row(order.size());
    std::vector<size_t> idx(order.size(), 0);
    while (true) {
      for (size_t i = 0; i < row.size(); ++i) row[i] = domain[i][idx[i]];
      int64_t val =
          eng.eval_on(t, s, [&](const Variable& v) { return row[slot.at(v)]; });
      if (val >= 0 && visit(row, static_cast<Element>(val))) return;
      size_t k = 0;
      for (; k < idx.size(); ++k) {
        if (++idx[k] < domain[k].size()) break;
        idx[k] = 0;
      }
      if (k == idx.size()) break;
    }
  };

  const std::vector<int>& shared = eng.pair().shared_rank0_indices();
  const std::vector<int>& source_local = eng.pair().rank0_indices(Side::source);
  const std::vector<int>& target_local = eng.pair().rank0_indices(Side::target);

  sweep(Side::source, out.a, shared, [&](const Row&, Element val) {
    out.b = val;
    return true;
  });
  sweep(Side::target, out.c, shared, [&](const Row&, Element val) {
    out.d = val;
    return true;
  });

  std::set<Element> source_seen;
  sweep(Side::source, out.a, source_local, [&](const Row&, Element val) {
    source_seen.insert(val);
    return false;
  });
  out.source_values.assign(source_seen.begin(), source_seen.end());
  out.source_determinate = source_seen.size() == 1;

  // Theorem precondition: every target assignment pinning z at c gives the
  // same image.  The x-quantifier here is the target side's own.
  std::set<Element> values;
  std::optional<std::pair<Row, Element>> first_row;
  std::optional<std::pair<Row, Element>> second_row;
  sweep(Side::target, out.c, target_local, [&](const Row& row, Element val) {
    if (values.insert(val).second) {
      if (!first_row)
        first_row = {row, val};
      else if (!second_row)
        second_row = {row, val};
    }
    return false;
  });
  out.target_values.assign(values.begin(), values.end());
  out.target_determinate = values.size() == 1;
  if (first_row && second_row) {
    out.divergent = {materialize_row(eng, Side::target, order, first_row->first, zid, out.c,
                                     c_term),
                     materialize_row(eng, Side::target, order, second_row->first, zid, out.c,
                                     c_term)};
  }

  if (!out.b || !out.d) {
    out.route = FunctionalVerdict::Route::not_certified;
    return out;
  }

  out.d_candidates = eng.match_hedge(t, *out.d, Side::target, &out.d_candidates_truncated);

  if (out.target_determinate && out.source_determinate) {
    out.certified = true;
    out.route = FunctionalVerdict::Route::theorem_direct;
    Hedge lhs = make_leaf(VarKind::term, zid);
    Hedge rhs = t;
    canonicalize_pair(lhs, rhs);
    out.certificate =
        print_hedge(lhs, eng.pair()) + " -> " + print_hedge(rhs, eng.pair());
  } else {
    out.search = holds_arrow(eng, Orientation::forward, out.a, *out.b, out.c, *out.d);
    out.certified = out.search->holds;
    out.route = out.certified ? FunctionalVerdict::Route::confirmed_by_search
                              : FunctionalVerdict::Route::not_certified;
  }
  return out;
}

SolveResult solve_d(Engine& eng, Element a, Element b, Element c) {
  SolveResult r;
  r.a = a;
  r.b = b;
  r.c = c;
  for (Element d : eng.space(Side::target).class_keys) {
    r.tried.push_back(d);
    ArrowVerdict v = holds_arrow(eng, Orientation::forward, a, b, c, d);
    if (v.holds) r.holders.push_back(std::move(v));
  }
  std::stable_sort(r.holders.begin(), r.holders.end(), [](const ArrowVerdict& x,
                                                          const ArrowVerdict& y) {
    if (x.witnesses.size() != y.witnesses.size()) return x.witnesses.size() > y.witnesses.size();
    return x.d < y.d;
  });
  return r;
}

}  // namespace hedgeprop
