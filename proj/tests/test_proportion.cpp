#include <random>

#include "doctest.h"
#include "support.hpp"

#include "hedgeprop/errors.hpp"

using namespace support;

TEST_CASE("the motivating arrow holds by maximality with its named witness") {
  Session s = nat_session();
  ArrowVerdict v = holds_arrow(s.eng, Orientation::forward, s.src("S(0)"), s.src("S(S(0))"),
                               s.tgt("+(1,1)"), s.tgt("+(+(1,1),1)"));
  CHECK(v.holds);
  CHECK(v.kase == ArrowCase::maximal);
  CHECK(v.witnesses.count(s.jus("h(z1,Z1) -> h(h(z1,Z1),Z1)")) == 1);
  CHECK(!v.sets_truncated);
  CHECK(!v.hedges_truncated);
  // every rival was compared and none strictly covers the winner
  CHECK(v.rivals.size() == s.eng.space(Side::target).class_keys.size() - 1);
  for (const RivalEntry& r : v.rivals) CHECK(!(r.covers_d && !r.covered_by_d));
}

TEST_CASE("competing completions lose") {
  Session s = nat_session();
  Element a = s.src("S(0)"), b = s.src("S(S(0))"), c = s.tgt("+(1,1)");
  for (Element d : s.eng.space(Side::target).class_keys) {
    ArrowVerdict v = holds_arrow(s.eng, Orientation::forward, a, b, c, d);
    CHECK(v.holds == (d == 3));
  }
}

TEST_CASE("an arrow with trivial-only support holds by the degenerate case") {
  Session s("K2.alg", "L2.alg", "KL.pair");
  ArrowVerdict v = holds_arrow(s.eng, Orientation::forward, 0, 1, 0, 1);
  CHECK(v.holds);
  CHECK(v.kase == ArrowCase::all_trivial);
  CHECK(v.witnesses.empty());
  CHECK(v.single_source_size == 3);
  CHECK(v.single_target_size == 3);
}

TEST_CASE("the motivating proportion holds through all four premises") {
  Session s = nat_session();
  ProportionVerdict v = holds_proportion(s.eng, s.src("S(0)"), s.src("S(S(0))"),
                                         s.tgt("+(1,1)"), s.tgt("+(+(1,1),1)"));
  CHECK(v.holds);
  for (const ArrowVerdict& p : v.premises) CHECK(p.holds);
  CHECK(v.premises[0].orientation == Orientation::forward);
  CHECK(v.premises[2].orientation == Orientation::swapped);

  // the mirrored premises see the same sets from the other bank
  CHECK(v.premises[0].witnesses == v.premises[2].witnesses);
  CHECK(v.premises[1].witnesses == v.premises[3].witnesses);
}

TEST_CASE("proportion verdicts are symmetric") {
  std::mt19937 rng(20240817);
  int checked = 0;
  for (int round = 0; round < 10; ++round) {
    RandomShape shape = random_shape(round);
    std::string left = random_two_element_algebra(rng, "a", shape.left_rank);
    std::string right = random_two_element_algebra(rng, "b", shape.right_rank);
    Session fwd(left, right, two_element_pairs("a", "b"), shape.bounds);
    Session rev(right, left, two_element_pairs("b", "a"), shape.bounds);
    for (int q = 0; q < 20; ++q) {
      Element a = rng() & 1u, b = rng() & 1u, c = rng() & 1u, d = rng() & 1u;
      bool base = holds_proportion(fwd.eng, a, b, c, d).holds;
      // inversion: a:b::c:d <-> b:a::d:c inside the same pair
      CHECK(base == holds_proportion(fwd.eng, b, a, d, c).holds);
      // exchange: a:b::c:d <-> c:d::a:b across the mirrored pair
      CHECK(base == holds_proportion(rev.eng, c, d, a, b).holds);
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("verdicts depend on denotations, not term spellings") {
  Session s = nat_session();
  std::mt19937 rng(77);

  auto spell = [&](Side side, Element e) {
    const GroundSpace& space = s.eng.space(side);
    const auto& members = space.members.at(e);
    int idx = members[rng() % members.size()];
    return print_term(space.terms[static_cast<size_t>(idx)],
                      s.eng.algebra(side).signature());
  };

  const auto& src_keys = s.eng.space(Side::source).class_keys;
  const auto& tgt_keys = s.eng.space(Side::target).class_keys;
  for (int q = 0; q < 25; ++q) {
    Element a = src_keys[rng() % src_keys.size()], b = src_keys[rng() % src_keys.size()];
    Element c = tgt_keys[rng() % tgt_keys.size()], d = tgt_keys[rng() % tgt_keys.size()];
    ProportionVerdict base = holds_proportion(s.eng, a, b, c, d);
    // re-spell every anchor; resolution must land on the same classes
    CHECK(s.src(spell(Side::source, a)) == a);
    CHECK(s.src(spell(Side::source, b)) == b);
    CHECK(s.tgt(spell(Side::target, c)) == c);
    CHECK(s.tgt(spell(Side::target, d)) == d);
    ProportionVerdict again = holds_proportion(s.eng, s.src(spell(Side::source, a)),
                                               s.src(spell(Side::source, b)),
                                               s.tgt(spell(Side::target, c)),
                                               s.tgt(spell(Side::target, d)));
    CHECK(base.holds == again.holds);
    for (int i = 0; i < 4; ++i) {
      CHECK(base.premises[static_cast<size_t>(i)].kase ==
            again.premises[static_cast<size_t>(i)].kase);
      CHECK(base.premises[static_cast<size_t>(i)].witnesses ==
            again.premises[static_cast<size_t>(i)].witnesses);
    }
  }
}

TEST_CASE("the named witness set is characteristic for the motivating arrow") {
  Session s = nat_session();
  std::set<Justification> J{s.jus("h(z1,Z1) -> h(h(z1,Z1),Z1)")};
  CHECK(is_characteristic(s.eng, Orientation::forward, J, 1, 2, 2, 3));
  CHECK(!is_characteristic(s.eng, Orientation::forward, J, 1, 2, 2, 2));
  CHECK(!is_characteristic(s.eng, Orientation::forward, {}, 1, 2, 2, 3));
  // h(z1,x1) never evaluates on the unary bank, so it is not even a member
  CHECK(!is_characteristic(s.eng, Orientation::forward, {s.jus("z1 -> h(z1,x1)")}, 1, 2, 2,
                           3));
  // projecting away the hedge variable reaches every summand class of 4, so
  // this member justifies three completions at once and pins none of them
  std::set<Justification> loose{s.jus("h(z1,Z1) -> z1")};
  CHECK(!is_characteristic(s.eng, Orientation::forward, loose, 1, 0, 4, 1));
  CHECK(!is_characteristic(s.eng, Orientation::forward, loose, 1, 0, 4, 2));
}

TEST_CASE("the one-member shortcut grades the motivating witness at full strength") {
  Session s = nat_session();
  Justification j = s.jus("h(z1,Z1) -> h(h(z1,Z1),Z1)");
  UniquenessResult r = uniqueness_lemma(s.eng, Orientation::forward, j, 1, 2, 2, 3);
  CHECK(r.member);
  CHECK(r.target_fwd);
  CHECK(r.target_bwd);
  CHECK(r.source_fwd);
  CHECK(r.source_bwd);
  CHECK(r.var_condition);
  CHECK(r.part == UniquenessPart::part3);

  // not a member towards the wrong completion
  UniquenessResult off = uniqueness_lemma(s.eng, Orientation::forward, j, 1, 2, 2, 4);
  CHECK(!off.member);
  CHECK(off.part == UniquenessPart::not_applicable);
}

TEST_CASE("whenever the shortcut fires, brute-force search agrees") {
  Session s = nat_session();
  const auto& src_keys = s.eng.space(Side::source).class_keys;
  const auto& tgt_keys = s.eng.space(Side::target).class_keys;
  int fired = 0;
  for (Element a : src_keys) {
    for (Element b : src_keys) {
      for (Element c : tgt_keys) {
        for (Element d : tgt_keys) {
          const JustificationSet& set =
              s.eng.jus_arrow_pair(Orientation::forward, a, b, c, d);
          for (const Justification& j : set.members) {
            UniquenessResult r = uniqueness_lemma(s.eng, Orientation::forward, j, a, b, c, d);
            if (r.part == UniquenessPart::not_applicable) continue;
            ++fired;
            // part 1 and up: j pins d among all completions
            for (Element d2 : tgt_keys) {
              bool member =
                  s.eng.jus_arrow_pair(Orientation::forward, a, b, c, d2).members.count(j) == 1;
              CHECK(member == (d2 == d));
            }
            if (r.part == UniquenessPart::part2 || r.part == UniquenessPart::part3) {
              // the reversed arrow is pinned to c as well
              Justification rev = Justification::make(j.rhs, j.lhs);
              for (Element c2 : tgt_keys) {
                bool member = s.eng.jus_arrow_pair(Orientation::forward, b, a, d, c2)
                                  .members.count(rev) == 1;
                CHECK(member == (c2 == c));
              }
            }
            if (r.part == UniquenessPart::part3) {
              // and the mirrored premises pin b and a on the other bank
              Justification rev = Justification::make(j.rhs, j.lhs);
              for (Element b2 : src_keys) {
                bool member = s.eng.jus_arrow_pair(Orientation::swapped, c, d, a, b2)
                                  .members.count(j) == 1;
                CHECK(member == (b2 == b));
              }
              for (Element a2 : src_keys) {
                bool member = s.eng.jus_arrow_pair(Orientation::swapped, d, c, b, a2)
                                  .members.count(rev) == 1;
                CHECK(member == (a2 == a));
              }
            }
          }
        }
      }
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("the functional shortcut on the motivating query") {
  Session s = nat_session();
  Hedge t = parse_hedge("h(z1,Z1)", s.lp);
  FunctionalVerdict v = functional_proportion(s.eng, t, parse_term("S(0)", s.source.signature()),
                                              parse_term("+(1,1)", s.target.signature()));
  CHECK(v.a == 1);
  CHECK(v.c == 2);
  REQUIRE(v.b.has_value());
  REQUIRE(v.d.has_value());
  CHECK(*v.b == 2);
  CHECK(*v.d == 3);
  CHECK(!v.target_determinate);
  CHECK(v.target_values == std::vector<Element>{3, 4, 5, 6});
  REQUIRE(v.divergent.has_value());
  CHECK(print_substitution(v.divergent->first, s.lp) != print_substitution(v.divergent->second, s.lp));
  CHECK(v.d_candidates.size() == 2);
  CHECK(v.route == FunctionalVerdict::Route::confirmed_by_search);
  CHECK(v.certified);
  REQUIRE(v.search.has_value());
  CHECK(v.search->holds);
}

TEST_CASE("a determinate hedge certifies directly") {
  Session s = nat_session();
  FunctionalVerdict v =
      functional_proportion(s.eng, parse_hedge("z1", s.lp),
                            parse_term("S(0)", s.source.signature()),
                            parse_term("+(1,1)", s.target.signature()));
  CHECK(v.certified);
  CHECK(v.route == FunctionalVerdict::Route::theorem_direct);
  CHECK(v.source_determinate);
  CHECK(v.target_determinate);
  CHECK(*v.d == 2);
  CHECK(v.certificate == "z1 -> z1");

  Session cover("C2.alg", "D2.alg", "C2D2.pair");
  FunctionalVerdict w =
      functional_proportion(cover.eng, parse_hedge("h(z1)", cover.lp),
                            parse_term("cp", cover.source.signature()),
                            parse_term("du", cover.target.signature()));
  CHECK(w.certified);
  CHECK(w.route == FunctionalVerdict::Route::theorem_direct);
  CHECK(*w.b == 1);  // f flips p to q
  CHECK(*w.d == 0);  // g is the identity
  CHECK(w.certificate == "z1 -> h(z1)");
}

TEST_CASE("certification always implies the brute verdict") {
  struct Probe {
    const char* src;
    const char* tgt;
    const char* pair;
    const char* hedge;
  };
  for (const Probe& p : {Probe{"N.alg", "M.alg", "NM.pair", "h(z1,Z1)"},
                         Probe{"N.alg", "M.alg", "NM.pair", "z1"},
                         Probe{"N.alg", "M.alg", "NM.pair", "h(h(z1,Z1),Z2)"},
                         Probe{"C2.alg", "D2.alg", "C2D2.pair", "h(z1)"},
                         Probe{"C2.alg", "D2.alg", "C2D2.pair", "h(h(z1))"}}) {
    Session s(p.src, p.tgt, p.pair);
    CAPTURE(p.src);
    CAPTURE(p.hedge);
    Hedge t = parse_hedge(p.hedge, s.lp);
    const GroundSpace& src_space = s.eng.space(Side::source);
    const GroundSpace& tgt_space = s.eng.space(Side::target);
    for (Element a : src_space.class_keys) {
      for (Element c : tgt_space.class_keys) {
        FunctionalVerdict v =
            functional_proportion(s.eng, t, src_space.representative.at(a),
                                  tgt_space.representative.at(c));
        if (!v.certified) continue;
        REQUIRE(v.b.has_value());
        REQUIRE(v.d.has_value());
        ArrowVerdict brute = holds_arrow(s.eng, Orientation::forward, v.a, *v.b, v.c, *v.d);
        CHECK(brute.holds);
      }
    }
  }
}

TEST_CASE("the functional shortcut rejects multi-variable hedges") {
  Session s = nat_session();
  Term a = parse_term("S(0)", s.source.signature());
  Term c = parse_term("+(1,1)", s.target.signature());
  CHECK_THROWS_AS(functional_proportion(s.eng, parse_hedge("h(z1,z2)", s.lp), a, c), Error);
  CHECK_THROWS_AS(functional_proportion(s.eng, parse_hedge("x1", s.lp), a, c), Error);
}

TEST_CASE("solving for the completion ranks the motivating class first") {
  Session s = nat_session();
  SolveResult r = solve_d(s.eng, s.src("S(0)"), s.src("S(S(0))"), s.tgt("+(1,1)"));
  CHECK(r.tried.size() == s.eng.space(Side::target).class_keys.size());
  REQUIRE(r.holders.size() == 1);
  CHECK(r.holders[0].d == 3);
  CHECK(r.holders[0].holds);

  // solving an impossible arrow returns no holders
  SolveResult none = solve_d(s.eng, s.src("0"), s.src("S(0)"), s.tgt("1"));
  CHECK(none.holders.empty());
}
