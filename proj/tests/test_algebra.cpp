#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "hedgeprop/errors.hpp"
#include "hedgeprop/ground_space.hpp"

using namespace support;

namespace {

bool fails_with(errc expect, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == expect;
  }
  return false;
}

// Straight-line reference: every ground term of depth <= `depth` whose
// evaluation stays inside the carrier, generated by blind recursion over all
// argument combinations (no staging, no dedup tricks).
void ref_space(const Algebra& alg, int depth, std::set<std::string>* terms,
               std::map<Element, std::set<std::string>>* classes) {
  std::vector<Term> pool;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Term> next = pool;
    for (int sym = 0; sym < alg.signature().size(); ++sym) {
      int rank = alg.signature().at(sym).rank;
      std::vector<size_t> idx(static_cast<size_t>(rank), 0);
      if (rank > 0 && pool.empty()) continue;
      while (true) {
        std::vector<Term> args;
        for (size_t k : idx) args.push_back(pool[k]);
        Term t = make_term(sym, std::move(args));
        if (term_depth(t) <= d) next.push_back(t);
        size_t j = 0;
        for (; j < idx.size(); ++j) {
          if (++idx[j] < pool.size()) break;
          idx[j] = 0;
        }
        if (j == idx.size()) break;
      }
    }
    std::sort(next.begin(), next.end(),
              [&](const Term& a, const Term& b) { return compare_terms(a, b) < 0; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    pool = std::move(next);
  }
  for (const Term& t : pool) {
    auto v = evaluate_opt(t, alg, {});
    if (!v) continue;
    std::string printed = print_term(t, alg.signature());
    terms->insert(printed);
    (*classes)[*v].insert(printed);
  }
}

}  // namespace

TEST_CASE("algebra files load with the declared shape") {
  Algebra n = Algebra::load_file(fixture("N.alg"));
  CHECK(n.name() == "N");
  CHECK(n.universe_size() == 65);
  CHECK(n.is_nat_segment());
  CHECK(n.signature().size() == 2);
  CHECK(n.signature().at(0).name == "S");
  CHECK(n.signature().at(0).rank == 1);
  CHECK(n.signature().at(1).name == "0");
  CHECK(n.element_name(7) == "7");
  CHECK(n.element_of_name("7") == Element{7});
  CHECK(!n.element_of_name("77").has_value());

  Algebra b = Algebra::load_file(fixture("B.alg"));
  CHECK(!b.is_nat_segment());
  CHECK(b.universe_size() == 2);
  CHECK(b.element_name(0) == "f");
  CHECK(b.element_of_name("t") == Element{1});
}

TEST_CASE("ground evaluation follows the interpretations") {
  Algebra n = Algebra::load_file(fixture("N.alg"));
  Algebra m = Algebra::load_file(fixture("M.alg"));
  Algebra b = Algebra::load_file(fixture("B.alg"));

  CHECK(evaluate(parse_term("S(S(0))", n.signature()), n) == 2);
  CHECK(evaluate(parse_term("+(+(1,1),1)", m.signature()), m) == 3);
  CHECK(evaluate(parse_term("n(c)", b.signature()), b) == 1);
  CHECK(evaluate(parse_term("n(n(c))", b.signature()), b) == 0);

  std::map<uint32_t, Element> env{{1, 5}};
  CHECK(evaluate(parse_term("S(z1)", n.signature()), n, env) == 6);
  CHECK(fails_with(errc::unbound_variable,
                   [&] { evaluate(parse_term("S(z2)", n.signature()), n, env); }));
}

TEST_CASE("carrier exits are undefined, not wrapped") {
  Algebra tiny = Algebra::load_file(fixture("N.alg"), 2u);  // carrier {0,1,2}
  CHECK(tiny.universe_size() == 3);
  Term top = parse_term("S(S(S(0)))", tiny.signature());
  CHECK(!evaluate_opt(top, tiny, {}).has_value());
  CHECK(fails_with(errc::out_of_universe, [&] { evaluate(top, tiny); }));
  // a subterm exit poisons the whole evaluation
  Term nested = parse_term("S(S(S(S(0))))", tiny.signature());
  CHECK(!evaluate_opt(nested, tiny, {}).has_value());
}

TEST_CASE("algebra schema rejections") {
  auto from = [](const std::string& text) { return Algebra::from_json_text(text, "t"); };
  CHECK(fails_with(errc::parse_error, [&] { from("not json"); }));
  CHECK(fails_with(errc::parse_error, [&] { from("{\"symbols\": []}"); }));
  CHECK(fails_with(errc::unknown_builtin, [&] {
    from("{\"universe\": {\"kind\": \"nat\", \"max\": 3}, \"symbols\": "
         "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"builtin\": \"frob\"}}]}");
  }));
  CHECK(fails_with(errc::partial_table, [&] {
    from("{\"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": "
         "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"table\": [0]}}]}");
  }));
  CHECK(fails_with(errc::partial_table, [&] {
    from("{\"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": "
         "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"table\": [0, 7]}}]}");
  }));
  CHECK(fails_with(errc::rank_mismatch, [&] {
    from("{\"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": "
         "[{\"name\": \"f\", \"rank\": 2, \"interp\": {\"builtin\": \"succ\"}}]}");
  }));
  // reserved variable spellings cannot be symbol names
  CHECK(fails_with(errc::parse_error, [&] {
    from("{\"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": "
         "[{\"name\": \"z1\", \"rank\": 0, \"interp\": {\"builtin\": \"const\", "
         "\"value\": 0}}]}");
  }));
  // builtins need the natural segment
  CHECK(fails_with(errc::rank_mismatch, [&] {
    from("{\"universe\": {\"kind\": \"finite\", \"elements\": [\"a\"]}, \"symbols\": "
         "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"builtin\": \"succ\"}}]}");
  }));
}

TEST_CASE("pairing construction and its rejections") {
  Algebra n = Algebra::load_file(fixture("N.alg"));
  Algebra m = Algebra::load_file(fixture("M.alg"));

  LanguagePair lp = load_pairing_file(fixture("NM.pair"), n, m);
  REQUIRE(lp.size() == 2);
  CHECK(lp.merged_name(0) == "h");
  CHECK(lp.merged_rank(0) == 2);
  CHECK(lp.merged_name(1) == "_");
  CHECK(lp.merged_rank(1) == 0);
  CHECK(lp.rank(Side::source, 0) == 1);
  CHECK(lp.rank(Side::target, 0) == 2);
  CHECK(lp.name(Side::source, 0) == "S");
  CHECK(lp.name(Side::target, 0) == "+");
  CHECK(lp.rank0_indices(Side::source) == std::vector<int>{1});
  CHECK(lp.shared_rank0_indices() == std::vector<int>{1});
  CHECK(lp.positive_rank_indices() == std::vector<int>{0});
  CHECK(!lp.ranks_coincide());

  LanguagePair back = lp.swapped();
  CHECK(back.name(Side::source, 0) == "+");
  CHECK(back.name(Side::target, 0) == "S");
  CHECK(back.merged_name(0) == "h");  // spelling survives the swap

  using P = std::vector<std::pair<std::string, std::string>>;
  CHECK(fails_with(errc::unknown_symbol, [&] {
    LanguagePair::build(n.signature(), m.signature(), P{{"S", "+"}, {"0", "one"}});
  }));
  CHECK(fails_with(errc::duplicate_pairing, [&] {
    LanguagePair::build(n.signature(), m.signature(), P{{"S", "+"}, {"S", "1"}});
  }));
  CHECK(fails_with(errc::duplicate_pairing, [&] {
    LanguagePair::build(n.signature(), m.signature(), P{{"S", "+"}, {"0", "+"}});
  }));
  CHECK(fails_with(errc::size_mismatch,
                   [&] { LanguagePair::build(n.signature(), m.signature(), P{}); }));

  Algebra b = Algebra::load_file(fixture("B.alg"));
  LanguagePair same = load_pairing_file(fixture("B.pair"), b, b);
  CHECK(same.ranks_coincide());
}

TEST_CASE("ground spaces match a blind re-enumeration") {
  for (const char* file : {"N.alg", "M.alg", "B.alg", "C2.alg", "K2.alg"}) {
    for (int depth : {1, 2, 3}) {
      Algebra alg = Algebra::load_file(fixture(file));
      CAPTURE(file);
      CAPTURE(depth);

      std::set<std::string> want_terms;
      std::map<Element, std::set<std::string>> want_classes;
      ref_space(alg, depth, &want_terms, &want_classes);
      if (want_terms.empty()) continue;  // no term fits; engine would refuse

      GroundSpace space = enumerate_ground_space(alg, depth);
      std::set<std::string> got_terms;
      for (const Term& t : space.terms) got_terms.insert(print_term(t, alg.signature()));
      CHECK(got_terms == want_terms);

      std::set<Element> want_keys;
      for (const auto& [value, _] : want_classes) want_keys.insert(value);
      CHECK(std::set<Element>(space.class_keys.begin(), space.class_keys.end()) == want_keys);

      for (const auto& [value, members] : want_classes) {
        REQUIRE(space.has_class(value));
        std::set<std::string> got_members;
        for (int idx : space.members.at(value))
          got_members.insert(print_term(space.terms[static_cast<size_t>(idx)], alg.signature()));
        CHECK(got_members == members);

        // representative: fewest nodes, then smallest spelling
        const Term& rep = space.representative.at(value);
        CHECK(members.count(print_term(rep, alg.signature())) == 1);
        for (int idx : space.members.at(value)) {
          const Term& other = space.terms[static_cast<size_t>(idx)];
          bool rep_smaller =
              term_size(rep) < term_size(other) ||
              (term_size(rep) == term_size(other) &&
               print_term(rep, alg.signature()) <= print_term(other, alg.signature()));
          CHECK(rep_smaller);
        }
      }
    }
  }
}

TEST_CASE("the motivating spaces have the expected classes") {
  Algebra n = Algebra::load_file(fixture("N.alg"));
  Algebra m = Algebra::load_file(fixture("M.alg"));

  GroundSpace sn = enumerate_ground_space(n, 3);
  CHECK(sn.class_keys == std::vector<Element>{0, 1, 2});
  CHECK(print_term(sn.representative.at(2), n.signature()) == "S(S(0))");

  GroundSpace sm = enumerate_ground_space(m, 3);
  CHECK(sm.class_keys == std::vector<Element>{1, 2, 3, 4});
  CHECK(print_term(sm.representative.at(3), m.signature()) == "+(+(1,1),1)");
  CHECK(sm.members.at(3).size() == 2);  // +(+(1,1),1) and +(1,+(1,1))
}

TEST_CASE("a signature with no reachable constants has no space") {
  Algebra no_const = Algebra::from_json_text(
      "{\"universe\": {\"kind\": \"nat\", \"max\": 3}, \"symbols\": "
      "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"builtin\": \"succ\"}}]}",
      "t");
  CHECK(fails_with(errc::empty_space, [&] { enumerate_ground_space(no_const, 3); }));
}

TEST_CASE("term-induced map classification") {
  Algebra n = Algebra::load_file(fixture("N.alg"));
  CHECK(is_injective_term(parse_term("S(z1)", n.signature()), n));
  CHECK(is_constant_term(parse_term("0", n.signature()), n));
  CHECK(!is_constant_term(parse_term("S(z1)", n.signature()), n));

  Algebra flat = Algebra::from_json_text(
      "{\"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": "
      "[{\"name\": \"f\", \"rank\": 1, \"interp\": {\"table\": [0, 0]}}, "
      "{\"name\": \"k\", \"rank\": 0, \"interp\": {\"builtin\": \"const\", \"value\": 1}}]}",
      "t");
  CHECK(is_constant_term(parse_term("f(z1)", flat.signature()), flat));
  CHECK(!is_injective_term(parse_term("f(z1)", flat.signature()), flat));
}
