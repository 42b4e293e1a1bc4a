#include "hedgeprop/cli.hpp"

#include <chrono>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hedgeprop/algebra.hpp"
#include "hedgeprop/engine.hpp"
#include "hedgeprop/errors.hpp"
#include "hedgeprop/parse.hpp"
#include "hedgeprop/proportion.hpp"
#include "hedgeprop/report.hpp"

namespace hedgeprop {

namespace {

struct Options {
  std::string source_path, target_path, pair_path;
  std::string a, b, c, d, term, hedge, side = "source";
  Bounds bounds;
  bool json = false;
  uint32_t max_universe = 0;
};

// Engine keeps raw pointers into the algebras, so they live on the heap and
// never move once the engine exists.
struct Session {
  std::unique_ptr<Algebra> source, target;
  std::unique_ptr<Engine> eng;
};

Session open_session(const Options& o) {
  if (o.source_path.empty() || o.target_path.empty() || o.pair_path.empty())
    fail(errc::usage_error, "--source, --target and --pair are required for this query");
  std::optional<uint32_t> mu;
  if (o.max_universe > 0) mu = o.max_universe;
  Session s;
  s.source = std::make_unique<Algebra>(Algebra::load_file(o.source_path, mu));
  s.target = std::make_unique<Algebra>(Algebra::load_file(o.target_path, mu));
  LanguagePair lp = load_pairing_file(o.pair_path, *s.source, *s.target);
  s.eng = std::make_unique<Engine>(*s.source, *s.target, std::move(lp), o.bounds);
  return s;
}

class Timer {
 public:
  int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& payload, bool json, int64_t timing_ms) {
  std::cout << payload;
  if (!json) std::cerr << "timing: " << timing_ms << " ms\n";
}

int run_eval(const Options& o) {
  if (o.source_path.empty() == o.target_path.empty())
    fail(errc::usage_error, "eval needs exactly one of --source or --target");
  std::optional<uint32_t> mu;
  if (o.max_universe > 0) mu = o.max_universe;
  Algebra alg =
      Algebra::load_file(o.source_path.empty() ? o.target_path : o.source_path, mu);
  Term t = parse_term(o.term, alg.signature());
  Element value = evaluate(t, alg);
  std::cout << report_eval(alg, o.term, value, o.json);
  return 0;
}

int run_hedges(const Options& o) {
  Session s = open_session(o);
  std::cout << report_hedges(*s.eng, o.json);
  return 0;
}

int run_justify(const Options& o) {
  Session s = open_session(o);
  Timer timer;
  Side side = o.side == "target" ? Side::target : Side::source;
  const Algebra& alg = s.eng->algebra(side);
  Element a = s.eng->resolve(side, parse_term(o.a, alg.signature()));
  Element b = s.eng->resolve(side, parse_term(o.b, alg.signature()));
  const JustificationSet& jus = s.eng->jus_arrow(side, a, b);
  emit(report_justify(*s.eng, side, {o.a, o.b, "", ""}, a, b, jus, o.json, timer.elapsed_ms()),
       o.json, timer.elapsed_ms());
  return 0;
}

int run_check_arrow(const Options& o) {
  Session s = open_session(o);
  Timer timer;
  Element a = s.eng->resolve(Side::source, parse_term(o.a, s.source->signature()));
  Element b = s.eng->resolve(Side::source, parse_term(o.b, s.source->signature()));
  Element c = s.eng->resolve(Side::target, parse_term(o.c, s.target->signature()));
  Element d = s.eng->resolve(Side::target, parse_term(o.d, s.target->signature()));
  ArrowVerdict v = holds_arrow(*s.eng, Orientation::forward, a, b, c, d);
  emit(report_arrow(*s.eng, {o.a, o.b, o.c, o.d}, v, o.json, timer.elapsed_ms()), o.json,
       timer.elapsed_ms());
  return v.holds ? 0 : 1;
}

int run_check_proportion(const Options& o) {
  Session s = open_session(o);
  Timer timer;
  Element a = s.eng->resolve(Side::source, parse_term(o.a, s.source->signature()));
  Element b = s.eng->resolve(Side::source, parse_term(o.b, s.source->signature()));
  Element c = s.eng->resolve(Side::target, parse_term(o.c, s.target->signature()));
  Element d = s.eng->resolve(Side::target, parse_term(o.d, s.target->signature()));
  ProportionVerdict v = holds_proportion(*s.eng, a, b, c, d);
  emit(report_proportion(*s.eng, {o.a, o.b, o.c, o.d}, v, o.json, timer.elapsed_ms()), o.json,
       timer.elapsed_ms());
  return v.holds ? 0 : 1;
}

int run_solve(const Options& o) {
  Session s = open_session(o);
  Timer timer;
  Element a = s.eng->resolve(Side::source, parse_term(o.a, s.source->signature()));
  Element b = s.eng->resolve(Side::source, parse_term(o.b, s.source->signature()));
  Element c = s.eng->resolve(Side::target, parse_term(o.c, s.target->signature()));
  SolveResult r = solve_d(*s.eng, a, b, c);
  emit(report_solve(*s.eng, {o.a, o.b, o.c, ""}, r, o.json, timer.elapsed_ms()), o.json,
       timer.elapsed_ms());
  return r.holders.empty() ? 1 : 0;
}

int run_functional(const Options& o) {
  Session s = open_session(o);
  Timer timer;
  Hedge t = parse_hedge(o.hedge, s.eng->pair());
  Term a_term = parse_term(o.a, s.source->signature());
  Term c_term = parse_term(o.c, s.target->signature());
  FunctionalVerdict v = functional_proportion(*s.eng, t, a_term, c_term);
  emit(report_functional(*s.eng, o.hedge, {o.a, "", o.c, ""}, v, o.json, timer.elapsed_ms()),
       o.json, timer.elapsed_ms());
  return v.certified ? 0 : 1;
}

void add_session_flags(CLI::App* cmd, Options& o, bool require_pair) {
  auto* src = cmd->add_option("--source", o.source_path, "source algebra file (JSON)");
  auto* tgt = cmd->add_option("--target", o.target_path, "target algebra file (JSON)");
  auto* pr = cmd->add_option("--pair", o.pair_path, "symbol pairing file (JSON)");
  if (require_pair) {
    src->required();
    tgt->required();
    pr->required();
  }
  cmd->add_option("--max-universe", o.max_universe,
                  "override a natural-segment universe bound");
  cmd->add_flag("--json", o.json, "structured output");
}

void add_bounds_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--hedge-depth", o.bounds.hedge_depth, "maximum hedge depth")
      ->capture_default_str();
  cmd->add_option("--term-depth", o.bounds.term_depth, "maximum ground term depth")
      ->capture_default_str();
  cmd->add_option("--max-hedges", o.bounds.max_hedges, "cap on enumerated hedges")
      ->capture_default_str();
  cmd->add_option("--max-subs", o.bounds.max_substitutions_per_match,
                  "cap on substitutions per match bucket")
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"analogical proportions between two algebras via hedge justifications"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a ground term in one algebra");
  add_session_flags(eval, o, false);
  eval->add_option("--term", o.term, "ground term text")->required();

  CLI::App* hedges =
      app.add_subcommand("hedges", "enumerate abstract hedges over the merged language");
  add_session_flags(hedges, o, true);
  add_bounds_flags(hedges, o);

  CLI::App* justify =
      app.add_subcommand("justify", "justification set of one arrow on one side");
  add_session_flags(justify, o, true);
  add_bounds_flags(justify, o);
  justify->add_option("--side", o.side, "which algebra the arrow lives in")
      ->check(CLI::IsMember({"source", "target"}))
      ->capture_default_str();
  justify->add_option("--a", o.a, "arrow start term")->required();
  justify->add_option("--b", o.b, "arrow end term")->required();

  CLI::App* arrow = app.add_subcommand("check-arrow", "decide a -> b :. c -> d");
  add_session_flags(arrow, o, true);
  add_bounds_flags(arrow, o);
  arrow->add_option("--a", o.a, "source start term")->required();
  arrow->add_option("--b", o.b, "source end term")->required();
  arrow->add_option("--c", o.c, "target start term")->required();
  arrow->add_option("--d", o.d, "target end term")->required();

  CLI::App* prop = app.add_subcommand("check-proportion", "decide a : b :: c : d");
  add_session_flags(prop, o, true);
  add_bounds_flags(prop, o);
  prop->add_option("--a", o.a, "source term")->required();
  prop->add_option("--b", o.b, "source term")->required();
  prop->add_option("--c", o.c, "target term")->required();
  prop->add_option("--d", o.d, "target term")->required();

  CLI::App* solve =
      app.add_subcommand("solve", "find every target class d with a -> b :. c -> d");
  add_session_flags(solve, o, true);
  add_bounds_flags(solve, o);
  solve->add_option("--a", o.a, "source start term")->required();
  solve->add_option("--b", o.b, "source end term")->required();
  solve->add_option("--c", o.c, "target start term")->required();

  CLI::App* functional = app.add_subcommand(
      "functional", "certify an arrow from a single-variable hedge and two anchors");
  add_session_flags(functional, o, true);
  add_bounds_flags(functional, o);
  functional->add_option("--hedge", o.hedge, "hedge with exactly one z-variable")->required();
  functional->add_option("--a", o.a, "source anchor term")->required();
  functional->add_option("--c", o.c, "target anchor term")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (hedges->parsed()) return run_hedges(o);
    if (justify->parsed()) return run_justify(o);
    if (arrow->parsed()) return run_check_arrow(o);
    if (prop->parsed()) return run_check_proportion(o);
    if (solve->parsed()) return run_solve(o);
    if (functional->parsed()) return run_functional(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hedgeprop
