#include "hedgeprop/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hedgeprop {

namespace {

using nlohmann::json;

json bounds_json(const Bounds& b) {
  return json{{"hedge_depth", b.hedge_depth},
              {"term_depth", b.term_depth},
              {"max_hedges", b.max_hedges},
              {"max_substitutions_per_match", b.max_substitutions_per_match}};
}

std::string bounds_line(const Bounds& b) {
  std::ostringstream os;
  os << "bounds: hedge_depth=" << b.hedge_depth << ", term_depth=" << b.term_depth
     << ", max_hedges=" << b.max_hedges
     << ", max_substitutions_per_match=" << b.max_substitutions_per_match;
  return os.str();
}

std::vector<std::string> printed_set(const std::set<Justification>& S, const LanguagePair& lp) {
  std::vector<std::string> out;
  out.reserve(S.size());
  for (const Justification& j : S) out.push_back(print_justification(j, lp));
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

json arrow_json(const Engine& eng, const ArrowVerdict& v) {
  Side ss = source_of(v.orientation), ts = target_of(v.orientation);
  json rivals = json::array();
  for (const RivalEntry& r : v.rivals) {
    rivals.push_back(json{{"class", eng.element_name(ts, r.cls)},
                          {"members", printed_set(r.members, eng.pair())},
                          {"covers_d", r.covers_d},
                          {"covered_by_d", r.covered_by_d}});
  }
  return json{{"orientation", v.orientation == Orientation::forward ? "forward" : "swapped"},
              {"elements",
               {{"a", eng.element_name(ss, v.a)},
                {"b", eng.element_name(ss, v.b)},
                {"c", eng.element_name(ts, v.c)},
                {"d", eng.element_name(ts, v.d)}}},
              {"holds", v.holds},
              {"case", arrow_case_name(v.kase)},
              {"witnesses", printed_set(v.witnesses, eng.pair())},
              {"trivial_members", printed_set(v.trivial_members, eng.pair())},
              {"single_source_size", v.single_source_size},
              {"single_target_size", v.single_target_size},
              {"rivals", rivals},
              {"rivals_truncated", v.rivals_truncated},
              {"sets_truncated", v.sets_truncated},
              {"hedges_truncated", v.hedges_truncated}};
}

void arrow_text(std::ostringstream& os, const Engine& eng, const ArrowVerdict& v,
                const std::string& indent) {
  Side ss = source_of(v.orientation), ts = target_of(v.orientation);
  os << indent << "classes: a = " << eng.element_name(ss, v.a)
     << ", b = " << eng.element_name(ss, v.b) << ", c = " << eng.element_name(ts, v.c)
     << ", d = " << eng.element_name(ts, v.d) << "\n";
  os << indent << "case: " << arrow_case_name(v.kase) << "\n";
  if (v.kase == ArrowCase::all_trivial) {
    os << indent << "single-side sets all trivial (source " << v.single_source_size
       << ", target " << v.single_target_size << " members)\n";
  } else {
    os << indent << "witnesses (" << v.witnesses.size() << "):\n";
    for (const Justification& j : v.witnesses)
      os << indent << "  " << print_justification(j, eng.pair()) << "\n";
    if (!v.trivial_members.empty()) {
      os << indent << "trivial pair members (" << v.trivial_members.size() << "):\n";
      for (const Justification& j : v.trivial_members)
        os << indent << "  " << print_justification(j, eng.pair()) << "\n";
    }
    size_t strict = 0;
    for (const RivalEntry& r : v.rivals)
      if (r.covers_d && !r.covered_by_d) ++strict;
    os << indent << "rivals compared: " << v.rivals.size()
       << (v.rivals_truncated ? "+ (list truncated)" : "") << ", strict coverers: " << strict
       << "\n";
    for (const RivalEntry& r : v.rivals) {
      if (!(r.covers_d && !r.covered_by_d)) continue;
      os << indent << "  class " << eng.element_name(ts, r.cls) << " strictly covers d ("
         << r.members.size() << " members)\n";
    }
  }
  if (v.sets_truncated)
    os << indent << "warning: a justification set hit its substitution cap\n";
  if (v.hedges_truncated) os << indent << "warning: hedge enumeration was truncated\n";
}

}  // namespace

std::string report_eval(const Algebra& alg, const std::string& term_text, Element value,
                        bool json_mode) {
  if (json_mode) {
    json j{{"query", "eval"},
           {"algebra", alg.name()},
           {"term", term_text},
           {"value", alg.element_name(value)}};
    return j.dump(2) + "\n";
  }
  return alg.element_name(value) + "\n";
}

std::string report_hedges(const Engine& eng, bool json_mode) {
  if (json_mode) {
    std::vector<std::string> printed;
    printed.reserve(eng.hedges().size());
    for (const Hedge& h : eng.hedges()) printed.push_back(print_hedge(h, eng.pair()));
    json j{{"query", "hedges"},
           {"count", eng.hedges().size()},
           {"truncated", eng.hedges_truncated()},
           {"hedges", printed},
           {"bounds", bounds_json(eng.bounds())}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "hedges: " << eng.hedges().size() << " (truncated: " << yn(eng.hedges_truncated())
     << ")\n";
  for (const Hedge& h : eng.hedges()) os << "  " << print_hedge(h, eng.pair()) << "\n";
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

std::string report_justify(const Engine& eng, Side s, const ArrowEcho& echo, Element a,
                           Element b, const JustificationSet& jus, bool json_mode,
                           int64_t timing_ms) {
  if (json_mode) {
    json members = json::array();
    for (const Justification& j : jus.members) {
      members.push_back(json{{"justification", print_justification(j, eng.pair())},
                             {"trivial", jus.trivial.count(j) > 0}});
    }
    json j{{"query", "justify"},
           {"side", side_name(s)},
           {"elements", {{"a", eng.element_name(s, a)}, {"b", eng.element_name(s, b)}}},
           {"count", jus.members.size()},
           {"trivial_count", jus.trivial.size()},
           {"all_trivial", jus.all_trivial()},
           {"truncated", jus.truncated},
           {"members", members},
           {"bounds", bounds_json(eng.bounds())},
           {"timing_ms", timing_ms}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "justifications for " << side_name(s) << " arrow " << echo.a << " -> " << echo.b
     << "  [" << eng.element_name(s, a) << " -> " << eng.element_name(s, b) << "]\n";
  os << "members: " << jus.members.size() << ", trivial: " << jus.trivial.size()
     << ", truncated: " << yn(jus.truncated) << "\n";
  for (const Justification& j : jus.members) {
    os << (jus.trivial.count(j) ? "  [trivial] " : "  ") << print_justification(j, eng.pair())
       << "\n";
  }
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

std::string report_arrow(const Engine& eng, const ArrowEcho& echo, const ArrowVerdict& v,
                         bool json_mode, int64_t timing_ms) {
  if (json_mode) {
    json j = arrow_json(eng, v);
    j["query"] = "check-arrow";
    j["bounds"] = bounds_json(eng.bounds());
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "arrow " << echo.a << " -> " << echo.b << " :. " << echo.c << " -> " << echo.d << "\n";
  arrow_text(os, eng, v, "");
  os << "verdict: " << (v.holds ? "holds" : "fails") << "\n";
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

std::string report_proportion(const Engine& eng, const ArrowEcho& echo,
                              const ProportionVerdict& v, bool json_mode, int64_t timing_ms) {
  static const char* kNames[4] = {"a->b :. c->d", "b->a :. d->c", "c->d :. a->b (swapped)",
                                  "d->c :. b->a (swapped)"};
  if (json_mode) {
    json prem = json::array();
    for (const ArrowVerdict& p : v.premises) prem.push_back(arrow_json(eng, p));
    json j{{"query", "check-proportion"},
           {"elements",
            {{"a", eng.element_name(Side::source, v.a)},
             {"b", eng.element_name(Side::source, v.b)},
             {"c", eng.element_name(Side::target, v.c)},
             {"d", eng.element_name(Side::target, v.d)}}},
           {"holds", v.holds},
           {"premises", prem},
           {"bounds", bounds_json(eng.bounds())},
           {"timing_ms", timing_ms}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "proportion " << echo.a << " : " << echo.b << " :: " << echo.c << " : " << echo.d
     << "\n";
  for (size_t i = 0; i < 4; ++i) {
    const ArrowVerdict& p = v.premises[i];
    os << "premise " << (i + 1) << " [" << kNames[i] << "]: " << (p.holds ? "holds" : "fails")
       << " (" << arrow_case_name(p.kase);
    if (p.kase != ArrowCase::all_trivial) os << ", " << p.witnesses.size() << " witnesses";
    os << ")\n";
    if (!p.holds) arrow_text(os, eng, p, "  ");
  }
  os << "verdict: " << (v.holds ? "holds" : "fails") << "\n";
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

std::string report_functional(const Engine& eng, const std::string& hedge_text,
                              const ArrowEcho& echo, const FunctionalVerdict& v, bool json_mode,
                              int64_t timing_ms) {
  if (json_mode) {
    json values = json::array();
    for (Element e : v.target_values) values.push_back(eng.element_name(Side::target, e));
    json src_values = json::array();
    for (Element e : v.source_values) src_values.push_back(eng.element_name(Side::source, e));
    json cands = json::array();
    for (const Substitution& s : v.d_candidates) cands.push_back(print_substitution(s, eng.pair()));
    json j{{"query", "functional"},
           {"hedge", hedge_text},
           {"a", eng.element_name(Side::source, v.a)},
           {"c", eng.element_name(Side::target, v.c)},
           {"certified", v.certified},
           {"route", functional_route_name(v.route)},
           {"target_determinate", v.target_determinate},
           {"target_values", values},
           {"source_determinate", v.source_determinate},
           {"source_values", src_values},
           {"d_candidates", cands},
           {"d_candidates_truncated", v.d_candidates_truncated},
           {"bounds", bounds_json(eng.bounds())},
           {"timing_ms", timing_ms}};
    j["b"] = v.b ? json(eng.element_name(Side::source, *v.b)) : json(nullptr);
    j["d"] = v.d ? json(eng.element_name(Side::target, *v.d)) : json(nullptr);
    if (v.divergent) {
      j["divergent"] = json::array({print_substitution(v.divergent->first, eng.pair()),
                                    print_substitution(v.divergent->second, eng.pair())});
    } else {
      j["divergent"] = json(nullptr);
    }
    j["certificate"] = v.certificate.empty() ? json(nullptr) : json(v.certificate);
    j["search"] = v.search ? arrow_json(eng, *v.search) : json(nullptr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "functional query: hedge " << hedge_text << ", a = " << echo.a << " ["
     << eng.element_name(Side::source, v.a) << "], c = " << echo.c << " ["
     << eng.element_name(Side::target, v.c) << "]\n";
  os << "instantiated: b = " << (v.b ? eng.element_name(Side::source, *v.b) : "(none)")
     << ", d = " << (v.d ? eng.element_name(Side::target, *v.d) : "(none)") << "\n";
  os << "source images at a: {";
  for (size_t i = 0; i < v.source_values.size(); ++i)
    os << (i ? ", " : "") << eng.element_name(Side::source, v.source_values[i]);
  os << "} (" << (v.source_determinate ? "determinate" : "indeterminate") << ")\n";
  os << "target images at c: {";
  for (size_t i = 0; i < v.target_values.size(); ++i)
    os << (i ? ", " : "") << eng.element_name(Side::target, v.target_values[i]);
  os << "} (" << (v.target_determinate ? "determinate" : "indeterminate") << ")\n";
  if (v.divergent) {
    os << "divergent target substitutions:\n";
    os << "  " << print_substitution(v.divergent->first, eng.pair()) << "\n";
    os << "  " << print_substitution(v.divergent->second, eng.pair()) << "\n";
  }
  if (v.d) {
    os << "substitutions matching d = " << eng.element_name(Side::target, *v.d) << " ("
       << v.d_candidates.size() << (v.d_candidates_truncated ? ", truncated" : "") << "):\n";
    for (const Substitution& s : v.d_candidates)
      os << "  " << print_substitution(s, eng.pair()) << "\n";
  }
  if (!v.certificate.empty()) os << "certificate: " << v.certificate << "\n";
  if (v.search) {
    os << "fallback search:\n";
    arrow_text(os, eng, *v.search, "  ");
  }
  os << "verdict: " << (v.certified ? "certified" : "not certified") << " ("
     << functional_route_name(v.route) << ")\n";
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

std::string report_solve(const Engine& eng, const ArrowEcho& echo, const SolveResult& r,
                         bool json_mode, int64_t timing_ms) {
  if (json_mode) {
    json holders = json::array();
    for (const ArrowVerdict& v : r.holders) holders.push_back(arrow_json(eng, v));
    json j{{"query", "solve"},
           {"elements",
            {{"a", eng.element_name(Side::source, r.a)},
             {"b", eng.element_name(Side::source, r.b)},
             {"c", eng.element_name(Side::target, r.c)}}},
           {"tried", r.tried.size()},
           {"holders", holders},
           {"bounds", bounds_json(eng.bounds())},
           {"timing_ms", timing_ms}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "solve " << echo.a << " -> " << echo.b << " :. " << echo.c << " -> d over " << r.tried.size()
     << " target classes\n";
  os << "holders (" << r.holders.size() << "):\n";
  for (const ArrowVerdict& v : r.holders) {
    os << "  d = " << eng.element_name(Side::target, v.d) << " [rep "
       << print_term(eng.representative(Side::target, v.d), eng.algebra(Side::target).signature())
       << "]: " << arrow_case_name(v.kase) << ", " << v.witnesses.size() << " witnesses\n";
    for (const Justification& j : v.witnesses)
      os << "    " << print_justification(j, eng.pair()) << "\n";
  }
  os << bounds_line(eng.bounds()) << "\n";
  return os.str();
}

}  // namespace hedgeprop
