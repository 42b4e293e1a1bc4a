#pragma once

#include <cstdint>
#include <string>

#include "hedgeprop/engine.hpp"
#include "hedgeprop/proportion.hpp"

namespace hedgeprop {

// The exact texts the user supplied for a query, echoed back in headers.
struct ArrowEcho {
  std::string a, b, c, d;
};

// Every reporter returns the stdout payload.  In JSON mode the elapsed time
// is embedded as "timing_ms"; in text mode timing stays out of the payload
// (the front end sends it to stderr) so identical queries print identically.
std::string report_eval(const Algebra& alg, const std::string& term_text, Element value,
                        bool json);
std::string report_hedges(const Engine& eng, bool json);
std::string report_justify(const Engine& eng, Side s, const ArrowEcho& echo, Element a,
                           Element b, const JustificationSet& jus, bool json,
                           int64_t timing_ms);
std::string report_arrow(const Engine& eng, const ArrowEcho& echo, const ArrowVerdict& v,
                         bool json, int64_t timing_ms);
std::string report_proportion(const Engine& eng, const ArrowEcho& echo,
                              const ProportionVerdict& v, bool json, int64_t timing_ms);
std::string report_functional(const Engine& eng, const std::string& hedge_text,
                              const ArrowEcho& echo, const FunctionalVerdict& v, bool json,
                              int64_t timing_ms);
std::string report_solve(const Engine& eng, const ArrowEcho& echo, const SolveResult& r,
                         bool json, int64_t timing_ms);

}  // namespace hedgeprop
