#pragma once

#include <random>
#include <set>
#include <string>

#include "hedgeprop/algebra.hpp"
#include "hedgeprop/engine.hpp"
#include "hedgeprop/parse.hpp"
#include "hedgeprop/proportion.hpp"

namespace support {

using namespace hedgeprop;

inline std::string fixture(const std::string& name) {
  return std::string(HEDGEPROP_FIXTURE_DIR) + "/" + name;
}

// One loaded bilingual session.  The engine keeps pointers into the
// algebras, so a Session never moves.
struct Session {
  Algebra source, target;
  LanguagePair lp;
  Engine eng;

  Session(const std::string& src, const std::string& tgt, const std::string& pair,
          Bounds bounds = {})
      : source(Algebra::load_file(fixture(src))),
        target(Algebra::load_file(fixture(tgt))),
        lp(load_pairing_file(fixture(pair), source, target)),
        eng(source, target, lp, bounds) {}

  // In-memory variant for generated algebras.
  Session(const std::string& src_json, const std::string& tgt_json,
          const std::vector<std::pair<std::string, std::string>>& pairs, Bounds bounds)
      : source(Algebra::from_json_text(src_json, "src")),
        target(Algebra::from_json_text(tgt_json, "tgt")),
        lp(LanguagePair::build(source.signature(), target.signature(), pairs)),
        eng(source, target, lp, bounds) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Element src(const std::string& text) {
    return eng.resolve(Side::source, parse_term(text, source.signature()));
  }
  Element tgt(const std::string& text) {
    return eng.resolve(Side::target, parse_term(text, target.signature()));
  }
  Justification jus(const std::string& text) { return parse_justification(text, lp); }
};

inline Session nat_session(Bounds b = {}) { return Session("N.alg", "M.alg", "NM.pair", b); }

// A random two-element table algebra: one table symbol of the given rank
// (1 or 2) and one random constant.  Keeping a single positive-rank symbol
// per side keeps the bounded justification sets small enough for property
// sweeps.
inline std::string random_two_element_algebra(std::mt19937& rng, const std::string& name,
                                              int rank) {
  auto bit = [&] { return rng() & 1u; };
  std::string table = "[";
  for (int i = 0; i < (rank == 1 ? 2 : 4); ++i)
    table += std::string(i ? ", " : "") + std::to_string(bit());
  table += "]";
  return "{\"name\": \"" + name +
         "\", \"universe\": {\"kind\": \"nat\", \"max\": 1}, \"symbols\": ["
         "{\"name\": \"f" + name + "\", \"rank\": " + std::to_string(rank) +
         ", \"interp\": {\"table\": " + table + "}}, "
         "{\"name\": \"k" + name + "\", \"rank\": 0, \"interp\": {\"builtin\": \"const\", "
         "\"value\": " + std::to_string(bit()) + "}}]}";
}

inline std::vector<std::pair<std::string, std::string>> two_element_pairs(
    const std::string& a, const std::string& b) {
  return {{"f" + a, "f" + b}, {"k" + a, "k" + b}};
}

// Signature shapes for random property sweeps: all-unary pairs explore deep
// hedges cheaply; mixed and all-binary pairs exercise rank mismatch and the
// wider trees at depth 1, where their sets stay small.
struct RandomShape {
  int left_rank, right_rank;
  Bounds bounds;
};

inline RandomShape random_shape(int round) {
  switch (round % 3) {
    case 0: return {1, 1, Bounds{2, 3, 10000, 10000}};
    case 1: return {1, 2, Bounds{1, 2, 10000, 10000}};
    default: return {2, 2, Bounds{1, 2, 10000, 10000}};
  }
}

}  // namespace support
