#pragma once

#include <stdexcept>
#include <string>

namespace hedgeprop {

// Every failure the library can raise, so callers (and the CLI) can map
// outcomes to exit codes without string matching.
enum class errc {
  parse_error,
  unknown_symbol,
  duplicate_pairing,
  size_mismatch,
  rank_mismatch,
  partial_table,
  unknown_builtin,
  arity_mismatch,
  lambda_at_root,
  unbound_variable,
  out_of_universe,
  empty_space,
  invalid_justification,
  precondition_violated,
  usage_error,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::duplicate_pairing: return "DuplicatePairing";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::partial_table: return "PartialTable";
    case errc::unknown_builtin: return "UnknownBuiltin";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::lambda_at_root: return "LambdaAtRoot";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::out_of_universe: return "OutOfUniverse";
    case errc::empty_space: return "EmptySpace";
    case errc::invalid_justification: return "InvalidJustification";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::usage_error: return "UsageError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hedgeprop
