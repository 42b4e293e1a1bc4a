#pragma once

#include <optional>
#include <string>

#include "hedgeprop/hedge.hpp"
#include "hedgeprop/term.hpp"

namespace hedgeprop {

// Variable spellings (x<digits>, z<digits>, Z<digits>) and the λ display
// token "_lambda_" are reserved; symbol declarations may not use them.
bool is_reserved_name(const std::string& name);
// Symbol names: one or more of [A-Za-z0-9_+*]; digit-leading names are fine.
bool is_valid_symbol_name(const std::string& name);

// The reserved variable spelling `name` denotes, if any.
std::optional<Variable> parse_variable_name(const std::string& name);

// "S(S(0))", "S(z1)" — z-variables are the only variables a term may carry.
Term parse_term(const std::string& text, const Signature& sig);

// "h(z1,Z1)", "x1" — over the merged names of `lp`; validates shape.
Hedge parse_hedge(const std::string& text, const LanguagePair& lp);

// "h(z1,Z1) -> h(h(z1,Z1),Z1)"; result is canonical.
Justification parse_justification(const std::string& text, const LanguagePair& lp);

}  // namespace hedgeprop
