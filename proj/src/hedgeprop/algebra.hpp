#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hedgeprop/language.hpp"
#include "hedgeprop/term.hpp"

namespace hedgeprop {

// Universe elements are dense indices: the value itself on a natural-number
// segment, the position in the element list on a finite universe.
using Element = uint32_t;

struct NatSegment {
  uint32_t max = 64;  // carrier {0, ..., max}; operations leaving it are undefined
};

struct FiniteUniverse {
  std::vector<std::string> elements;
};

// One symbol's meaning: either a built-in operation on a natural-number
// segment, a constant, a projection, or an explicit table (row-major, first
// argument most significant).
struct Interpretation {
  enum class Kind { succ, plus, times, constant, proj, table } kind = Kind::constant;
  uint32_t param = 0;           // constant value / projected argument
  std::vector<Element> table;
};

class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, Signature sig, std::variant<NatSegment, FiniteUniverse> universe,
          std::vector<Interpretation> interps);

  // Parses the JSON document `text` (see README for the schema); the optional
  // override replaces a natural-segment bound before validation.
  static Algebra from_json_text(const std::string& text, const std::string& origin,
                                std::optional<uint32_t> max_universe = std::nullopt);
  static Algebra load_file(const std::string& path,
                           std::optional<uint32_t> max_universe = std::nullopt);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  bool is_nat_segment() const { return std::holds_alternative<NatSegment>(universe_); }
  uint32_t universe_size() const;

  // nullopt when the operation leaves the carrier.
  std::optional<Element> apply(int sym, std::span<const Element> args) const;

  std::string element_name(Element e) const;
  std::optional<Element> element_of_name(const std::string& name) const;

 private:
  std::string name_;
  Signature sig_;
  std::variant<NatSegment, FiniteUniverse> universe_{NatSegment{}};
  std::vector<Interpretation> interps_;
  std::map<std::string, Element> finite_index_;

  void validate() const;
};

// Evaluates under a total map from z-variable ids to elements; nullopt when
// any step leaves the carrier.  An unmapped variable is a caller bug and
// throws errc::unbound_variable.
std::optional<Element> evaluate_opt(const Term& t, const Algebra& alg,
                                    const std::map<uint32_t, Element>& assignment);
// Same, but a carrier exit throws errc::out_of_universe.
Element evaluate(const Term& t, const Algebra& alg,
                 const std::map<uint32_t, Element>& assignment = {});

// Quantify over all total assignments to the term's z-variables, skipping
// points where evaluation leaves the carrier.
bool is_injective_term(const Term& t, const Algebra& alg);
bool is_constant_term(const Term& t, const Algebra& alg);

// {"pairs": [["S","+"], ["0","1"]]} -> the validated language pair.
LanguagePair load_pairing_file(const std::string& path, const Algebra& source,
                               const Algebra& target);
LanguagePair pairing_from_json_text(const std::string& text, const std::string& origin,
                                    const Algebra& source, const Algebra& target);

}  // namespace hedgeprop
