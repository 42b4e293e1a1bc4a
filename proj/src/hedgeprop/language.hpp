#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hedgeprop {

// A ranked symbol of one concrete language.
struct SymbolDecl {
  std::string name;
  int rank = 0;
};

// An ordered list of ranked symbols; terms refer to symbols by index into it.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<SymbolDecl> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const SymbolDecl& at(int i) const { return symbols_[static_cast<size_t>(i)]; }
  const std::vector<SymbolDecl>& symbols() const { return symbols_; }

  // Index of `name`, or -1 when the signature does not declare it.
  int index_of(const std::string& name) const;

 private:
  std::vector<SymbolDecl> symbols_;
  std::map<std::string, int> index_;
};

enum class Side : int { source = 0, target = 1 };

inline Side other(Side s) { return s == Side::source ? Side::target : Side::source; }
inline int side_index(Side s) { return static_cast<int>(s); }
inline const char* side_name(Side s) { return s == Side::source ? "source" : "target"; }

// One index of the pairing: a source symbol, the target symbol it is paired
// with, and the shared abstract symbol whose rank is the maximum of the two.
struct PairedSymbol {
  std::string name[2];   // per side
  int rank[2] = {0, 0};  // per side
  int side_sym[2] = {-1, -1};  // index into the side's Signature
  int merged_rank = 0;
  std::string merged_name;
};

// The two concrete languages together with the bijective symbol pairing and
// the abstract language spanned by it.  Abstract hedges name symbols by pair
// index; concrete terms name symbols by side-signature index.
class LanguagePair {
 public:
  LanguagePair() = default;

  // Validates sizes, symbol existence and bijectivity, assigns merged names
  // ("h", "h2", ... for positive-rank indices, "_", "_2", ... for rank-0
  // ones) and computes merged ranks.
  static LanguagePair build(const Signature& source, const Signature& target,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  const PairedSymbol& at(int i) const { return pairs_[static_cast<size_t>(i)]; }

  const Signature& signature(Side s) const { return sigs_[side_index(s)]; }
  int rank(Side s, int i) const { return pairs_[static_cast<size_t>(i)].rank[side_index(s)]; }
  int merged_rank(int i) const { return pairs_[static_cast<size_t>(i)].merged_rank; }
  const std::string& name(Side s, int i) const {
    return pairs_[static_cast<size_t>(i)].name[side_index(s)];
  }
  const std::string& merged_name(int i) const {
    return pairs_[static_cast<size_t>(i)].merged_name;
  }
  int side_symbol(Side s, int i) const {
    return pairs_[static_cast<size_t>(i)].side_sym[side_index(s)];
  }

  // -1 when absent.
  int merged_index(const std::string& name) const;
  // Pair index owning the side-signature symbol `sym`, or -1.
  int pair_of_side_symbol(Side s, int sym) const {
    return pair_of_sym_[side_index(s)][static_cast<size_t>(sym)];
  }

  // Pair indices whose symbol has rank 0 on `s` (constant placeholders of a
  // one-sided match) and on both sides (linked placeholders of a pair match).
  const std::vector<int>& rank0_indices(Side s) const { return rank0_[side_index(s)]; }
  const std::vector<int>& shared_rank0_indices() const { return shared_rank0_; }
  const std::vector<int>& positive_rank_indices() const { return positive_rank_; }

  // True when every index carries the same rank on both sides (the two
  // languages collapse onto the abstract one).
  bool ranks_coincide() const;

  // Same pairing read in the opposite direction; merged names are unchanged.
  LanguagePair swapped() const;

 private:
  std::vector<PairedSymbol> pairs_;
  Signature sigs_[2];
  std::map<std::string, int> merged_index_;
  std::vector<int> pair_of_sym_[2];
  std::vector<int> rank0_[2];
  std::vector<int> shared_rank0_;
  std::vector<int> positive_rank_;

  void finish();  // fills the derived tables from pairs_/sigs_
};

}  // namespace hedgeprop
