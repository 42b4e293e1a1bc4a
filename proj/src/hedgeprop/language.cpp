#include "hedgeprop/language.hpp"

#include <set>

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

Signature::Signature(std::vector<SymbolDecl> symbols) : symbols_(std::move(symbols)) {
  for (int i = 0; i < size(); ++i) {
    auto [it, fresh] = index_.emplace(symbols_[static_cast<size_t>(i)].name, i);
    if (!fresh) fail(errc::parse_error, "symbol '" + symbols_[static_cast<size_t>(i)].name +
                                            "' declared twice");
  }
}

int Signature::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

LanguagePair LanguagePair::build(const Signature& source, const Signature& target,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (source.size() != target.size())
    fail(errc::size_mismatch, "source declares " + std::to_string(source.size()) +
                                  " symbols, target declares " + std::to_string(target.size()));
  if (static_cast<int>(pairs.size()) != source.size())
    fail(errc::size_mismatch, "pairing lists " + std::to_string(pairs.size()) + " pairs for " +
                                  std::to_string(source.size()) + " symbols per side");

  LanguagePair lp;
  lp.sigs_[0] = source;
  lp.sigs_[1] = target;
  std::set<int> seen[2];
  for (const auto& [src_name, tgt_name] : pairs) {
    PairedSymbol p;
    p.name[0] = src_name;
    p.name[1] = tgt_name;
    p.side_sym[0] = source.index_of(src_name);
    p.side_sym[1] = target.index_of(tgt_name);
    if (p.side_sym[0] < 0) fail(errc::unknown_symbol, "source symbol '" + src_name + "'");
    if (p.side_sym[1] < 0) fail(errc::unknown_symbol, "target symbol '" + tgt_name + "'");
    if (!seen[0].insert(p.side_sym[0]).second)
      fail(errc::duplicate_pairing, "source symbol '" + src_name + "' paired twice");
    if (!seen[1].insert(p.side_sym[1]).second)
      fail(errc::duplicate_pairing, "target symbol '" + tgt_name + "' paired twice");
    p.rank[0] = source.at(p.side_sym[0]).rank;
    p.rank[1] = target.at(p.side_sym[1]).rank;
    p.merged_rank = std::max(p.rank[0], p.rank[1]);
    lp.pairs_.push_back(std::move(p));
  }
  lp.finish();
  return lp;
}

void LanguagePair::finish() {
  int n_pos = 0, n_zero = 0;
  for (auto& p : pairs_) {
    if (p.merged_rank > 0) {
      ++n_pos;
      p.merged_name = n_pos == 1 ? "h" : "h" + std::to_string(n_pos);
    } else {
      ++n_zero;
      p.merged_name = n_zero == 1 ? "_" : "_" + std::to_string(n_zero);
    }
  }
  merged_index_.clear();
  shared_rank0_.clear();
  positive_rank_.clear();
  for (int s = 0; s < 2; ++s) {
    rank0_[s].clear();
    pair_of_sym_[s].assign(static_cast<size_t>(sigs_[s].size()), -1);
  }
  for (int i = 0; i < size(); ++i) {
    const auto& p = pairs_[static_cast<size_t>(i)];
    merged_index_[p.merged_name] = i;
    for (int s = 0; s < 2; ++s) {
      pair_of_sym_[s][static_cast<size_t>(p.side_sym[s])] = i;
      if (p.rank[s] == 0) rank0_[s].push_back(i);
    }
    if (p.rank[0] == 0 && p.rank[1] == 0) shared_rank0_.push_back(i);
    if (p.merged_rank > 0) positive_rank_.push_back(i);
  }
}

int LanguagePair::merged_index(const std::string& name) const {
  auto it = merged_index_.find(name);
  return it == merged_index_.end() ? -1 : it->second;
}

bool LanguagePair::ranks_coincide() const {
  for (const auto& p : pairs_)
    if (p.rank[0] != p.rank[1]) return false;
  return true;
}

LanguagePair LanguagePair::swapped() const {
  LanguagePair lp;
  lp.sigs_[0] = sigs_[1];
  lp.sigs_[1] = sigs_[0];
  lp.pairs_ = pairs_;
  for (auto& p : lp.pairs_) {
    std::swap(p.name[0], p.name[1]);
    std::swap(p.rank[0], p.rank[1]);
    std::swap(p.side_sym[0], p.side_sym[1]);
  }
  lp.finish();
  return lp;
}

}  // namespace hedgeprop
