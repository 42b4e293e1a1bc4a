#include "hedgeprop/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hedgeprop {

namespace {

// A shape is a hedge whose leaves are all the placeholder variable z0; kinds
// and ids are filled in later.
using ShapeList = std::vector<Hedge>;

// Shapes with exactly `nodes` nodes and depth <= `depth`, memoized.
class ShapeGen {
 public:
  explicit ShapeGen(const LanguagePair& lp) : lp_(lp) {}

  const ShapeList& exact(int nodes, int depth) {
    auto key = std::make_pair(nodes, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ShapeList out;
    if (nodes == 1) {
      out.push_back(make_leaf(VarKind::term, 0));
    } else if (depth >= 1) {
      for (int sym : lp_.positive_rank_indices()) {
        int rank = lp_.merged_rank(sym);
        std::vector<std::vector<Hedge>> parts(static_cast<size_t>(rank));
        distribute(sym, rank, 0, nodes - 1, depth - 1, parts, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Splits `budget` nodes over children pos..rank-1 (each >= 1 node) and
  // emits every combination.
  void distribute(int sym, int rank, int pos, int budget, int kid_depth,
                  std::vector<std::vector<Hedge>>& parts, ShapeList& out) {
    int remaining_kids = rank - pos;
    if (remaining_kids == 0) {
      if (budget != 0) return;
      std::vector<size_t> idx(static_cast<size_t>(rank), 0);
      // cartesian product over parts
      std::function<void(int)> walk = [&](int k) {
        if (k == rank) {
          std::vector<Hedge> chosen;
          chosen.reserve(static_cast<size_t>(rank));
          for (int i = 0; i < rank; ++i) chosen.push_back(parts[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
          out.push_back(make_hedge(sym, std::move(chosen)));
          return;
        }
        for (idx[static_cast<size_t>(k)] = 0; idx[static_cast<size_t>(k)] < parts[static_cast<size_t>(k)].size(); ++idx[static_cast<size_t>(k)])
          walk(k + 1);
      };
      walk(0);
      return;
    }
    int max_here = budget - (remaining_kids - 1);
    for (int n = 1; n <= max_here; ++n) {
      const ShapeList& sub = exact(n, kid_depth);
      if (sub.empty()) continue;
      parts[static_cast<size_t>(pos)] = sub;
      distribute(sym, rank, pos + 1, budget - n, kid_depth, parts, out);
      parts[static_cast<size_t>(pos)].clear();
    }
  }

  const LanguagePair& lp_;
  std::map<std::pair<int, int>, ShapeList> memo_;
};

void leaf_pointers(Hedge& h, std::vector<Hedge*>& out) {
  if (h.is_leaf()) {
    out.push_back(&h);
    return;
  }
  for (auto& k : h.kids) leaf_pointers(k, out);
}

// Enumerates restricted-growth labelings of `positions` (ids by first
// occurrence), recursing into `next` when done.
void label_kind(std::vector<Hedge*>& leaves, const std::vector<size_t>& positions, size_t i,
                uint32_t used, const std::function<void()>& next) {
  if (i == positions.size()) {
    next();
    return;
  }
  for (uint32_t id = 1; id <= used + 1; ++id) {
    leaves[positions[i]]->var.id = id;
    label_kind(leaves, positions, i + 1, std::max(used, id), next);
  }
}

}  // namespace

HedgeEnumeration enumerate_hedges(const LanguagePair& lp, const Bounds& bounds) {
  HedgeEnumeration out;
  ShapeGen gen(lp);

  int max_rank = 1;
  for (int i : lp.positive_rank_indices()) max_rank = std::max(max_rank, lp.merged_rank(i));
  int64_t max_nodes = 1;
  for (int d = 0; d < bounds.hedge_depth; ++d) {
    max_nodes = 1 + static_cast<int64_t>(max_rank) * max_nodes;
    if (max_nodes > 4096) {
      max_nodes = 4096;  // far beyond max_hedges already
      break;
    }
  }

  static constexpr VarKind kKinds[3] = {VarKind::constant, VarKind::term, VarKind::hedge};
  for (int n = 1; n <= max_nodes; ++n) {
    std::vector<std::pair<std::string, Hedge>> bucket;
    for (const Hedge& shape : gen.exact(n, bounds.hedge_depth)) {
      Hedge work = shape;
      std::vector<Hedge*> leaves;
      leaf_pointers(work, leaves);
      size_t nleaves = leaves.size();
      std::vector<size_t> kind_choice(nleaves, 0);
      while (true) {
        for (size_t i = 0; i < nleaves; ++i) leaves[i]->var.kind = kKinds[kind_choice[i]];
        // positions per kind, in pre-order
        std::vector<size_t> pos[3];
        for (size_t i = 0; i < nleaves; ++i) pos[kind_choice[i]].push_back(i);
        std::function<void(int)> label = [&](int k) {
          if (k == 3) {
            bucket.emplace_back(print_hedge(work, lp), work);
            return;
          }
          label_kind(leaves, pos[static_cast<size_t>(k)], 0, 0, [&] { label(k + 1); });
        };
        label(0);

        size_t i = 0;
        for (; i < nleaves; ++i) {
          if (++kind_choice[i] < 3) break;
          kind_choice[i] = 0;
        }
        if (i == nleaves) break;
      }
    }
    std::sort(bucket.begin(), bucket.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [print, hedge] : bucket) {
      if (static_cast<int>(out.hedges.size()) >= bounds.max_hedges) {
        out.truncated = true;
        return out;
      }
      out.hedges.push_back(std::move(hedge));
    }
  }
  return out;
}

}  // namespace hedgeprop
