#ifndef LIDEAL_ENUMERATE_HPP
#define LIDEAL_ENUMERATE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "lideal/ideals.hpp"

/** Exhaustive enumeration of LI-ideals and filters.
 *
 * Every LI-ideal is a down-set of the derived order, so enumeration walks the
 * order ideals of the poset (a linear extension with an
 * all-predecessors-present gate) and filters those by the LI8 closure rule.
 * A 2^n brute-force scan is kept as a self-check.
 */
namespace lideal {

/// All down-sets of the derived order, as bit masks.
inline std::vector<Subset> enumerate_down_sets(const FiniteAlgebra& alg) {
  const int n = alg.n;
  // Linear extension: sort by number of elements below.
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::vector<int> below(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (alg.leq(y, x)) ++below[x];
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return below[a] < below[b]; });

  std::vector<Subset> out;
  std::vector<std::pair<Subset, int>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [cur, pos] = stack.back();
    stack.pop_back();
    if (pos == n) {
      out.push_back(cur);
      continue;
    }
    Index e = order[pos];
    stack.push_back({cur, pos + 1});  // leave e out
    bool preds_in = true;
    for (Index y = 0; y < n && preds_in; ++y)
      if (y != e && alg.leq(y, e) && !subset_has(cur, y)) preds_in = false;
    if (preds_in) stack.push_back({subset_with(cur, e), pos + 1});
  }
  return out;
}

/// All LI-ideals, sorted by (size, bit pattern).
inline std::vector<Subset> enumerate_li_ideals(const ClassifiedAlgebra& ca) {
  std::vector<Subset> out;
  for (Subset s : enumerate_down_sets(ca.alg))
    if (is_li_ideal(ca, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int pa = subset_size(a), pb = subset_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

/// Independent 2^n scan; the self-check oracle for the pruned enumeration.
inline std::vector<Subset> enumerate_li_ideals_brute(const ClassifiedAlgebra& ca) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= full_subset(ca.alg.n); ++s)
    if (is_li_ideal(ca, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int pa = subset_size(a), pb = subset_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

/// All filters; pruned through up-sets (order dual of the down-set walk).
inline std::vector<Subset> enumerate_filters(const ClassifiedAlgebra& ca) {
  const FiniteAlgebra& alg = ca.alg;
  std::vector<Subset> out;
  Subset all = full_subset(alg.n);
  for (Subset s : enumerate_down_sets(alg)) {
    Subset up = all & ~s;  // complements of down-sets are exactly the up-sets
    if (is_filter(ca, up)) out.push_back(up);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int pa = subset_size(a), pb = subset_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

struct IdealInventory {
  std::string algebra;
  std::vector<std::pair<Subset, IdealClassification>> entries;
  /// Covering relation of the ideal poset, as index pairs (lower, upper).
  std::vector<std::pair<int, int>> edges;
};

inline IdealInventory make_inventory(const ClassifiedAlgebra& ca,
                                     std::vector<Subset> ideals) {
  IdealInventory inv;
  inv.algebra = ca.alg.name;
  for (Subset s : ideals) inv.entries.push_back({s, IdealClassification{}});
  const int m = static_cast<int>(ideals.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Subset a = ideals[i], b = ideals[j];
      if (a == b || (a & b) != a) continue;
      bool covering = true;
      for (int k = 0; k < m && covering; ++k) {
        Subset c = ideals[k];
        if (c != a && c != b && (a & c) == a && (c & b) == c) covering = false;
      }
      if (covering) inv.edges.push_back({i, j});
    }
  return inv;
}

/// Fill per-ideal classification; maximality is judged against the inventory.
inline IdealInventory classify_inventory(const ClassifiedAlgebra& ca,
                                         IdealInventory inv) {
  std::vector<Subset> all;
  for (const auto& [s, _] : inv.entries) all.push_back(s);
  for (auto& [s, c] : inv.entries) c = classify_subset(ca, s, all);
  return inv;
}

inline IdealInventory ideal_inventory(const ClassifiedAlgebra& ca) {
  return classify_inventory(ca, make_inventory(ca, enumerate_li_ideals(ca)));
}

}  // namespace lideal

#endif  // LIDEAL_ENUMERATE_HPP
