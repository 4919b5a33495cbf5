#ifndef LIDEAL_SEARCH_HPP
#define LIDEAL_SEARCH_HPP

#include <functional>
#include <string>
#include <vector>

#include "lideal/enumerate.hpp"
#include "lideal/theorems.hpp"

/** Small-model search over t-norm chains.
 *
 * Generates every commutative, associative, monotone product table with unit
 * top on the k-chain, takes the residual implication x->y = max{z : z*x <= y}
 * and emits each resulting algebra whose target predicate holds. Chains make
 * prelinearity automatic and the residual total, so every emitted model is an
 * MTL-algebra. Emission order is the lexicographic order of the flattened
 * product table; each table is emitted once.
 */
namespace lideal {

struct UnsupportedShape : AlgebraError {
  using AlgebraError::AlgebraError;
};

enum class SearchTarget { Any, MaximalProperNotUltra, DualOfFilterNotIdeal };

inline SearchTarget parse_target(const std::string& s) {
  if (s == "any") return SearchTarget::Any;
  if (s == "maximal-proper-not-ultra") return SearchTarget::MaximalProperNotUltra;
  if (s == "dual-of-filter-not-ideal") return SearchTarget::DualOfFilterNotIdeal;
  throw AlgebraError("unknown search target: " + s);
}

struct ModelSearchSpec {
  int order = 4;  ///< carrier size, 2..6
  SearchTarget target = SearchTarget::Any;
  long max_models = -1;      ///< emit at most this many hits; -1 = unlimited
  long max_tables = -1;      ///< abort cleanly after examining this many tables
};

struct SearchHit {
  ClassifiedAlgebra model;
  long rank = 0;        ///< position in the deterministic emission sequence
  Subset witness = 0;   ///< subset witnessing the target, when one exists
};

namespace detail {

/// Chain element names: 0, c1, ..., 1.
inline std::vector<std::string> chain_names(int k) {
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 1; i + 1 < k; ++i) names.push_back("c" + std::to_string(i));
  names.push_back("1");
  return names;
}

inline bool chain_assoc(const Table& t, int k) {
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][z]) return false;
  return true;
}

inline FiniteAlgebra chain_algebra(const Table& t, int k, long rank) {
  FiniteAlgebra raw;
  raw.name = "chain" + std::to_string(k) + "#" + std::to_string(rank);
  raw.n = k;
  raw.elements = chain_names(k);
  raw.bottom = 0;
  raw.top = k - 1;
  raw.otimes = t;
  raw.imp.assign(k, std::vector<Index>(k, 0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      Index best = 0;
      for (int z = 0; z < k; ++z)
        if (t[z][x] <= y) best = z;  // monotone in z, so the max is the last
      raw.imp[x][y] = best;
    }
  return raw;
}

inline bool target_holds(const ClassifiedAlgebra& ca, SearchTarget target,
                         Subset& witness) {
  switch (target) {
    case SearchTarget::Any:
      witness = 0;
      return true;
    case SearchTarget::MaximalProperNotUltra: {
      auto ideals = enumerate_li_ideals(ca);
      for (Subset a : ideals)
        if (is_maximal(ca, a, ideals) && is_proper(ca, a) && !is_ultra(ca, a)) {
          witness = a;
          return true;
        }
      return false;
    }
    case SearchTarget::DualOfFilterNotIdeal: {
      for (Subset f = 1; f <= full_subset(ca.alg.n); ++f)
        if (is_filter(ca, f) && !is_li_ideal(ca, dual(ca, f))) {
          witness = f;
          return true;
        }
      return false;
    }
  }
  return false;
}

}  // namespace detail

/** Run the search, invoking emit for each hit; emit returns false to stop.
 * Returns the number of product tables examined.
 */
inline long search_models(const ModelSearchSpec& spec,
                          const std::function<bool(const SearchHit&)>& emit) {
  const int k = spec.order;
  if (k < 2 || k > 6)
    throw UnsupportedShape("chain order must be between 2 and 6");

  Table t(k, std::vector<Index>(k, 0));
  for (int j = 0; j < k; ++j) {
    t[0][j] = t[j][0] = 0;
    t[k - 1][j] = t[j][k - 1] = j;
  }

  // Free cells (i, j) with 1 <= i <= j <= k-2, in row-major order of the full
  // table; DFS ascending in each cell yields lexicographic emission order.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= k - 2; ++i)
    for (int j = i; j <= k - 2; ++j) cells.push_back({i, j});

  long examined = 0;
  long emitted = 0;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    if (pos == cells.size()) {
      ++examined;
      if (spec.max_tables >= 0 && examined > spec.max_tables) {
        stop = true;
        return;
      }
      if (!detail::chain_assoc(t, k)) return;
      ClassifiedAlgebra ca = analyze(detail::chain_algebra(t, k, examined));
      if (!ca.cls.is_mtl)
        throw std::logic_error("generated chain model is not an MTL-algebra");
      Subset witness = 0;
      if (!detail::target_holds(ca, spec.target, witness)) return;
      SearchHit hit{std::move(ca), examined, witness};
      ++emitted;
      if (!emit(hit) || (spec.max_models >= 0 && emitted >= spec.max_models))
        stop = true;
      return;
    }
    auto [i, j] = cells[pos];
    // Monotone and below min(i, j): bounded by the left and upper neighbours.
    int lo = std::max(t[i - 1][j], t[i][j - 1]);  // both assigned earlier
    for (int v = lo; v <= std::min(i, j) && !stop; ++v) {
      t[i][j] = t[j][i] = v;
      self(self, pos + 1);
    }
    t[i][j] = t[j][i] = 0;
  };
  rec(rec, 0);
  return examined;
}

/// Collect all hits (convenience wrapper for tests and the CLI).
inline std::vector<SearchHit> search_models_collect(const ModelSearchSpec& spec) {
  std::vector<SearchHit> hits;
  search_models(spec, [&](const SearchHit& h) {
    hits.push_back(h);
    return true;
  });
  return hits;
}

}  // namespace lideal

#endif  // LIDEAL_SEARCH_HPP
