#ifndef LIDEAL_ALGEBRA_HPP
#define LIDEAL_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/** Finite algebras given by operation tables.
 *
 * A FiniteAlgebra starts from an implication table (and optionally a product
 * table) over a named carrier. Everything else -- the order, lattice
 * operations, negation and bounded sum -- is derived, so there is exactly one
 * source of truth. Supplied meet/join tables are not accepted.
 */
namespace lideal {

using Index = int;

/// Subset of a carrier of size <= kMaxCarrier, as a bit mask over indices.
using Subset = std::uint32_t;

inline constexpr int kMaxCarrier = 30;

inline bool subset_has(Subset s, Index x) { return (s >> x) & 1u; }
inline Subset subset_with(Subset s, Index x) { return s | (Subset{1} << x); }
inline Subset full_subset(int n) { return (Subset{1} << n) - 1u; }
inline int subset_size(Subset s) { return __builtin_popcount(s); }

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The implication table does not induce a partial order via x<=y iff x->y=1.
struct NotAPartialOrder : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Some pair lacks a unique greatest lower or least upper bound.
struct NotALattice : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// A product table is required but absent and cannot be derived.
struct MissingProduct : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct CarrierMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

using Table = std::vector<std::vector<Index>>;

struct FiniteAlgebra {
  std::string name;
  int n = 0;
  std::vector<std::string> elements;
  Index bottom = 0;
  Index top = 0;

  Table imp;                     ///< imp[x][y] = x -> y
  std::optional<Table> otimes;   ///< otimes[x][y] = x (*) y; may be derived
  bool otimes_derived = false;   ///< product came from (x -> y')' rather than input

  // Derived structure, filled by derive_order().
  bool derived = false;
  std::vector<std::vector<bool>> leq_tab;
  Table meet;
  Table join;
  std::vector<Index> neg;        ///< x' = x -> bottom
  Table oplus;                   ///< x (+) y = x' -> y

  bool leq(Index x, Index y) const { return leq_tab[x][y]; }
  Index arrow(Index x, Index y) const { return imp[x][y]; }
  Index prod(Index x, Index y) const { return (*otimes)[x][y]; }
  bool has_product() const { return otimes.has_value(); }

  const std::string& ename(Index x) const { return elements[x]; }

  /// Names for a tuple of indices, for witness reporting.
  std::vector<std::string> names(std::initializer_list<Index> xs) const {
    std::vector<std::string> out;
    for (Index x : xs) out.push_back(elements[x]);
    return out;
  }
};

namespace detail {

inline void check_table_shape(const Table& t, int n, const std::string& what) {
  if (static_cast<int>(t.size()) != n)
    throw AlgebraError(what + " table has " + std::to_string(t.size()) +
                       " rows, expected " + std::to_string(n));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw AlgebraError(what + " table row has wrong width");
    for (Index v : row)
      if (v < 0 || v >= n)
        throw AlgebraError(what + " table entry out of range");
  }
}

}  // namespace detail

/** Derive order, lattice operations, negation and (+) from the implication
 * table. The order is x<=y iff x->y=top and is validated as a partial order
 * with bottom least, top greatest and all binary meets/joins present.
 *
 * When no product table is supplied, a candidate is filled in from
 * (x -> y')' and flagged via otimes_derived; classify() decides whether the
 * candidate is trustworthy (it is, exactly when the algebra turns out to be a
 * lattice implication algebra).
 */
inline FiniteAlgebra derive_order(FiniteAlgebra alg) {
  const int n = alg.n;
  if (n <= 0) throw AlgebraError("carrier must be nonempty");
  if (n > kMaxCarrier) throw AlgebraError("carrier too large");
  if (static_cast<int>(alg.elements.size()) != n)
    throw AlgebraError("element list size does not match carrier size");
  if (alg.bottom < 0 || alg.bottom >= n || alg.top < 0 || alg.top >= n)
    throw AlgebraError("bottom/top index out of range");
  detail::check_table_shape(alg.imp, n, "imp");
  if (alg.otimes) detail::check_table_shape(*alg.otimes, n, "otimes");

  auto nm = [&](Index x) { return alg.elements[x]; };

  alg.leq_tab.assign(n, std::vector<bool>(n, false));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      alg.leq_tab[x][y] = (alg.imp[x][y] == alg.top);

  for (Index x = 0; x < n; ++x)
    if (!alg.leq_tab[x][x])
      throw NotAPartialOrder("reflexivity fails at " + nm(x));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y && alg.leq_tab[x][y] && alg.leq_tab[y][x])
        throw NotAPartialOrder("antisymmetry fails at (" + nm(x) + ", " + nm(y) + ")");
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (alg.leq_tab[x][y] && alg.leq_tab[y][z] && !alg.leq_tab[x][z])
          throw NotAPartialOrder("transitivity fails at (" + nm(x) + ", " + nm(y) +
                                 ", " + nm(z) + ")");
  for (Index x = 0; x < n; ++x) {
    if (!alg.leq_tab[alg.bottom][x])
      throw NotAPartialOrder("bottom is not least: " + nm(x));
    if (!alg.leq_tab[x][alg.top])
      throw NotAPartialOrder("top is not greatest: " + nm(x));
  }

  // glb: a lower bound above every lower bound; must be unique by antisymmetry.
  auto bound = [&](Index x, Index y, bool lower) -> Index {
    Index best = -1;
    for (Index z = 0; z < n; ++z) {
      bool is_bound = lower ? (alg.leq_tab[z][x] && alg.leq_tab[z][y])
                            : (alg.leq_tab[x][z] && alg.leq_tab[y][z]);
      if (!is_bound) continue;
      bool extreme = true;
      for (Index w = 0; w < n; ++w) {
        bool w_bound = lower ? (alg.leq_tab[w][x] && alg.leq_tab[w][y])
                             : (alg.leq_tab[x][w] && alg.leq_tab[y][w]);
        if (w_bound && !(lower ? alg.leq_tab[w][z] : alg.leq_tab[z][w])) {
          extreme = false;
          break;
        }
      }
      if (extreme) {
        best = z;
        break;
      }
    }
    if (best < 0)
      throw NotALattice(std::string(lower ? "glb" : "lub") + " missing for (" +
                        nm(x) + ", " + nm(y) + ")");
    return best;
  };

  alg.meet.assign(n, std::vector<Index>(n, 0));
  alg.join.assign(n, std::vector<Index>(n, 0));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      alg.meet[x][y] = bound(x, y, true);
      alg.join[x][y] = bound(x, y, false);
    }

  alg.neg.assign(n, 0);
  for (Index x = 0; x < n; ++x) alg.neg[x] = alg.imp[x][alg.bottom];

  alg.oplus.assign(n, std::vector<Index>(n, 0));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      alg.oplus[x][y] = alg.imp[alg.neg[x]][y];

  if (!alg.otimes) {
    Table t(n, std::vector<Index>(n, 0));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        t[x][y] = alg.neg[alg.imp[x][alg.neg[y]]];
    alg.otimes = std::move(t);
    alg.otimes_derived = true;
  }

  alg.derived = true;
  return alg;
}

inline void require_same_carrier(const FiniteAlgebra& alg, Subset s) {
  if (alg.n < kMaxCarrier && (s >> alg.n) != 0)
    throw CarrierMismatch("subset mentions elements outside the carrier of " + alg.name);
}

/// Render a subset as `{0, a, b}` with names in index order.
inline std::string subset_to_string(const FiniteAlgebra& alg, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Index x = 0; x < alg.n; ++x) {
    if (!subset_has(s, x)) continue;
    if (!first) out += ", ";
    out += alg.elements[x];
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace lideal

#endif  // LIDEAL_ALGEBRA_HPP
