#ifndef LIDEAL_IDENTITIES_HPP
#define LIDEAL_IDENTITIES_HPP

#include <functional>
#include <future>
#include <string>
#include <vector>

#include "lideal/classify.hpp"

/** Catalog of derived identities and the exhaustive verifier.
 *
 * Each identity carries the smallest class it is claimed for; the verifier
 * only asserts identities whose class is implied by the algebra's
 * classification. Identities over indexed families (R11-R14) quantify over an
 * element and a nonempty subset of the carrier.
 */
namespace lideal {

enum class IdentityScope { ResiduatedLattice, Mtl, Lia };

struct Identity {
  std::string id;
  IdentityScope scope;
  int arity = 0;        ///< tuple arity; 0 for subset-indexed identities
  bool indexed = false; ///< quantifies over (x, nonempty subset)
  bool required = true; ///< informative entries are evaluated but never asserted
  std::function<bool(const FiniteAlgebra&, Index, Index, Index)> eval;
  std::function<bool(const FiniteAlgebra&, Index, Subset)> eval_indexed;
};

struct CheckResult {
  std::string id;
  bool applicable = true;
  bool pass = true;
  bool required = true;
  std::vector<std::string> witness;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.applicable && c.required && !c.pass) return false;
    return true;
  }
};

namespace detail {

inline Index fold_meet(const FiniteAlgebra& a, Subset s) {
  Index acc = -1;
  for (Index x = 0; x < a.n; ++x)
    if (subset_has(s, x)) acc = acc < 0 ? x : a.meet[acc][x];
  return acc;
}

inline Index fold_join(const FiniteAlgebra& a, Subset s) {
  Index acc = -1;
  for (Index x = 0; x < a.n; ++x)
    if (subset_has(s, x)) acc = acc < 0 ? x : a.join[acc][x];
  return acc;
}

}  // namespace detail

inline std::vector<Identity> identity_catalog() {
  std::vector<Identity> cat;
  auto add = [&](std::string id, IdentityScope sc, int arity,
                 std::function<bool(const FiniteAlgebra&, Index, Index, Index)> f,
                 bool required = true) {
    Identity ident;
    ident.id = std::move(id);
    ident.scope = sc;
    ident.arity = arity;
    ident.required = required;
    ident.eval = std::move(f);
    cat.push_back(std::move(ident));
  };
  auto add_indexed = [&](std::string id, IdentityScope sc,
                         std::function<bool(const FiniteAlgebra&, Index, Subset)> f) {
    Identity ident;
    ident.id = std::move(id);
    ident.scope = sc;
    ident.indexed = true;
    ident.eval_indexed = std::move(f);
    cat.push_back(std::move(ident));
  };

  constexpr auto LIA = IdentityScope::Lia;
  constexpr auto RL = IdentityScope::ResiduatedLattice;
  constexpr auto MTL = IdentityScope::Mtl;

  // Lattice implication algebra identities.
  add("T2.2-1", LIA, 1, [](const FiniteAlgebra& a, Index x, Index, Index) {
    return a.imp[a.bottom][x] == a.top && a.imp[a.top][x] == x &&
           a.imp[x][a.top] == a.top;
  });
  add("T2.2-2", LIA, 1, [](const FiniteAlgebra& a, Index x, Index, Index) {
    return a.neg[x] == a.imp[x][a.bottom];
  });
  add("T2.2-3", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(a.imp[x][y], a.imp[a.imp[y][z]][a.imp[x][z]]);
  });
  add("T2.2-4", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.join[x][y] == a.imp[a.imp[x][y]][y];
  });
  add("T2.2-5", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    if (!a.leq(x, y)) return true;
    return a.leq(a.imp[y][z], a.imp[x][z]) && a.leq(a.imp[z][x], a.imp[z][y]);
  });
  add("T2.2-6", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.join[y][z]] == a.join[a.imp[x][y]][a.imp[x][z]];
  });
  // Listed as x->(y/\z) = (x->y)/\(y->z); evaluated for the record, the
  // corrected form is T2.2-9.
  add("T2.2-7", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.meet[y][z]] == a.meet[a.imp[x][y]][a.imp[y][z]];
  }, /*required=*/false);
  add("T2.2-8", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.join[a.imp[x][y]][a.imp[y][x]] == a.top;
  });
  add("T2.2-9", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.meet[y][z]] == a.meet[a.imp[x][y]][a.imp[x][z]];
  });
  add("T2.2-10", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.imp[y][z]] == a.imp[y][a.imp[x][z]];
  });
  add("T2.2-11", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.imp[a.imp[a.imp[x][y]][y]][y] == a.imp[x][y];
  });

  add("T2.3-12", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.prod(x, y) == a.prod(y, x) && a.oplus[x][y] == a.oplus[y][x];
  });
  add("T2.3-13", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.prod(x, a.prod(y, z)) == a.prod(a.prod(x, y), z) &&
           a.oplus[x][a.oplus[y][z]] == a.oplus[a.oplus[x][y]][z];
  });
  add("T2.3-14", LIA, 1, [](const FiniteAlgebra& a, Index x, Index, Index) {
    return a.prod(x, a.neg[x]) == a.bottom && a.oplus[x][a.neg[x]] == a.top;
  });
  add("T2.3-15", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.prod(x, a.imp[x][y]) == a.meet[x][y];
  });
  add("T2.3-16", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.imp[y][z]] == a.imp[a.prod(x, y)][z];
  });
  add("T2.3-17", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(x, a.imp[y][z]) == a.leq(a.prod(x, y), z);
  });
  add("T2.3-18", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    // x<=p and y<=q imply x*y<=p*q and x+y<=p+q.
    for (Index p = 0; p < a.n; ++p)
      for (Index q = 0; q < a.n; ++q) {
        if (!(a.leq(x, p) && a.leq(y, q))) continue;
        if (!a.leq(a.prod(x, y), a.prod(p, q))) return false;
        if (!a.leq(a.oplus[x][y], a.oplus[p][q])) return false;
      }
    return true;
  });

  add("L3", LIA, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.join[x][a.meet[y][z]] == a.meet[a.join[x][y]][a.join[x][z]] &&
           a.meet[x][a.join[y][z]] == a.join[a.meet[x][y]][a.meet[x][z]];
  });
  add("L4", LIA, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.neg[a.meet[x][y]] == a.join[a.neg[x]][a.neg[y]] &&
           a.neg[a.join[x][y]] == a.meet[a.neg[x]][a.neg[y]];
  });

  // Residuated lattice identities.
  add("R1", RL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.leq(x, y) == (a.imp[x][y] == a.top);
  });
  add("R2", RL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return x == a.imp[a.top][x] && a.imp[x][a.imp[y][x]] == a.top &&
           a.leq(y, a.imp[a.imp[y][x]][x]);
  });
  add("R3", RL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(x, a.imp[y][z]) == a.leq(y, a.imp[x][z]);
  });
  add("R4", RL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.imp[y][z]] == a.imp[a.prod(x, y)][z] &&
           a.imp[x][a.imp[y][z]] == a.imp[y][a.imp[x][z]];
  });
  add("R5", RL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    if (!a.leq(x, y)) return true;
    return a.leq(a.imp[z][x], a.imp[z][y]) && a.leq(a.imp[y][z], a.imp[x][z]);
  });
  add("R6", RL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(a.imp[z][y], a.imp[a.imp[x][z]][a.imp[x][y]]) &&
           a.leq(a.imp[z][y], a.imp[a.imp[y][x]][a.imp[z][x]]);
  });
  add("R7", RL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(a.prod(a.imp[x][y], a.imp[y][z]), a.imp[x][z]);
  });
  add("R8", RL, 1, [](const FiniteAlgebra& a, Index x, Index, Index) {
    return a.neg[x] == a.neg[a.neg[a.neg[x]]] && a.leq(x, a.neg[a.neg[x]]);
  });
  add("R9", RL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.meet[a.neg[x]][a.neg[y]] == a.neg[a.join[x][y]];
  });
  add("R10", RL, 1, [](const FiniteAlgebra& a, Index x, Index, Index) {
    if (a.join[x][a.neg[x]] != a.top) return true;
    return a.meet[x][a.neg[x]] == a.bottom;
  });
  add_indexed("R11", RL, [](const FiniteAlgebra& a, Index x, Subset s) {
    Index lhs = a.imp[detail::fold_join(a, s)][x];
    Index rhs = -1;
    for (Index y = 0; y < a.n; ++y)
      if (subset_has(s, y)) rhs = rhs < 0 ? a.imp[y][x] : a.meet[rhs][a.imp[y][x]];
    return lhs == rhs;
  });
  add_indexed("R12", RL, [](const FiniteAlgebra& a, Index x, Subset s) {
    Index lhs = a.prod(x, detail::fold_join(a, s));
    Index rhs = -1;
    for (Index y = 0; y < a.n; ++y)
      if (subset_has(s, y)) rhs = rhs < 0 ? a.prod(x, y) : a.join[rhs][a.prod(x, y)];
    return lhs == rhs;
  });
  add_indexed("R13", RL, [](const FiniteAlgebra& a, Index x, Subset s) {
    Index lhs = a.imp[x][detail::fold_meet(a, s)];
    Index rhs = -1;
    for (Index y = 0; y < a.n; ++y)
      if (subset_has(s, y)) rhs = rhs < 0 ? a.imp[x][y] : a.meet[rhs][a.imp[x][y]];
    return lhs == rhs;
  });
  add_indexed("R14", RL, [](const FiniteAlgebra& a, Index x, Subset s) {
    Index lhs = -1;
    for (Index y = 0; y < a.n; ++y)
      if (subset_has(s, y)) lhs = lhs < 0 ? a.imp[y][x] : a.join[lhs][a.imp[y][x]];
    return a.leq(lhs, a.imp[detail::fold_meet(a, s)][x]);
  });

  // MTL identities.
  add("M1", MTL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.leq(a.prod(x, y), a.meet[x][y]);
  });
  add("M2", MTL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    if (!a.leq(x, y)) return true;
    return a.leq(a.prod(x, z), a.prod(y, z));
  });
  add("M3", MTL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.leq(a.imp[y][z], a.imp[a.join[x][y]][a.join[x][z]]);
  });
  add("M4", MTL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.join[a.neg[x]][a.neg[y]] == a.neg[a.meet[x][y]];
  });
  add("M5", MTL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[a.meet[x][y]][z] == a.join[a.imp[x][z]][a.imp[y][z]];
  });
  add("M6", MTL, 2, [](const FiniteAlgebra& a, Index x, Index y, Index) {
    return a.join[x][y] ==
           a.meet[a.imp[a.imp[x][y]][y]][a.imp[a.imp[y][x]][x]];
  });
  add("M7", MTL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.imp[x][a.join[y][z]] == a.join[a.imp[x][y]][a.imp[x][z]];
  });
  add("M8", MTL, 3, [](const FiniteAlgebra& a, Index x, Index y, Index z) {
    return a.meet[x][a.join[y][z]] == a.join[a.meet[x][y]][a.meet[x][z]] &&
           a.join[x][a.meet[y][z]] == a.meet[a.join[x][y]][a.join[x][z]];
  });

  return cat;
}

struct VerifyOptions {
  /// Full power set for carriers up to this size; pairs and triples beyond.
  int full_powerset_limit = 8;
  int workers = 1;
};

namespace detail {

inline bool scope_applies(IdentityScope sc, const AlgebraClass& cls) {
  switch (sc) {
    case IdentityScope::ResiduatedLattice: return cls.is_residuated_lattice;
    case IdentityScope::Mtl: return cls.is_mtl;
    case IdentityScope::Lia: return cls.is_lia;
  }
  return false;
}

inline CheckResult run_identity(const FiniteAlgebra& alg, const Identity& ident,
                                const VerifyOptions& opt) {
  CheckResult res;
  res.id = ident.id;
  res.required = ident.required;
  const int n = alg.n;
  if (ident.indexed) {
    auto check_subset = [&](Subset s) -> bool {
      for (Index x = 0; x < n; ++x)
        if (!ident.eval_indexed(alg, x, s)) {
          res.pass = false;
          res.witness = {alg.ename(x), subset_to_string(alg, s)};
          return false;
        }
      return true;
    };
    if (n <= opt.full_powerset_limit) {
      for (Subset s = 1; s <= full_subset(n); ++s)
        if (!check_subset(s)) return res;
    } else {
      for (Index a = 0; a < n; ++a)
        for (Index b = a; b < n; ++b)
          for (Index c = b; c < n; ++c) {
            Subset s = subset_with(subset_with(subset_with(0, a), b), c);
            if (!check_subset(s)) return res;
          }
    }
    return res;
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < (ident.arity >= 2 ? n : 1); ++y) {
      for (Index z = 0; z < (ident.arity >= 3 ? n : 1); ++z) {
        if (!ident.eval(alg, x, y, z)) {
          res.pass = false;
          switch (ident.arity) {
            case 1: res.witness = alg.names({x}); break;
            case 2: res.witness = alg.names({x, y}); break;
            default: res.witness = alg.names({x, y, z}); break;
          }
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace detail

/** Evaluate every identity of the catalog whose scope is implied by the
 * classification; others are reported as not applicable. Identities are
 * independent, so with workers > 1 they run concurrently; results are merged
 * back in catalog order.
 */
inline CheckReport verify_identities(const ClassifiedAlgebra& ca,
                                     const std::vector<Identity>& catalog,
                                     const VerifyOptions& opt = {}) {
  CheckReport report;
  report.checks.resize(catalog.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!detail::scope_applies(catalog[i].scope, ca.cls)) {
      report.checks[i].id = catalog[i].id;
      report.checks[i].applicable = false;
      report.checks[i].required = catalog[i].required;
    } else {
      todo.push_back(i);
    }
  }
  if (opt.workers <= 1 || todo.size() < 2) {
    for (std::size_t i : todo)
      report.checks[i] = detail::run_identity(ca.alg, catalog[i], opt);
  } else {
    std::vector<std::future<CheckResult>> futs(todo.size());
    for (std::size_t k = 0; k < todo.size(); ++k)
      futs[k] = std::async(std::launch::async, [&, k] {
        return detail::run_identity(ca.alg, catalog[todo[k]], opt);
      });
    for (std::size_t k = 0; k < todo.size(); ++k)
      report.checks[todo[k]] = futs[k].get();
  }
  return report;
}

}  // namespace lideal

#endif  // LIDEAL_IDENTITIES_HPP
