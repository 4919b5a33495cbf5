#ifndef LIDEAL_THEOREMS_HPP
#define LIDEAL_THEOREMS_HPP

#include <string>
#include <vector>

#include "lideal/enumerate.hpp"

/** The equivalence theorems as machine-checked suites.
 *
 * Each suite quantifies over the enumerated LI-ideals (or over all subsets,
 * where the statement is about arbitrary subsets) and records every instance
 * violating the claimed pattern. A suite has an expected polarity: most must
 * pass; the suite encoding the refuted maximal-iff-ultra claim must find a
 * counterexample, and the duality suite is only a theorem on lattice
 * implication algebras, so elsewhere its outcome is informative.
 */
namespace lideal {

struct SuiteNotApplicable : AlgebraError {
  using AlgebraError::AlgebraError;
};

enum class SuitePolarity { MustPass, MustRefute, Informative };

struct Counterexample {
  std::string clause;
  Subset subset = 0;
  std::vector<std::string> witness;
};

struct TheoremSuiteResult {
  std::string id;
  SuitePolarity polarity = SuitePolarity::MustPass;
  std::vector<Counterexample> counterexamples;

  bool pass() const { return counterexamples.empty(); }
  bool matches_expectation() const {
    switch (polarity) {
      case SuitePolarity::MustPass: return pass();
      case SuitePolarity::MustRefute: return !pass();
      case SuitePolarity::Informative: return true;
    }
    return false;
  }
};

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "T2.5", "T2.7", "T2.11", "T2.13", "T2.14", "T2.15", "T2.16",
      "T3.2", "T3.3", "T4.4", "T4.7", "T4.9", "T4.10", "T4.12",
      "T4.13", "T4.17", "P4.15", "L4.2", "QinClaim"};
  return ids;
}

/// Suites stated for lattice implication algebras only.
inline bool suite_needs_lia(const std::string& id) {
  return id == "T2.5" || id == "T2.7" || id == "T2.11" || id == "T2.13" ||
         id == "T2.15" || id == "T2.16" || id == "T3.2" || id == "T3.3" ||
         id == "QinClaim";
}

inline bool suite_applicable(const std::string& id, const AlgebraClass& cls) {
  if (suite_needs_lia(id)) return cls.is_lia;
  return cls.is_mtl;  // the T4.x family, T2.14, P4.15 and L4.2
}

namespace detail {

struct SuiteContext {
  const ClassifiedAlgebra& ca;
  std::vector<Subset> ideals;

  explicit SuiteContext(const ClassifiedAlgebra& c)
      : ca(c), ideals(enumerate_li_ideals(c)) {}

  const FiniteAlgebra& alg() const { return ca.alg; }

  bool complemented(Subset a) const {  // x in A or x' in A, for every x
    for (Index x = 0; x < alg().n; ++x)
      if (!subset_has(a, x) && !subset_has(a, ca.alg.neg[x])) return false;
    return true;
  }
};

inline void record(TheoremSuiteResult& r, std::string clause, Subset s,
                   std::vector<std::string> witness = {}) {
  r.counterexamples.push_back({std::move(clause), s, std::move(witness)});
}

}  // namespace detail

inline TheoremSuiteResult run_theorem_suite(const ClassifiedAlgebra& ca,
                                            const std::string& id) {
  if (!suite_applicable(id, ca.cls))
    throw SuiteNotApplicable("suite " + id + " is not applicable to " +
                             class_name(ca.cls));
  detail::SuiteContext cx(ca);
  const FiniteAlgebra& alg = ca.alg;
  const int n = alg.n;
  TheoremSuiteResult r;
  r.id = id;
  if (id == "QinClaim") r.polarity = SuitePolarity::MustRefute;
  if (id == "L4.2" && !ca.cls.is_lia) r.polarity = SuitePolarity::Informative;

  auto for_ideals = [&](auto f) {
    for (Subset a : cx.ideals) f(a);
  };
  auto for_proper_ideals = [&](auto f) {
    for (Subset a : cx.ideals)
      if (is_proper(ca, a)) f(a);
  };

  if (id == "T2.5" || id == "T4.4") {
    for_ideals([&](Subset a) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (subset_has(a, x) && alg.leq(y, x) && !subset_has(a, y))
            detail::record(r, "LI3", a, alg.names({x, y}));
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (subset_has(a, x) && subset_has(a, y) &&
              !subset_has(a, alg.join[x][y]))
            detail::record(r, "LI4", a, alg.names({x, y}));
      if (id == "T4.4")
        for (Index x = 0; x < n; ++x)
          if (subset_has(a, x) && !subset_has(a, alg.neg[alg.neg[x]]))
            detail::record(r, "LI9", a, alg.names({x}));
    });
  } else if (id == "T2.7") {
    // A is an LI-ideal iff A is a down-set closed under (+).
    for (Subset a = 0; a <= full_subset(n); ++a) {
      bool li = is_li_ideal(ca, a).holds;
      bool down = downward_closure(alg, a) == a && subset_has(a, alg.bottom);
      bool li5 = true;
      for (Index x = 0; x < n && li5; ++x)
        for (Index y = 0; y < n && li5; ++y)
          if (subset_has(a, x) && subset_has(a, y) &&
              !subset_has(a, alg.oplus[x][y]))
            li5 = false;
      if (li != (down && li5)) detail::record(r, "LI-iff-LI3+LI5", a);
    }
  } else if (id == "T2.11") {
    for_ideals([&](Subset a) {
      bool i1 = satisfies_li7(alg, a);
      bool i2 = true;  // ((x->y)'->y)' in A implies (x->y)' in A
      for (Index x = 0; x < n && i2; ++x)
        for (Index y = 0; y < n && i2; ++y) {
          Index u = alg.neg[alg.imp[x][y]];
          if (subset_has(a, alg.neg[alg.imp[u][y]]) && !subset_has(a, u)) i2 = false;
        }
      bool i3 = true;
      for (Index x = 0; x < n && i3; ++x)
        for (Index y = 0; y < n && i3; ++y)
          for (Index z = 0; z < n && i3; ++z) {
            Index u = alg.neg[alg.imp[alg.neg[alg.imp[x][y]]][z]];
            Index v = alg.neg[alg.imp[alg.neg[alg.imp[x][z]]][alg.neg[alg.imp[y][z]]]];
            if (subset_has(a, u) && !subset_has(a, v)) i3 = false;
          }
      bool i4 = true;  // (x -> (y -> x)')' in A implies x in A
      for (Index x = 0; x < n && i4; ++x)
        for (Index y = 0; y < n && i4; ++y)
          if (subset_has(a, alg.neg[alg.imp[x][alg.neg[alg.imp[y][x]]]]) &&
              !subset_has(a, x))
            i4 = false;
      if (!(i1 == i2 && i2 == i3 && i3 == i4))
        detail::record(r, "clauses-differ", a);
    });
  } else if (id == "T2.13") {
    for_proper_ideals([&](Subset a) {
      bool prime = is_prime(ca, a).holds;
      bool zero = true;
      for (Index x = 0; x < n && zero; ++x)
        for (Index y = 0; y < n && zero; ++y)
          if (alg.meet[x][y] == alg.bottom && !subset_has(a, x) &&
              !subset_has(a, y))
            zero = false;
      if (prime != zero) detail::record(r, "prime-iff-meet-zero", a);
    });
  } else if (id == "T2.14") {
    for_ideals([&](Subset a) {
      if (is_maximal(ca, a, cx.ideals) && !is_prime(ca, a))
        detail::record(r, "maximal-not-prime", a);
    });
  } else if (id == "T2.15") {
    for_proper_ideals([&](Subset a) {
      bool lhs = is_prime(ca, a).holds && is_ili_ideal(ca, a).holds;
      if (lhs != cx.complemented(a)) detail::record(r, "prime+ili-iff-complemented", a);
    });
  } else if (id == "T2.16") {
    for_proper_ideals([&](Subset a) {
      bool lhs = is_maximal(ca, a, cx.ideals) && is_ili_ideal(ca, a).holds;
      if (lhs != is_obstinate(ca, a).holds)
        detail::record(r, "maximal+ili-iff-obstinate", a);
    });
  } else if (id == "T3.2") {
    for_ideals([&](Subset a) {
      bool c1 = is_ultra(ca, a).holds;
      bool c2 = is_prime(ca, a).holds && is_ili_ideal(ca, a).holds;
      bool c3 = is_proper(ca, a) && cx.complemented(a);
      bool c4 = is_maximal(ca, a, cx.ideals) && is_ili_ideal(ca, a).holds;
      bool c5 = is_proper(ca, a) && is_obstinate(ca, a).holds;
      if (!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5))
        detail::record(r, "clauses-differ", a);
    });
  } else if (id == "T3.3") {
    for (Subset a = 1; a <= full_subset(n); ++a) {
      if (!has_finite_additive_property(ca, a)) continue;
      bool contained = false;
      for (Subset m : cx.ideals)
        if (is_maximal(ca, m, cx.ideals) && (a & m) == a) {
          contained = true;
          break;
        }
      if (!contained) detail::record(r, "no-maximal-extension", a);
    }
  } else if (id == "T4.7") {
    for_ideals([&](Subset a) {
      if (is_ili_ideal(ca, a).holds && !is_boolean(ca, a).holds)
        detail::record(r, "ili-not-boolean", a);
    });
  } else if (id == "T4.9") {
    for_ideals([&](Subset a) {
      if (!is_boolean(ca, a)) return;
      for (Index x = 0; x < n; ++x)
        if (subset_has(a, alg.neg[alg.imp[x][alg.neg[x]]]) && !subset_has(a, x))
          detail::record(r, "LI12", a, alg.names({x}));
    });
  } else if (id == "T4.10") {
    for_ideals([&](Subset a) {
      if (is_ili_ideal(ca, a).holds != is_boolean(ca, a).holds)
        detail::record(r, "ili-iff-boolean", a);
    });
  } else if (id == "T4.12") {
    for_proper_ideals([&](Subset a) {
      bool crit = true;
      for (Index x = 0; x < n && crit; ++x)
        for (Index y = 0; y < n && crit; ++y)
          if (!subset_has(a, alg.neg[alg.imp[x][y]]) &&
              !subset_has(a, alg.neg[alg.imp[y][x]]))
            crit = false;
      if (is_prime(ca, a).holds != crit)
        detail::record(r, "prime-iff-residual-criterion", a);
    });
  } else if (id == "T4.13") {
    for_proper_ideals([&](Subset a) {
      bool lhs = is_prime(ca, a).holds && is_boolean(ca, a).holds;
      if (lhs != cx.complemented(a))
        detail::record(r, "prime+boolean-iff-complemented", a);
    });
  } else if (id == "T4.17") {
    for_ideals([&](Subset a) {
      bool c1 = is_ultra(ca, a).holds;
      bool c2 = is_proper(ca, a) && cx.complemented(a);
      bool c3 = is_prime(ca, a).holds && is_boolean(ca, a).holds;
      bool c4 = is_prime(ca, a).holds && is_ili_ideal(ca, a).holds;
      bool c5 = is_proper(ca, a) && is_obstinate(ca, a).holds;
      if (!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5))
        detail::record(r, "clauses-differ", a);
    });
  } else if (id == "P4.15") {
    for_ideals([&](Subset a) {
      if (is_ultra(ca, a).holds && !is_proper(ca, a))
        detail::record(r, "ultra-not-proper", a);
    });
  } else if (id == "L4.2") {
    for (Subset f = 1; f <= full_subset(n); ++f) {
      bool filter = is_filter(ca, f).holds;
      bool dual_ideal = is_li_ideal(ca, dual(ca, f)).holds;
      if (filter != dual_ideal)
        detail::record(r, "filter-iff-dual-ideal", f,
                       {subset_to_string(alg, dual(ca, f))});
    }
  } else if (id == "QinClaim") {
    // The refuted claim: ultra iff maximal proper.
    for_ideals([&](Subset a) {
      bool maximal = is_maximal(ca, a, cx.ideals);
      bool ultra = is_ultra(ca, a).holds;
      if (maximal != ultra) detail::record(r, "maximal-vs-ultra", a);
    });
  } else {
    throw SuiteNotApplicable("unknown suite id: " + id);
  }
  return r;
}

/// Every suite applicable to the algebra, in registry order.
inline std::vector<TheoremSuiteResult> run_all_suites(const ClassifiedAlgebra& ca) {
  std::vector<TheoremSuiteResult> out;
  for (const auto& id : suite_ids())
    if (suite_applicable(id, ca.cls)) out.push_back(run_theorem_suite(ca, id));
  return out;
}

}  // namespace lideal

#endif  // LIDEAL_THEOREMS_HPP
