#ifndef LIDEAL_CLASSIFY_HPP
#define LIDEAL_CLASSIFY_HPP

#include <string>
#include <vector>

#include "lideal/algebra.hpp"

namespace lideal {

struct AxiomFailure {
  std::string axiom;                  ///< e.g. "otimes-assoc", "I5", "prelinearity"
  std::vector<std::string> witness;   ///< lexicographically first failing tuple
};

/** Which axiom packages hold. Flags are closed under the hierarchy
 * lia => imtl => mtl => residuated lattice => lattice, so a table that
 * satisfies the implicational axioms but ships a product violating adjunction
 * still reports is_lia = false.
 */
struct AlgebraClass {
  bool is_lattice = false;
  bool is_residuated_lattice = false;
  bool is_mtl = false;
  bool is_imtl = false;
  bool is_lia = false;
  std::vector<AxiomFailure> failures;

  bool failed(const std::string& axiom) const {
    for (const auto& f : failures)
      if (f.axiom == axiom) return true;
    return false;
  }
};

namespace detail {

class AxiomCheck {
 public:
  explicit AxiomCheck(const FiniteAlgebra& alg, std::vector<AxiomFailure>& out)
      : alg_(alg), out_(out) {}

  // Quantify over tuples in lexicographic order; record the first witness.
  template <class F>
  bool forall1(const std::string& id, F pred) {
    for (Index x = 0; x < alg_.n; ++x)
      if (!pred(x)) {
        out_.push_back({id, alg_.names({x})});
        return false;
      }
    return true;
  }

  template <class F>
  bool forall2(const std::string& id, F pred) {
    for (Index x = 0; x < alg_.n; ++x)
      for (Index y = 0; y < alg_.n; ++y)
        if (!pred(x, y)) {
          out_.push_back({id, alg_.names({x, y})});
          return false;
        }
    return true;
  }

  template <class F>
  bool forall3(const std::string& id, F pred) {
    for (Index x = 0; x < alg_.n; ++x)
      for (Index y = 0; y < alg_.n; ++y)
        for (Index z = 0; z < alg_.n; ++z)
          if (!pred(x, y, z)) {
            out_.push_back({id, alg_.names({x, y, z})});
            return false;
          }
    return true;
  }

 private:
  const FiniteAlgebra& alg_;
  std::vector<AxiomFailure>& out_;
};

}  // namespace detail

/** Classify a derived algebra against the axiom hierarchy by exhaustive
 * quantification. Total: never throws on a derived FiniteAlgebra.
 */
inline AlgebraClass classify(const FiniteAlgebra& alg) {
  AlgebraClass cls;
  cls.is_lattice = alg.derived;  // derive_order already rejected non-lattices
  if (!alg.derived) return cls;

  detail::AxiomCheck chk(alg, cls.failures);
  const Index one = alg.top;
  auto imp = [&](Index x, Index y) { return alg.imp[x][y]; };
  auto neg = [&](Index x) { return alg.neg[x]; };
  auto meet = [&](Index x, Index y) { return alg.meet[x][y]; };
  auto join = [&](Index x, Index y) { return alg.join[x][y]; };

  // Implicational axioms first: they use only ->, the lattice and ', so they
  // decide whether a derived product candidate can be trusted.
  bool lia_axioms = true;
  lia_axioms &= chk.forall1("involution", [&](Index x) { return neg(neg(x)) == x; });
  lia_axioms &= chk.forall2("order-reversing", [&](Index x, Index y) {
    return !alg.leq(x, y) || alg.leq(neg(y), neg(x));
  });
  lia_axioms &= chk.forall3("I1", [&](Index x, Index y, Index z) {
    return imp(x, imp(y, z)) == imp(y, imp(x, z));
  });
  lia_axioms &= chk.forall1("I2", [&](Index x) { return imp(x, x) == one; });
  lia_axioms &= chk.forall2("I3", [&](Index x, Index y) {
    return imp(x, y) == imp(neg(y), neg(x));
  });
  lia_axioms &= chk.forall2("I4", [&](Index x, Index y) {
    return !(imp(x, y) == one && imp(y, x) == one) || x == y;
  });
  lia_axioms &= chk.forall2("I5", [&](Index x, Index y) {
    return imp(imp(x, y), y) == imp(imp(y, x), x);
  });
  lia_axioms &= chk.forall3("L1", [&](Index x, Index y, Index z) {
    return imp(join(x, y), z) == meet(imp(x, z), imp(y, z));
  });
  lia_axioms &= chk.forall3("L2", [&](Index x, Index y, Index z) {
    return imp(meet(x, y), z) == join(imp(x, z), imp(y, z));
  });

  const bool product_trusted = alg.has_product() && (!alg.otimes_derived || lia_axioms);
  if (!product_trusted) {
    cls.failures.push_back({"otimes-missing", {}});
    return cls;  // everything from residuated lattice upward needs a product
  }

  auto prod = [&](Index x, Index y) { return alg.prod(x, y); };
  bool rl = true;
  rl &= chk.forall2("otimes-comm", [&](Index x, Index y) {
    return prod(x, y) == prod(y, x);
  });
  rl &= chk.forall3("otimes-assoc", [&](Index x, Index y, Index z) {
    return prod(x, prod(y, z)) == prod(prod(x, y), z);
  });
  rl &= chk.forall1("otimes-unit", [&](Index x) { return prod(one, x) == x; });
  rl &= chk.forall3("adjunction", [&](Index x, Index y, Index z) {
    return alg.leq(z, imp(x, y)) == alg.leq(prod(z, x), y);
  });
  cls.is_residuated_lattice = rl;

  bool prelinear = chk.forall2("prelinearity", [&](Index x, Index y) {
    return join(imp(x, y), imp(y, x)) == one;
  });
  cls.is_mtl = rl && prelinear;

  bool invol = lia_axioms ? true : chk.forall1("imtl-involution", [&](Index x) {
    return neg(neg(x)) == x;
  });
  cls.is_imtl = cls.is_mtl && invol;

  cls.is_lia = lia_axioms && cls.is_imtl;
  return cls;
}

/// An algebra together with its classification; the unit most operations take.
struct ClassifiedAlgebra {
  FiniteAlgebra alg;
  AlgebraClass cls;
};

inline ClassifiedAlgebra analyze(FiniteAlgebra raw) {
  ClassifiedAlgebra ca;
  ca.alg = derive_order(std::move(raw));
  ca.cls = classify(ca.alg);
  return ca;
}

inline std::string class_name(const AlgebraClass& cls) {
  if (cls.is_lia) return "lattice implication algebra";
  if (cls.is_imtl) return "IMTL-algebra (not LIA)";
  if (cls.is_mtl) return "MTL-algebra (not LIA)";
  if (cls.is_residuated_lattice) return "residuated lattice (not MTL)";
  if (cls.is_lattice) return "bounded lattice (not residuated)";
  return "not a lattice";
}

}  // namespace lideal

#endif  // LIDEAL_CLASSIFY_HPP
