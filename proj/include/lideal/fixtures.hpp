#ifndef LIDEAL_FIXTURES_HPP
#define LIDEAL_FIXTURES_HPP

#include <string>
#include <vector>

#include "lideal/classify.hpp"

/** Built-in algebras, with tables transcribed verbatim from their sources:
 *  - ex3.1:    4-element lattice implication algebra (a maximal-but-not-ultra
 *              ideal lives here)
 *  - ex4.3:    6-element MTL chain where filter/ideal duality breaks
 *  - ex4.6:    4-element MTL chain with an implicative ideal {0}
 *  - trivial1: one-element degenerate algebra
 *  - chain2:   the two-element Boolean chain
 */
namespace lideal {

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"ex3.1", "ex4.3", "ex4.6",
                                                 "trivial1", "chain2"};
  return names;
}

inline FiniteAlgebra fixture_raw(const std::string& name) {
  FiniteAlgebra f;
  f.name = name;
  if (name == "ex3.1") {
    f.n = 4;
    f.elements = {"0", "a", "b", "1"};
    f.bottom = 0;
    f.top = 3;
    f.imp = {{3, 3, 3, 3},
             {2, 3, 3, 3},
             {1, 2, 3, 3},
             {0, 1, 2, 3}};
  } else if (name == "ex4.3") {
    f.n = 6;
    f.elements = {"0", "a", "b", "c", "d", "1"};
    f.bottom = 0;
    f.top = 5;
    f.imp = {{5, 5, 5, 5, 5, 5},
             {3, 5, 5, 5, 5, 5},
             {2, 2, 5, 5, 5, 5},
             {1, 1, 2, 5, 5, 5},
             {0, 1, 2, 3, 5, 5},
             {0, 1, 2, 3, 4, 5}};
    f.otimes = Table{{0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 1, 1},
                     {0, 0, 0, 2, 2, 2},
                     {0, 0, 2, 3, 3, 3},
                     {0, 1, 2, 3, 4, 4},
                     {0, 1, 2, 3, 4, 5}};
  } else if (name == "ex4.6") {
    f.n = 4;
    f.elements = {"0", "a", "b", "1"};
    f.bottom = 0;
    f.top = 3;
    f.imp = {{3, 3, 3, 3},
             {0, 3, 3, 3},
             {0, 2, 3, 3},
             {0, 1, 2, 3}};
    f.otimes = Table{{0, 0, 0, 0},
                     {0, 1, 1, 1},
                     {0, 1, 1, 2},
                     {0, 1, 2, 3}};
  } else if (name == "trivial1") {
    f.n = 1;
    f.elements = {"0"};
    f.bottom = 0;
    f.top = 0;
    f.imp = {{0}};
  } else if (name == "chain2") {
    f.n = 2;
    f.elements = {"0", "1"};
    f.bottom = 0;
    f.top = 1;
    f.imp = {{1, 1},
             {0, 1}};
  } else {
    throw AlgebraError("unknown fixture: " + name);
  }
  return f;
}

inline ClassifiedAlgebra fixture(const std::string& name) {
  return analyze(fixture_raw(name));
}

}  // namespace lideal

#endif  // LIDEAL_FIXTURES_HPP
