#pragma once

#include <string>
#include <vector>

#include "hopfinv/comodule.hpp"

namespace hopfinv {

/// Trivial coaction of QZ2 on Q x Q.
ComoduleAlgebra fix_trivial();
/// Q[x]/(x^2 - 1) graded by Z/2 with deg x = g.
ComoduleAlgebra fix_g2();
/// F_2[x]/(x^2 + 1) graded by Z/2 with deg x = g.
ComoduleAlgebra fix_g2f2();
/// Q[u]/(u^2) over the Sweedler algebra with delta(u) = u (x) g + 1 (x) gx.
ComoduleAlgebra fix_sw();
/// Z/2 acting on Q[x]/(x^2 - 1) by x -> -x, over the dual group algebra.
ComoduleAlgebra fix_ga();
/// F_2[y]/(y^2) with d = d/dy over the dual of u(L), x^[2] = 0.
ComoduleAlgebra fix_der();
/// Q[x]/(x^3 - 1) graded by Z/3 with deg x = g.
ComoduleAlgebra fix_z3();
/// Q[x]/(x^2 + 1) graded by Z/2 with deg x = g.
ComoduleAlgebra fix_qi();
/// Trivial coaction of QZ2 on Q[y]/(y^2).
ComoduleAlgebra fix_triv_dual();
/// Trivial coaction of QZ2 on Q[x]/(x^2 + 1).
ComoduleAlgebra fix_triv_qi();
/// Z/2 swapping the factors of Q x Q.
ComoduleAlgebra fix_swap();
/// Z/2 swapping the factors of F_2 x F_2.
ComoduleAlgebra fix_swap_f2();
/// F_3[y]/(y^3) with d = d/dy, x^[3] = 0.
ComoduleAlgebra fix_der3();
/// Trivial coaction of the dual group algebra of Z/2 over F_2 on F_2.
ComoduleAlgebra fix_triv_f2z2();
/// Z/2 swapping x and y in F_2[x, y]/(x, y)^2; not H-reduced.
ComoduleAlgebra fix_swap_nil_f2();
/// Q[u, w]/(u^2, w^2) over the Sweedler algebra with delta(u) = u (x) g + w (x) gx.
ComoduleAlgebra fix_sw_twist();

struct NamedComodule {
  std::string name;
  ComoduleAlgebra comodule;
};
/// Every fixture above, in a fixed order.
std::vector<NamedComodule> fixture_corpus();

}  // namespace hopfinv
