#include "hopfinv/fixtures.hpp"

namespace hopfinv {

namespace {

Field q() { return Field::rationals(); }

Poly poly(Field f, std::initializer_list<int> low_to_high) {
  std::vector<Scalar> c;
  for (int x : low_to_high) c.push_back(Scalar::from_int(f, x));
  return Poly(f, c);
}

Mat swap_matrix(Field f) {
  Mat m(f, 2, 2);
  m(0, 1) = Scalar::one(f);
  m(1, 0) = Scalar::one(f);
  return m;
}

Mat d_dy(Field f, std::size_t n) {
  // basis y^k, d(y^k) = k y^{k-1}
  Mat m(f, n, n);
  for (std::size_t k = 1; k < n; ++k) m(k - 1, k) = Scalar::from_int(f, static_cast<long long>(k));
  return m;
}

}  // namespace

ComoduleAlgebra fix_trivial() {
  return trivial_coaction(build_group_algebra(q(), cyclic_group(2)), split_algebra(q(), 2));
}

ComoduleAlgebra fix_g2() { return build_graded(cyclic_group(2), monogenic_algebra(poly(q(), {-1, 0, 1})), {0, 1}); }

ComoduleAlgebra fix_g2f2() {
  const Field f = Field::prime(2);
  return build_graded(cyclic_group(2), monogenic_algebra(poly(f, {1, 0, 1})), {0, 1});
}

ComoduleAlgebra fix_sw() {
  HopfAlgebra h = build_sweedler(q());
  FiniteAlgebra a = monogenic_algebra(poly(q(), {0, 0, 1}), "u");
  Mat delta(q(), 8, 2);
  const Scalar one = Scalar::one(q());
  delta(0 * 4 + 0, 0) = one;  // 1 -> 1 (x) 1
  delta(1 * 4 + 1, 1) = one;  // u (x) g
  delta(0 * 4 + 3, 1) = one;  // 1 (x) gx
  ComoduleAlgebra c(std::move(h), std::move(a), std::move(delta));
  const auto rep = validate_comodule(c);
  if (!rep.ok) throw Error(rep.violations.front());
  return c;
}

ComoduleAlgebra fix_ga() {
  const FiniteAlgebra a = monogenic_algebra(poly(q(), {-1, 0, 1}));
  Mat sign = Mat::identity(q(), 2);
  sign(1, 1) = -Scalar::one(q());
  return build_group_action(cyclic_group(2), a, {{1, sign}});
}

ComoduleAlgebra fix_der() {
  const Field f = Field::prime(2);
  return build_derivation(monogenic_algebra(poly(f, {0, 0, 1}), "y"), d_dy(f, 2), Scalar::zero(f));
}

ComoduleAlgebra fix_z3() {
  return build_graded(cyclic_group(3), monogenic_algebra(poly(q(), {-1, 0, 0, 1})), {0, 1, 2});
}

ComoduleAlgebra fix_qi() { return build_graded(cyclic_group(2), monogenic_algebra(poly(q(), {1, 0, 1})), {0, 1}); }

ComoduleAlgebra fix_triv_dual() {
  return trivial_coaction(build_group_algebra(q(), cyclic_group(2)), monogenic_algebra(poly(q(), {0, 0, 1}), "y"));
}

ComoduleAlgebra fix_triv_qi() {
  return trivial_coaction(build_group_algebra(q(), cyclic_group(2)), monogenic_algebra(poly(q(), {1, 0, 1})));
}

ComoduleAlgebra fix_swap() {
  return build_group_action(cyclic_group(2), split_algebra(q(), 2), {{1, swap_matrix(q())}});
}

ComoduleAlgebra fix_swap_f2() {
  const Field f = Field::prime(2);
  return build_group_action(cyclic_group(2), split_algebra(f, 2), {{1, swap_matrix(f)}});
}

ComoduleAlgebra fix_der3() {
  const Field f = Field::prime(3);
  return build_derivation(monogenic_algebra(poly(f, {0, 0, 0, 1}), "y"), d_dy(f, 3), Scalar::zero(f));
}

ComoduleAlgebra fix_triv_f2z2() {
  const Field f = Field::prime(2);
  return trivial_coaction(build_dual_group_algebra(f, cyclic_group(2)), FiniteAlgebra::base(f));
}

ComoduleAlgebra fix_swap_nil_f2() {
  const Field f = Field::prime(2);
  // F_2[x, y]/(x, y)^2 with basis 1, x, y
  const FiniteAlgebra a = FiniteAlgebra::from_products(
      f, {"1", "x", "y"},
      [f](std::size_t i, std::size_t j) {
        Vec v = zero_vec(f, 3);
        if (i == 0) v[j] = Scalar::one(f);
        else if (j == 0) v[i] = Scalar::one(f);
        return v;
      },
      unit_vec(f, 3, 0));
  Mat swap(f, 3, 3);
  swap(0, 0) = Scalar::one(f);
  swap(1, 2) = Scalar::one(f);
  swap(2, 1) = Scalar::one(f);
  return build_group_action(cyclic_group(2), a, {{1, swap}});
}

ComoduleAlgebra fix_sw_twist() {
  HopfAlgebra h = build_sweedler(q());
  // Q[u, w]/(u^2, w^2) with basis 1, u, w, uw
  FiniteAlgebra a = FiniteAlgebra::from_products(
      q(), {"1", "u", "w", "uw"},
      [](std::size_t i, std::size_t j) {
        Vec v = zero_vec(q(), 4);
        if ((i & j) == 0) v[i | j] = Scalar::one(q());
        return v;
      },
      unit_vec(q(), 4, 0));
  Mat delta(q(), 16, 4);
  const Scalar one = Scalar::one(q());
  delta(0 * 4 + 0, 0) = one;
  delta(1 * 4 + 1, 1) = one;  // u (x) g
  delta(2 * 4 + 3, 1) = one;  // w (x) gx
  delta(2 * 4 + 0, 2) = one;  // w invariant
  delta(3 * 4 + 1, 3) = one;  // uw (x) g
  ComoduleAlgebra c(std::move(h), std::move(a), std::move(delta));
  const auto rep = validate_comodule(c);
  if (!rep.ok) throw Error(rep.violations.front());
  return c;
}

std::vector<NamedComodule> fixture_corpus() {
  return {
      {"fix_trivial", fix_trivial()},     {"fix_g2", fix_g2()},       {"fix_g2f2", fix_g2f2()},
      {"fix_sw", fix_sw()},               {"fix_ga", fix_ga()},       {"fix_der", fix_der()},
      {"fix_z3", fix_z3()},               {"fix_qi", fix_qi()},       {"fix_triv_dual", fix_triv_dual()},
      {"fix_triv_qi", fix_triv_qi()},     {"fix_swap", fix_swap()},   {"fix_swap_f2", fix_swap_f2()},
      {"fix_der3", fix_der3()},           {"fix_triv_f2z2", fix_triv_f2z2()},
      {"fix_swap_nil_f2", fix_swap_nil_f2()}, {"fix_sw_twist", fix_sw_twist()},
  };
}

}  // namespace hopfinv
