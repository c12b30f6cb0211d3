#include "doctest.h"
#include "hopfinv/hopf.hpp"
#include "support.hpp"

using namespace testing;

namespace {

/// Same dimension and identical structure matrices; labels are ignored.
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  const FiniteAlgebra &x = a.algebra(), &y = b.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (x.mul(x.basis(i), x.basis(j)) != y.mul(y.basis(i), y.basis(j))) return false;
  return x.unit() == y.unit() && a.comul_matrix() == b.comul_matrix() && a.counit_vector() == b.counit_vector() &&
         a.antipode() == b.antipode();
}

/// Nonabelian 2-dim restricted Lie algebra: [x,y] = y, x^[p] = x, y^[p] = 0.
PLieAlgebra affine_plie(Field f) {
  const Vec z = zero_vec(f, 2);
  return PLieAlgebra{f, {"x", "y"}, {z, V(f, {0, 1}), V(f, {0, -1}), z}, {V(f, {1, 0}), z}};
}

std::vector<HopfAlgebra> corpus() {
  std::vector<HopfAlgebra> out;
  for (Field f : {Q(), F(2), F(3)})
    for (const auto& g : small_groups()) {
      out.push_back(build_group_algebra(f, g));
      out.push_back(build_dual_group_algebra(f, g));
    }
  for (Field f : {Q(), F(3), F(5)}) out.push_back(build_sweedler(f));
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = F(p);
    for (int c : {0, 1}) {
      out.push_back(build_restricted_env(one_dim_plie(f, S(f, c)), false));
      out.push_back(build_restricted_env(one_dim_plie(f, S(f, c)), true));
    }
    out.push_back(build_restricted_env(affine_plie(f), false));
    out.push_back(build_restricted_env(affine_plie(f), true));
  }
  return out;
}

bool is_cocommutative(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Mat& d = h.comul_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d(j * n + k, i) != d(k * n + j, i)) return false;
  return true;
}

/// Exhaustive search for a Hopf isomorphism Sweedler -> dual Sweedler with
/// g and x sent to combinations with coefficients in {-1, 0, 1}.
bool sweedler_self_dual_by_search(Field f) {
  const HopfAlgebra h = build_sweedler(f);
  const HopfAlgebra d = dual_hopf(h);
  const FiniteAlgebra& a = d.algebra();
  std::vector<Vec> candidates;
  for (int code = 0; code < 81; ++code) {
    Vec v;
    int c = code;
    for (int i = 0; i < 4; ++i) {
      v.push_back(S(f, c % 3 - 1));
      c /= 3;
    }
    candidates.push_back(v);
  }
  for (const auto& gi : candidates) {
    if (a.mul(gi, gi) != a.unit()) continue;
    for (const auto& xi : candidates) {
      if (!is_zero(a.mul(xi, xi)) || a.mul(xi, gi) != -a.mul(gi, xi)) continue;
      const Mat phi = Mat::from_columns(f, 4, {a.unit(), gi, xi, a.mul(gi, xi)});
      if (!inverse(phi)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        const Vec e = h.algebra().basis(i);
        ok = d.comul(phi.apply(e)) == tensor_apply(phi, phi, h.comul(e)) && d.counit(phi.apply(e)) == h.counit(e);
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("validate_hopf examples") {
  CHECK(validate_hopf(build_group_algebra(Q(), cyclic_group(2))).ok);
  CHECK(validate_hopf(build_sweedler(Q())).ok);

  const HopfAlgebra qz2 = build_group_algebra(Q(), cyclic_group(2));
  const HopfAlgebra bad(qz2.algebra(), qz2.comul_matrix(), V(Q(), {1, 0}), qz2.antipode());
  const auto rep = validate_hopf(bad);
  CHECK_FALSE(rep.ok);
  bool counit_violation = false;
  for (const auto& v : rep.violations) counit_violation |= v.find("counit axiom") != std::string::npos;
  CHECK(counit_violation);
}

TEST_CASE("Sweedler algebra by hand") {
  const HopfAlgebra h = build_sweedler(Q());
  const FiniteAlgebra& a = h.algebra();
  const Vec g = a.parse("g"), x = a.parse("x"), gx = a.parse("gx");
  CHECK(a.mul(g, g) == a.unit());
  CHECK(is_zero(a.mul(x, x)));
  CHECK(a.mul(x, g) == -gx);
  CHECK(h.comul(x) == tensor_vec(x, a.unit()) + tensor_vec(g, x));
  CHECK(h.comul(gx) == tensor_vec(gx, g) + tensor_vec(a.unit(), gx));
  CHECK(h.antipode().apply(x) == -gx);
  CHECK(h.antipode().apply(h.antipode().apply(x)) == -x);
  CHECK_FALSE(a.is_commutative());
  CHECK_FALSE(is_cocommutative(h));
  CHECK(validate_hopf(build_sweedler(F(3))).ok);
  CHECK_THROWS_AS(build_sweedler(F(2)), Error);
}

TEST_CASE("dual_hopf examples") {
  const HopfAlgebra d = dual_hopf(build_group_algebra(Q(), cyclic_group(2)));
  const FiniteAlgebra& a = d.algebra();
  CHECK(a.labels() == std::vector<std::string>{"e*", "g*"});
  CHECK(a.mul(a.basis(0), a.basis(0)) == a.basis(0));
  CHECK(is_zero(a.mul(a.basis(0), a.basis(1))));
  CHECK(a.unit() == V(Q(), {1, 1}));
  // Delta(e*) = e*(x)e* + g*(x)g*, Delta(g*) = e*(x)g* + g*(x)e*
  CHECK(d.comul(a.basis(0)) == V(Q(), {1, 0, 0, 1}));
  CHECK(d.comul(a.basis(1)) == V(Q(), {0, 1, 1, 0}));
  CHECK(validate_hopf(d).ok);

  CHECK(sweedler_self_dual_by_search(Q()));
  CHECK(sweedler_self_dual_by_search(F(3)));
}

TEST_CASE("group algebra builder") {
  const HopfAlgebra z2 = build_group_algebra(Q(), cyclic_group(2));
  CHECK(z2.antipode() == Mat::identity(Q(), 2));
  const HopfAlgebra s3 = build_group_algebra(F(2), symmetric_group_s3());
  CHECK(s3.dim() == 6);
  CHECK(validate_hopf(s3).ok);
  CHECK_FALSE(s3.algebra().is_commutative());
  CHECK(is_cocommutative(s3));
  const HopfAlgebra triv = build_group_algebra(Q(), cyclic_group(1));
  CHECK(triv.dim() == 1);
  CHECK(left_integral_space(triv).basis() == std::vector<Vec>{V(Q(), {1})});

  GroupTable bad = cyclic_group(3);
  bad.mul[1][1] = 1;
  CHECK_THROWS_AS(build_group_algebra(Q(), bad), Error);
}

TEST_CASE("dual group algebra builder") {
  const HopfAlgebra q = build_dual_group_algebra(Q(), cyclic_group(2));
  CHECK(q.algebra().is_commutative());
  CHECK(is_field(q.algebra()) == false);
  CHECK(maximal_ideals(q.algebra()).size() == 2);
  const HopfAlgebra f2 = build_dual_group_algebra(F(2), cyclic_group(2));
  CHECK(validate_hopf(f2).ok);
  CHECK(build_dual_group_algebra(Q(), cyclic_group(1)).dim() == 1);
  // Delta(e_g) = sum over ab = g of e_a (x) e_b, for Z/3
  const HopfAlgebra z3 = build_dual_group_algebra(Q(), cyclic_group(3));
  const GroupTable t = cyclic_group(3);
  for (std::size_t g = 0; g < 3; ++g) {
    Vec expect = zero_vec(Q(), 9);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (t.mul[a][b] == g) expect[a * 3 + b] = S(Q(), 1);
    CHECK(z3.comul(z3.algebra().basis(g)) == expect);
  }
}

TEST_CASE("restricted enveloping algebra examples") {
  const HopfAlgebra u2 = build_restricted_env(one_dim_plie(F(2), S(F(2), 0)), false);
  const FiniteAlgebra& a = u2.algebra();
  CHECK(a.labels() == std::vector<std::string>{"1", "x"});
  CHECK(is_zero(a.mul(a.basis(1), a.basis(1))));
  CHECK(u2.comul(a.basis(1)) == tensor_vec(a.basis(1), a.unit()) + tensor_vec(a.unit(), a.basis(1)));

  const HopfAlgebra t3 = build_restricted_env(one_dim_plie(F(3), S(F(3), 1)), false);
  const Vec x = t3.algebra().basis(1);
  CHECK(min_poly(t3.algebra(), x) == P(F(3), {0, -1, 0, 1}));
  CHECK(radical_and_semisimplicity(t3.algebra()).semisimple);
  const HopfAlgebra t3d = build_restricted_env(one_dim_plie(F(3), S(F(3), 1)), true);
  CHECK(t3d.dim() == 3);
  CHECK(t3d.algebra().is_commutative());
  CHECK(validate_hopf(t3d).ok);

  // [x,y] = y straightens y x to x y - y
  const HopfAlgebra aff = build_restricted_env(affine_plie(F(3)), false);
  const FiniteAlgebra& b = aff.algebra();
  CHECK(b.mul(b.parse("y"), b.parse("x")) == b.parse("x*y") - b.parse("y"));
  CHECK(b.mul(b.parse("x^2"), b.parse("x")) == b.parse("x"));

  PLieAlgebra big = affine_plie(F(7));
  CHECK_THROWS_AS(build_restricted_env(big, false), Error);
  PLieAlgebra broken = affine_plie(F(3));
  broken.p_map[0] = zero_vec(F(3), 2);
  CHECK_FALSE(validate_plie(broken).ok);
  CHECK_THROWS_AS(build_restricted_env(broken, false), Error);
}

TEST_CASE("left integral examples") {
  const HopfAlgebra qz2 = build_group_algebra(Q(), cyclic_group(2));
  CHECK(left_integral_space(qz2) == Subspace::span(Q(), 2, {V(Q(), {1, 1})}));
  const HopfAlgebra sw = build_sweedler(Q());
  CHECK(left_integral_space(sw) == Subspace::span(Q(), 4, {sw.algebra().parse("x + gx")}));
}

TEST_CASE("geometric cosemisimplicity examples") {
  const auto q = is_geometrically_cosemisimple(build_group_algebra(Q(), cyclic_group(2)));
  CHECK(q.cosemisimple);
  REQUIRE(q.witness.has_value());
  CHECK(*q.witness == V(Q(), {1, 0}));
  CHECK_FALSE(is_geometrically_cosemisimple(build_dual_group_algebra(F(2), cyclic_group(2))).cosemisimple);
  CHECK_FALSE(is_geometrically_cosemisimple(build_sweedler(Q())).cosemisimple);
}

TEST_CASE("coideal subalgebra examples") {
  const HopfAlgebra sw = build_sweedler(Q());
  const Field f = Q();
  const auto k = coideal_subalgebra_check(sw, Subspace::span(f, 4, {sw.algebra().unit()}));
  CHECK(k.left);
  CHECK(k.right);
  CHECK(k.dim_divides);
  const auto r = coideal_subalgebra_check(sw, Subspace::span(f, 4, {sw.algebra().unit(), sw.algebra().parse("gx")}));
  CHECK(r.right);
  CHECK_FALSE(r.left);
  CHECK(r.dim_divides);
  const auto l = coideal_subalgebra_check(sw, Subspace::span(f, 4, {sw.algebra().unit(), sw.algebra().parse("x")}));
  CHECK(l.left);
  CHECK_FALSE(l.right);
  CHECK_THROWS_AS(coideal_subalgebra_check(sw, Subspace::span(f, 4, {sw.algebra().parse("g")})), Error);
}

TEST_CASE("corpus properties: axioms, integrals, double dual, antipode order") {
  for (const auto& h : corpus()) {
    INFO(h.field().name() << " dim " << h.dim() << " " << h.labels().back());
    CHECK(validate_hopf(h).ok);
    CHECK(left_integral_space(h).dim() == 1);
    CHECK(right_integral_space(h).dim() == 1);
    CHECK(same_structure(dual_hopf(dual_hopf(h)), h));
    const Mat s2 = h.antipode() * h.antipode();
    if (s2 != Mat::identity(h.field(), h.dim())) {
      CHECK_FALSE(h.algebra().is_commutative());
      CHECK_FALSE(is_cocommutative(h));
    }
  }
}

TEST_CASE("cosemisimplicity of dual group algebras follows Maschke") {
  // k^G is cosemisimple iff its dual kG is semisimple iff p does not divide |G|
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& g : small_groups()) {
      const bool maschke = g.order() % p != 0;
      CHECK(is_geometrically_cosemisimple(build_dual_group_algebra(F(p), g)).cosemisimple == maschke);
      CHECK(is_geometrically_cosemisimple(build_group_algebra(F(p), g)).cosemisimple);
      CHECK(radical_and_semisimplicity(build_group_algebra(F(p), g).algebra()).semisimple == maschke);
    }
  }
}
