#include "hopfinv/invtheory.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hopfinv {

namespace {

Vec component(const Vec& t, std::size_t m, std::size_t dh, std::size_t k) {
  Vec out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(t[j * dh + k]);
  return out;
}

bool in_left_tensor(const Subspace& s, const Vec& t, std::size_t dh) {
  for (std::size_t k = 0; k < dh; ++k)
    if (!s.contains(component(t, s.ambient_dim(), dh, k))) return false;
  return true;
}

Mat unit_embedding(Field f, std::size_t m, const Vec& unit_h) {
  const std::size_t dh = unit_h.size();
  Mat out(f, m * dh, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < dh; ++k) out(i * dh + k, i) = unit_h[k];
  return out;
}

bool is_invariant(const ComoduleAlgebra& c, const Vec& v) {
  return c.coact(v) == tensor_vec(v, c.hopf().algebra().unit());
}

void sort_unique(std::vector<Subspace>& v) {
  std::sort(v.begin(), v.end(), subspace_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Image of a subspace of a subalgebra's coordinates inside the ambient algebra.
Subspace push_forward(const Subalgebra& b, const Subspace& s) {
  std::vector<Vec> vs;
  for (const auto& v : s.basis()) vs.push_back(b.inclusion.apply(v));
  return Subspace::span(b.space.field(), b.space.ambient_dim(), vs);
}

Subspace pull_back(const Subalgebra& b, const Subspace& s) {
  std::vector<Vec> vs;
  for (const auto& v : s.basis()) vs.push_back(*b.space.coordinates(v));
  return Subspace::span(b.space.field(), b.algebra.dim(), vs);
}

Scalar binomial(Field f, std::uint64_t n, std::uint64_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (f.is_rational()) return Scalar::from_rational(f, mpq_class(b));
  const mpz_class r = b % mpz_class(static_cast<unsigned long>(f.characteristic()));
  return Scalar::from_int(f, r.get_si());
}

Vec evaluate_poly(const FiniteAlgebra& a, const std::vector<Vec>& coeffs, const Vec& x) {
  // Horner with algebra coefficients
  Vec acc = a.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = a.mul(acc, x) + coeffs[i];
  return acc;
}

Subalgebra invariant_subalgebra(const ComoduleAlgebra& c) { return subalgebra(c.algebra(), invariants(c)); }

const PointData* point_over(const std::vector<PointData>& pts, const Subspace& inv, const Subspace& q) {
  for (const auto& p : pts)
    if (p.ideal.intersect(inv) == q) return &p;
  return nullptr;
}

void require_h_reduced(const ComoduleAlgebra& c) {
  if (!is_h_reduced(c)) throw Error("A is not H-reduced; see h_radical");
}

}  // namespace

bool CoactionCharPoly::all_invariant() const {
  return std::all_of(invariant_flags.begin(), invariant_flags.end(), [](bool b) { return b; });
}

RingMatrix<Vec> coaction_matrix(const ComoduleAlgebra& c, const Vec& a) {
  const FiniteAlgebra& alg = c.algebra();
  const FiniteAlgebra& h = c.hopf().algebra();
  const std::size_t n = c.hopf_dim();
  const Vec d = c.coact(a);
  RingMatrix<Vec> m(n, std::vector<Vec>(n, alg.zero()));
  for (std::size_t k = 0; k < n; ++k) {
    const Vec dk = component(d, alg.dim(), n, k);
    if (is_zero(dk)) continue;
    // delta(a) (1 (x) h_j) = sum_k dk (x) h_k h_j
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : h.product(k, j)) axpy(m[t.index][j], t.coeff, dk);
  }
  return m;
}

CoactionCharPoly coaction_charpoly(const ComoduleAlgebra& c, const Vec& a) {
  CoactionCharPoly out;
  out.element = a;
  out.coeffs = charpoly_over(c.algebra(), coaction_matrix(c, a));
  for (const auto& ci : out.coeffs) out.invariant_flags.push_back(is_invariant(c, ci));
  if (!is_zero(evaluate_poly(c.algebra(), out.coeffs, a)))
    throw std::logic_error("coaction charpoly does not annihilate its element");
  return out;
}

InvarianceReport invariance_check(const ComoduleAlgebra& c, const Vec& a, bool h_reduced) {
  InvarianceReport r;
  r.charpoly = coaction_charpoly(c, a);
  r.h_reduced = h_reduced;
  r.alarm = h_reduced && !r.charpoly.all_invariant();
  return r;
}

InvarianceReport invariance_check(const ComoduleAlgebra& c, const Vec& a) {
  return invariance_check(c, a, is_h_reduced(c));
}

IntegralityWitness integrality_witness(const ComoduleAlgebra& c, const Vec& a) {
  IntegralityWitness w;
  if (is_invariant(c, a)) {
    w.found = true;
    w.method = "invariant element";
    w.coeffs = {-a, c.algebra().unit()};
    return w;
  }
  const CoactionCharPoly cp = coaction_charpoly(c, a);
  if (cp.all_invariant()) {
    w.found = true;
    w.method = "invariant charpoly";
    w.coeffs = cp.coeffs;
    return w;
  }
  if (c.field().is_rational()) {
    w.reason = "characteristic 0 and the characteristic polynomial is not invariant";
    return w;
  }
  const Subspace rad = h_radical(c);
  if (rad.is_zero()) {
    w.reason = "H-reduced with a non-invariant characteristic polynomial";
    return w;
  }
  // Modulo the H-radical the charpoly is invariant; lift it to f over B and
  // raise to a p-power M, so that f^M = sum b_i^M t^{iM} has invariant
  // coefficients and f(a)^M = 0.
  const ComoduleQuotient q = quotient_comodule(c, rad);
  const CoactionCharPoly cq = coaction_charpoly(q.comodule, q.projection.apply(a));
  if (!cq.all_invariant()) {
    w.reason = "the H-reduced quotient has a non-invariant characteristic polynomial";
    return w;
  }
  const FiniteAlgebra& alg = c.algebra();
  std::vector<Vec> b;
  for (const auto& ci : cq.coeffs) b.push_back(q.section.apply(ci));
  b.back() = alg.unit();
  const Vec fa = evaluate_poly(alg, b, a);
  const std::uint64_t p = c.field().characteristic();
  for (std::uint64_t m = p; m <= (1u << 20); m *= p) {
    if (!is_zero(alg.pow(fa, m))) continue;
    std::vector<Vec> coeffs((b.size() - 1) * m + 1, alg.zero());
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) {
      coeffs[i * m] = alg.pow(b[i], m);
      ok = is_invariant(c, coeffs[i * m]);
    }
    if (!ok) continue;
    if (!is_zero(evaluate_poly(alg, coeffs, a))) throw std::logic_error("p-power witness does not annihilate");
    w.found = true;
    w.method = "p-power lift";
    w.coeffs = std::move(coeffs);
    return w;
  }
  w.reason = "no p-power below 2^20 makes the lifted coefficients invariant";
  return w;
}

bool NormReport::consistent() const {
  return (!element_invertible || norm_invertible) && coaction_invertible == norm_invertible;
}

NormReport norm_of_coaction(const ComoduleAlgebra& c, const Vec& a) {
  const CoactionCharPoly cp = coaction_charpoly(c, a);
  NormReport r;
  r.norm = c.hopf_dim() % 2 ? -cp.coeffs[0] : cp.coeffs[0];
  r.element_invertible = inverse(c.algebra(), a).has_value();
  r.coaction_invertible = inverse(c.tensor(), c.coact(a)).has_value();
  r.norm_invertible = inverse(c.algebra(), r.norm).has_value();
  return r;
}

OrbitalData orbital(const ComoduleAlgebra& c, const PointData& point) {
  OrbitalData o;
  o.maps = point_maps(c, point);
  const FiniteAlgebra& e = point.residue;
  const FiniteAlgebra& h = c.hopf().algebra();
  const std::size_t d = e.dim(), dh = c.hopf_dim();
  const Field f = c.field();
  o.eh = tensor_product(e, h);
  std::vector<Vec> kappa;
  for (std::size_t r = 0; r < d; ++r) kappa.push_back(tensor_vec(e.basis(r), h.unit()));
  Subspace acc(f, d * dh);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Vec img = o.maps.delta_p.column(i);
    const std::size_t before = acc.dim();
    for (const auto& k : kappa) acc.add(o.eh.mul(k, img));
    if (acc.dim() > before) o.lifted_reps.push_back(c.algebra().basis(i));
  }
  o.space = acc;
  if (o.space.dim() % d != 0) throw std::logic_error("orbital dimension not divisible by the residue degree");
  o.dim_over_kp = o.space.dim() / d;
  o.is_subalgebra = is_subalgebra(o.eh, o.space);
  const Mat de = kron(Mat::identity(f, d), c.hopf().comul_matrix());
  o.is_right_coideal = true;
  for (const auto& v : o.space.basis())
    if (!in_left_tensor(o.space, de.apply(v), dh)) o.is_right_coideal = false;
  return o;
}

StabilizerData stabilizer(const ComoduleAlgebra& c, const PointData& point) { return stabilizer(c, orbital(c, point)); }

StabilizerData stabilizer(const ComoduleAlgebra& c, const OrbitalData& orbit) {
  const PointData& point = orbit.point();
  const FiniteAlgebra& e = point.residue;
  const std::size_t d = e.dim(), dh = c.hopf_dim();
  const Field f = c.field();
  StabilizerData s;
  s.point = point;
  // O(p)^+ and the left ideal it generates in k(p) (x) H
  const Mat eps_e = kron(Mat::identity(f, d), Mat::from_rows(f, dh, {c.hopf().counit_vector()}));
  const Subspace plus = orbit.space.intersect(kernel(eps_e));
  Subspace j(f, d * dh);
  for (std::size_t t = 0; t < d * dh; ++t)
    for (const auto& o : plus.basis()) j.add(orbit.eh.mul(orbit.eh.basis(t), o));
  // <w^r (x) xi_k, sum_s j_sk w^s (x) h_k> = w^r * sum_s j_sk w^s in k(p)
  std::vector<Vec> rows;
  for (const auto& jv : j.basis()) {
    Mat block(f, d, d * dh);
    for (std::size_t k = 0; k < dh; ++k) {
      Vec jk = e.zero();
      for (std::size_t r = 0; r < d; ++r) jk[r] = jv[r * dh + k];
      for (std::size_t r = 0; r < d; ++r) block.set_column(r * dh + k, e.mul(e.basis(r), jk));
    }
    for (std::size_t r = 0; r < d; ++r) rows.push_back(block.row(r));
  }
  s.space = rows.empty() ? Subspace::whole(f, d * dh) : kernel(Mat::from_rows(f, d * dh, rows));
  const HopfAlgebra dual = dual_hopf(c.hopf());
  s.ehstar = tensor_product(e, dual.algebra());
  s.dim_over_kp = s.space.dim() / d;
  s.is_subalgebra = is_subalgebra(s.ehstar, s.space);
  const Mat de = kron(Mat::identity(f, d), dual.comul_matrix());
  s.is_left_coideal = true;
  for (const auto& v : s.space.basis()) {
    const Vec t = de.apply(v);
    for (std::size_t k = 0; k < dh && s.is_left_coideal; ++k) {
      Vec part = zero_vec(f, d * dh);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t l = 0; l < dh; ++l) part[r * dh + l] = t[r * dh * dh + k * dh + l];
      s.is_left_coideal = s.space.contains(part);
    }
  }
  if (s.is_subalgebra) {
    s.algebra = subalgebra(s.ehstar, s.space).algebra;
    s.is_semisimple = radical_and_semisimplicity(s.algebra).semisimple;
  }
  return s;
}

std::vector<Subspace> brute_fiber(const ComoduleAlgebra& c, const Subspace& q) {
  const Subspace inv = invariants(c);
  std::vector<Subspace> out;
  for (const auto& p : maximal_ideals(c.algebra()))
    if (p.ideal.intersect(inv) == q) out.push_back(p.ideal);
  sort_unique(out);
  return out;
}

std::vector<Subspace> fiber(const ComoduleAlgebra& c, const Subspace& q) {
  const Subspace inv = invariants(c);
  const auto pts = maximal_ideals(c.algebra());
  const PointData* p = point_over(pts, inv, q);
  if (!p) throw Error("q is not the contraction of a maximal ideal of A");
  const OrbitalData o = orbital(c, *p);
  const Subalgebra ob = subalgebra(o.eh, o.space);
  std::vector<Subspace> out;
  for (const auto& m : maximal_ideals(ob.algebra))
    out.push_back(preimage(o.maps.delta_p, push_forward(ob, m.ideal)));
  sort_unique(out);
  return out;
}

std::vector<Subspace> invariant_contractions(const ComoduleAlgebra& c) {
  const Subspace inv = invariants(c);
  std::vector<Subspace> out;
  for (const auto& p : maximal_ideals(c.algebra())) out.push_back(p.ideal.intersect(inv));
  sort_unique(out);
  return out;
}

OpennessReport openness_ideal_check(const ComoduleAlgebra& c, const Vec& a) {
  const CoactionCharPoly cp = coaction_charpoly(c, a);
  if (!cp.all_invariant()) throw Error("characteristic polynomial is not invariant");
  const Subalgebra ah = invariant_subalgebra(c);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i + 1 < cp.coeffs.size(); ++i) gens.push_back(*ah.space.coordinates(cp.coeffs[i]));
  OpennessReport r;
  r.ideal = push_forward(ah, ideal_generated(ah.algebra, gens));
  for (const auto& p : maximal_ideals(c.algebra()))
    if (!p.ideal.contains(a)) r.image_of_da.push_back(p.ideal.intersect(ah.space));
  for (const auto& q : maximal_ideals(ah.algebra)) {
    const Subspace qa = push_forward(ah, q.ideal);
    if (!qa.contains(r.ideal)) r.complement_of_vq.push_back(qa);
  }
  sort_unique(r.image_of_da);
  sort_unique(r.complement_of_vq);
  r.verified = r.image_of_da == r.complement_of_vq;
  return r;
}

GaloisReport is_galois(const ComoduleAlgebra& c) {
  const FiniteAlgebra& a = c.algebra();
  const Vec one_h = c.hopf().algebra().unit();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      cols.push_back(c.tensor().mul(tensor_vec(a.basis(i), one_h), c.coact(a.basis(j))));
  GaloisReport g;
  g.gamma_rank = rank(Mat::from_columns(c.field(), a.dim() * c.hopf_dim(), cols));
  g.gamma_criterion = g.gamma_rank == a.dim() * c.hopf_dim();
  g.pointwise_criterion = true;
  for (const auto& p : maximal_ideals(a)) {
    g.orbit_dims.push_back(orbital(c, p).dim_over_kp);
    if (g.orbit_dims.back() != c.hopf_dim()) g.pointwise_criterion = false;
  }
  return g;
}

bool IntegralSpace::all_stabilizers_semisimple() const {
  return std::all_of(stabilizer_semisimple.begin(), stabilizer_semisimple.end(), [](bool b) { return b; });
}

bool is_comodule_map(const ComoduleAlgebra& c, const Mat& phi) {
  const HopfAlgebra& h = c.hopf();
  if (phi.rows() != c.dim() || phi.cols() != h.dim()) return false;
  const Mat id_h = Mat::identity(c.field(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec hi = h.algebra().basis(i);
    if (c.coact(phi.apply(hi)) != tensor_apply(phi, id_h, h.comul(hi))) return false;
  }
  return true;
}

IntegralSpace integral_space(const ComoduleAlgebra& c) {
  const Field f = c.field();
  const std::size_t da = c.dim(), dh = c.hopf_dim();
  const Mat& delta = c.delta();
  const Mat& comul = c.hopf().comul_matrix();
  // unknown phi(j, i) at j * dh + i; one block of equations per h_i
  Mat sys(f, dh * da * dh, da * dh);
  for (std::size_t i = 0; i < dh; ++i) {
    const std::size_t base = i * da * dh;
    for (std::size_t m = 0; m < da * dh; ++m)
      for (std::size_t j = 0; j < da; ++j)
        if (!delta(m, j).is_zero()) sys(base + m, j * dh + i) += delta(m, j);
    for (std::size_t k = 0; k < dh; ++k)
      for (std::size_t l = 0; l < dh; ++l) {
        const Scalar& co = comul(k * dh + l, i);
        if (co.is_zero()) continue;
        for (std::size_t j = 0; j < da; ++j) sys(base + j * dh + l, j * dh + k) -= co;
      }
  }
  IntegralSpace out;
  std::vector<Vec> values;
  for (const auto& v : kernel_basis(sys)) {
    Mat phi(f, da, dh);
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t i = 0; i < dh; ++i) phi(j, i) = v[j * dh + i];
    values.push_back(phi.apply(c.hopf().algebra().unit()));
    out.basis.push_back(std::move(phi));
  }
  out.value_ideal = Subspace::span(f, da, values);
  const Subspace inv = invariants(c);
  out.value_ideal_is_ideal = inv.contains(out.value_ideal);
  for (const auto& u : inv.basis())
    for (const auto& v : out.value_ideal.basis())
      if (!out.value_ideal.contains(c.algebra().mul(u, v))) out.value_ideal_is_ideal = false;
  if (!values.empty()) {
    if (auto lam = solve(Mat::from_columns(f, da, values), c.algebra().unit())) {
      Mat total(f, da, dh);
      for (std::size_t b = 0; b < values.size(); ++b) total = total + (*lam)[b] * out.basis[b];
      out.has_total = true;
      out.total = std::move(total);
    }
  }
  for (const auto& p : maximal_ideals(c.algebra())) {
    out.stabilizer_semisimple.push_back(stabilizer(c, p).is_semisimple);
    out.integral_outside_point.push_back(!p.ideal.contains(out.value_ideal));
  }
  return out;
}

Vec doi_trace(const ComoduleAlgebra& c, const Mat& phi, const HopfModule& m, const Vec& v) {
  if (!is_comodule_map(c, phi) || phi.apply(c.hopf().algebra().unit()) != c.algebra().unit())
    throw Error("phi is not a total integral");
  const Field f = c.field();
  const std::size_t da = c.dim();
  const Vec t = tensor_apply(Mat::identity(f, m.dim), phi * c.hopf().antipode(), m.coaction.apply(v));
  Vec out = zero_vec(f, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j)
    for (std::size_t i = 0; i < da; ++i)
      if (!t[j * da + i].is_zero()) axpy(out, t[j * da + i], m.action[i].column(j));
  return out;
}

bool FreeBasisReport::ok() const {
  return std::all_of(factors.begin(), factors.end(), [](const FreeBasisFactor& f) {
    return f.unique_representation && f.orbit_dim_constant && f.basis.size() == f.orbit_dim;
  });
}

FreeBasisReport free_basis_over_invariants(const ComoduleAlgebra& c) {
  require_h_reduced(c);
  const FiniteAlgebra& a = c.algebra();
  const Subalgebra ah = invariant_subalgebra(c);
  FreeBasisReport rep;
  for (const auto& eh : primitive_idempotents(ah.algebra)) {
    FreeBasisFactor fac;
    fac.idempotent = ah.inclusion.apply(eh);
    const Localization loc = localize_at_invariant(c, fac.idempotent);
    const ComoduleAlgebra& ae = *loc.comodule;
    const Mat incl = image(a.left_mult(fac.idempotent)).basis_matrix();
    const auto pts = maximal_ideals(ae.algebra());
    const OrbitalData o = orbital(ae, pts.front());
    fac.orbit_dim = o.dim_over_kp;
    fac.orbit_dim_constant = true;
    for (std::size_t k = 1; k < pts.size(); ++k)
      if (orbital(ae, pts[k]).dim_over_kp != fac.orbit_dim) fac.orbit_dim_constant = false;
    const Subspace inv_e = invariants(ae);
    std::vector<Vec> cols;
    for (const auto& r : o.lifted_reps) {
      fac.basis.push_back(incl.apply(r));
      for (const auto& u : inv_e.basis()) cols.push_back(ae.algebra().mul(u, r));
    }
    fac.unique_representation =
        cols.size() == ae.dim() && rank(Mat::from_columns(c.field(), ae.dim(), cols)) == ae.dim();
    rep.factors.push_back(std::move(fac));
  }
  return rep;
}

std::vector<Subspace> costable_family(const ComoduleAlgebra& c) {
  const FiniteAlgebra& a = c.algebra();
  std::vector<Subspace> base{Subspace(c.field(), a.dim()), Subspace::whole(c.field(), a.dim())};
  for (const auto& p : maximal_ideals(a)) base.push_back(largest_costable_within(c, p.ideal));
  for (std::size_t i = 0; i < a.dim(); ++i) base.push_back(costable_closure(c, {a.basis(i)}));
  const Subspace inv = invariants(c);
  for (const auto& v : inv.basis()) base.push_back(costable_closure(c, {v}));
  sort_unique(base);
  std::vector<Subspace> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      out.push_back(base[i].sum(base[j]));
      out.push_back(base[i].intersect(base[j]));
    }
  sort_unique(out);
  return out;
}

CorrespondenceReport ideal_correspondence_check(const ComoduleAlgebra& c) {
  require_h_reduced(c);
  const FiniteAlgebra& a = c.algebra();
  const Subalgebra ah = invariant_subalgebra(c);
  const std::vector<Subspace> costable = costable_family(c);
  std::vector<Subspace> inv_ideals;
  // A^H is reduced, hence a product of fields; its ideals are sums of factors
  const auto idem = primitive_idempotents(ah.algebra);
  const std::size_t r = std::min<std::size_t>(idem.size(), 10);
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < r; ++k)
      if (mask >> k & 1) gens.push_back(idem[k]);
    inv_ideals.push_back(push_forward(ah, ideal_generated(ah.algebra, gens)));
  }
  for (const auto& i : costable) inv_ideals.push_back(i.intersect(ah.space));
  sort_unique(inv_ideals);
  CorrespondenceReport rep;
  rep.costable_count = costable.size();
  rep.invariant_ideal_count = inv_ideals.size();
  for (std::size_t k = 0; k < costable.size(); ++k) {
    const Subspace j = costable[k].intersect(ah.space);
    if (!(ideal_generated(a, j.basis()) == costable[k]))
      rep.failures.push_back("(I cap A^H) A != I for costable ideal " + std::to_string(k));
  }
  for (std::size_t k = 0; k < inv_ideals.size(); ++k) {
    const Subspace ja = ideal_generated(a, inv_ideals[k].basis());
    if (!(ja.intersect(ah.space) == inv_ideals[k]))
      rep.failures.push_back("(J A) cap A^H != J for invariant ideal " + std::to_string(k));
  }
  return rep;
}

ModuleEquivalenceReport hopf_module_equivalence_check(const ComoduleAlgebra& c, const HopfModule& m) {
  require_h_reduced(c);
  const Field f = c.field();
  const FiniteAlgebra& a = c.algebra();
  const std::size_t da = a.dim(), dh = c.hopf_dim();
  ModuleEquivalenceReport rep;
  const Subspace n = invariants(c, m);
  const std::size_t s = n.dim();
  std::vector<Vec> gen;
  for (const auto& v : n.basis())
    for (std::size_t j = 0; j < da; ++j) gen.push_back(m.action[j].apply(v));
  if (!Subspace::span(f, m.dim, gen).is_whole()) {
    rep.skipped = true;
    rep.notice = "M is not generated by M^H; check skipped";
    return rep;
  }
  // N (x)_{A^H} A as (N (x) A) / R with (v u) (x) a - v (x) (u a)
  const Subspace inv = invariants(c);
  const std::size_t tdim = s * da;
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& u : inv.basis()) {
      const Vec vu = *n.coordinates(m.act(n.basis()[i], u));
      for (std::size_t j = 0; j < da; ++j) {
        Vec t = zero_vec(f, tdim);
        for (std::size_t k = 0; k < s; ++k) t[k * da + j] += vu[k];
        const Vec ua = a.mul(u, a.basis(j));
        for (std::size_t l = 0; l < da; ++l) t[i * da + l] -= ua[l];
        rel.push_back(std::move(t));
      }
    }
  const Subspace r = Subspace::span(f, tdim, rel);
  Mat psi(f, m.dim, tdim);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < da; ++j) psi.set_column(i * da + j, m.action[j].apply(n.basis()[i]));
  rep.psi_bijective = kernel(psi) == r && rank(psi) == m.dim;

  const auto comp = r.complement_indices();
  auto project = [&](const Vec& t) {
    const Vec red = r.reduce(t);
    Vec out;
    for (auto k : comp) out.push_back(red[k]);
    return out;
  };
  const Mat delta_t = kron(Mat::identity(f, s), c.delta());
  Mat delta_q(f, comp.size() * dh, comp.size());
  for (std::size_t b = 0; b < comp.size(); ++b) {
    const Vec t = delta_t.apply(unit_vec(f, tdim, comp[b]));
    for (std::size_t k = 0; k < dh; ++k) {
      const Vec qk = project(component(t, tdim, dh, k));
      for (std::size_t l = 0; l < comp.size(); ++l) delta_q(l * dh + k, b) = qk[l];
    }
  }
  const Subspace qinv = kernel(delta_q - unit_embedding(f, comp.size(), c.hopf().algebra().unit()));
  std::vector<Vec> images;
  for (std::size_t i = 0; i < s; ++i) {
    Vec t = zero_vec(f, tdim);
    for (std::size_t l = 0; l < da; ++l) t[i * da + l] = a.unit()[l];
    images.push_back(project(t));
  }
  const Subspace img = Subspace::span(f, comp.size(), images);
  rep.phi_bijective = img.dim() == s && img == qinv;
  return rep;
}

bool PowerImageReport::ok() const {
  return std::all_of(lifts.begin(), lifts.end(), [](bool b) { return b; });
}

PowerImageReport power_image_check(const ComoduleAlgebra& c, const Subspace& ideal, const Vec& abar) {
  if (!is_costable(c, ideal)) throw Error("ideal is not costable");
  PowerImageReport rep;
  rep.m = c.hopf_dim();
  if (ideal.is_whole()) {
    rep.lifts.assign(rep.m + 1, true);
    return rep;
  }
  const ComoduleQuotient q = quotient_comodule(c, ideal);
  if (!is_invariant(q.comodule, abar)) throw Error("element of A/I is not invariant");
  std::vector<Vec> imgs;
  const Subspace inv = invariants(c);
  for (const auto& u : inv.basis()) imgs.push_back(q.projection.apply(u));
  const Subspace image = Subspace::span(c.field(), q.comodule.dim(), imgs);
  const FiniteAlgebra& qa = q.comodule.algebra();
  for (std::size_t j = 0; j <= rep.m; ++j)
    rep.lifts.push_back(image.contains(binomial(c.field(), rep.m, j) * qa.pow(abar, j)));
  return rep;
}

bool WeakReductivityReport::ok() const {
  return std::all_of(surjective.begin(), surjective.end(), [](bool b) { return b; });
}

WeakReductivityReport weak_reductivity_check(const ComoduleAlgebra& c, const std::vector<Subspace>& family) {
  const Subspace inv = invariants(c);
  WeakReductivityReport rep;
  for (const auto& i : family) {
    if (!is_costable(c, i)) throw Error("family member is not costable");
    if (i.is_whole()) {
      rep.surjective.push_back(true);
      continue;
    }
    const ComoduleQuotient q = quotient_comodule(c, i);
    std::vector<Vec> imgs;
    for (const auto& u : inv.basis()) imgs.push_back(q.projection.apply(u));
    rep.surjective.push_back(Subspace::span(c.field(), q.comodule.dim(), imgs) == invariants(q.comodule));
  }
  return rep;
}

bool has_invariant_charpolys(const ComoduleAlgebra& c) {
  if (c.hopf().algebra().is_commutative() || is_h_reduced(c)) return true;
  const FiniteAlgebra& a = c.algebra();
  std::mt19937_64 rng(0x1a7e);
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < a.dim(); ++i) probes.push_back(a.basis(i));
  for (int t = 0; t < 8; ++t) {
    Vec v = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) v[i] = Scalar::from_int(c.field(), static_cast<long long>(rng() % 7) - 3);
    probes.push_back(v);
  }
  for (const auto& v : probes)
    if (!coaction_charpoly(c, v).all_invariant()) return false;
  return true;
}

ReductivityCertificate weak_reductivity_certificate(const ComoduleAlgebra& c) {
  const std::uint64_t ch = c.field().characteristic();
  const bool dim_invertible = ch == 0 || c.hopf_dim() % ch != 0;
  if (dim_invertible && has_invariant_charpolys(c))
    return {'a', "invariant characteristic polynomials and dim H invertible in K"};
  if (integral_space(c).has_total) return {'b', "a total integral exists"};
  if (is_h_reduced(c))
    return {'c', "A is H-reduced; every point of an Artinian A is H-regular, so no stabilizer condition remains"};
  return {0, "no sufficient condition applies"};
}

bool ResidueDegreeReport::ok() const {
  return std::all_of(points.begin(), points.end(), [](const ResidueDegreeEntry& e) { return e.ok; });
}

ResidueDegreeReport residue_degree_check(const ComoduleAlgebra& c) {
  const Subspace inv = invariants(c);
  ResidueDegreeReport rep;
  for (const auto& p : maximal_ideals(c.algebra())) {
    ResidueDegreeEntry e;
    e.degree_p = p.degree();
    e.degree_q = inv.dim() - p.ideal.intersect(inv).dim();
    e.orbit_dim = orbital(c, p).dim_over_kp;
    e.ok = e.degree_q > 0 && e.degree_p % e.degree_q == 0 && e.degree_p / e.degree_q <= e.orbit_dim;
    rep.points.push_back(e);
  }
  return rep;
}

OrbitResidueReport orbit_residue_iso_check(const ComoduleAlgebra& c, const PointData& point) {
  require_h_reduced(c);
  const FiniteAlgebra& a = c.algebra();
  const Subalgebra ah = invariant_subalgebra(c);
  const Subspace q = point.ideal.intersect(ah.space);
  Vec e;
  for (const auto& eh : primitive_idempotents(ah.algebra)) {
    const Vec v = ah.inclusion.apply(eh);
    if (!q.contains(v)) e = v;
  }
  if (e.empty()) throw std::logic_error("no invariant idempotent outside q");
  const Subspace eA = image(a.left_mult(e));
  std::vector<Vec> gens;
  for (const auto& u : q.basis()) gens.push_back(a.mul(e, u));
  const Subspace qa = ideal_generated(a, gens);
  const std::size_t degree_q = ah.space.dim() - q.dim();
  OrbitResidueReport rep;
  const OrbitalData o = orbital(c, point);
  rep.orbit_dim = o.dim_over_kp;
  rep.fiber_dim = (eA.dim() - qa.dim()) / degree_q;
  rep.dims_match = rep.orbit_dim == rep.fiber_dim;
  if (point.degree() == 1 && degree_q == 1 && rep.dims_match) {
    rep.iso_searched = true;
    const Subalgebra b = subalgebra(a, eA, e);
    const Quotient fq = quotient_algebra(b.algebra, pull_back(b, qa));
    const Subalgebra ob = subalgebra(o.eh, o.space);
    const std::size_t n = fq.algebra.dim();
    Mat t(c.field(), ob.algebra.dim(), n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec in_a = b.inclusion.apply(fq.section.apply(fq.algebra.basis(i)));
      t.set_column(i, *o.space.coordinates(o.maps.delta_p.apply(in_a)));
    }
    bool ok = t.rows() == n && inverse(t).has_value();
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = t.apply(fq.algebra.mul(fq.algebra.basis(i), fq.algebra.basis(j))) ==
             ob.algebra.mul(t.column(i), t.column(j));
    rep.iso_found = ok;
  }
  return rep;
}

}  // namespace hopfinv
