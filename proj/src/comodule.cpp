#include "hopfinv/comodule.hpp"

#include <deque>
#include <stdexcept>

namespace hopfinv {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }
std::string pair_text(std::size_t i, std::size_t j) { return "(i,j)=(" + idx(i) + "," + idx(j) + ")"; }

Mat counit_row(const HopfAlgebra& h) { return Mat::from_rows(h.field(), h.dim(), {h.counit_vector()}); }

/// Component k of a tensor t in K^m (x) H: the vector of coefficients of v_j (x) h_k.
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

/// Matrix of v -> v (x) 1_H.
Mat unit_embedding(Field f, std::size_t m, const Vec& unit_h) {
  const std::size_t dh = unit_h.size();
  Mat out(f, m * dh, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < dh; ++k) out(i * dh + k, i) = unit_h[k];
  return out;
}

/// Shared checks of a right coaction on K^m: coassociativity and counit.
void check_coaction(const HopfAlgebra& h, const Mat& delta, std::size_t m, const std::string& what,
                    AlgebraReport& rep) {
  const Field f = h.field();
  const Mat id_m = Mat::identity(f, m);
  const Mat id_h = Mat::identity(f, h.dim());
  const Mat eps = counit_row(h);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec e = unit_vec(f, m, i);
    const Vec d = delta.apply(e);
    if (tensor_apply(delta, id_h, d) != tensor_apply(id_m, h.comul_matrix(), d))
      rep.fail(what + " not coassociative at i=" + idx(i));
    if (tensor_apply(id_m, eps, d) != e) rep.fail(what + " not counital at i=" + idx(i));
  }
}

}  // namespace

ComoduleAlgebra::ComoduleAlgebra(HopfAlgebra h, FiniteAlgebra a, Mat delta)
    : h_(std::move(h)), a_(std::move(a)), delta_(std::move(delta)) {
  if (!(h_.field() == a_.field())) throw Error("algebra and Hopf algebra live over different fields");
  if (delta_.rows() != a_.dim() * h_.dim() || delta_.cols() != a_.dim()) throw Error("coaction has wrong shape");
  tensor_ = tensor_product(a_, h_.algebra());
}

AlgebraReport validate_comodule(const ComoduleAlgebra& c) {
  AlgebraReport rep = validate_algebra(c.algebra(), true);
  for (const auto& v : validate_hopf(c.hopf()).violations) rep.fail("hopf: " + v);
  const FiniteAlgebra& a = c.algebra();
  const FiniteAlgebra& h = c.hopf().algebra();
  if (c.coact(a.unit()) != tensor_vec(a.unit(), h.unit())) rep.fail("coaction not unital");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vec lhs = c.coact(a.mul(a.basis(i), a.basis(j)));
      if (lhs != tensor_mul(a, h, c.coact(a.basis(i)), c.coact(a.basis(j))))
        rep.fail("coaction not multiplicative at " + pair_text(i, j));
    }
  check_coaction(c.hopf(), c.delta(), a.dim(), "coaction", rep);
  return rep;
}

ComoduleAlgebra trivial_coaction(const HopfAlgebra& h, const FiniteAlgebra& a) {
  return ComoduleAlgebra(h, a, unit_embedding(a.field(), a.dim(), h.algebra().unit()));
}

Vec HopfModule::act(const Vec& v, const Vec& a) const {
  Vec out = zero_vec(v.empty() ? Field() : v.front().field(), dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) axpy(out, a[i], action[i].apply(v));
  return out;
}

AlgebraReport validate_hopf_module(const ComoduleAlgebra& c, const HopfModule& m) {
  AlgebraReport rep;
  const FiniteAlgebra& a = c.algebra();
  const FiniteAlgebra& h = c.hopf().algebra();
  const Field f = c.field();
  const std::size_t dh = c.hopf_dim();
  if (m.action.size() != a.dim() || m.coaction.rows() != m.dim * dh || m.coaction.cols() != m.dim) {
    rep.fail("module structure has wrong shape");
    return rep;
  }
  auto act_by = [&](const Vec& x) {
    Mat out(f, m.dim, m.dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) out = out + x[i] * m.action[i];
    return out;
  };
  if (act_by(a.unit()) != Mat::identity(f, m.dim)) rep.fail("unit does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (act_by(a.mul(a.basis(i), a.basis(j))) != m.action[j] * m.action[i])
        rep.fail("action not associative at " + pair_text(i, j));
  check_coaction(c.hopf(), m.coaction, m.dim, "module coaction", rep);
  // delta(v a) = delta(v) delta(a)
  for (std::size_t v = 0; v < m.dim; ++v) {
    const Vec dv = m.coaction.apply(unit_vec(f, m.dim, v));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vec da = c.coact(a.basis(i));
      Vec rhs = zero_vec(f, m.dim * dh);
      for (std::size_t p = 0; p < dv.size(); ++p) {
        if (dv[p].is_zero()) continue;
        for (std::size_t q = 0; q < da.size(); ++q) {
          if (da[q].is_zero()) continue;
          const Vec mv = m.action[q / dh].apply(unit_vec(f, m.dim, p / dh));
          const Vec hh = h.mul(h.basis(p % dh), h.basis(q % dh));
          axpy(rhs, dv[p] * da[q], tensor_vec(mv, hh));
        }
      }
      if (m.coaction.apply(m.action[i].apply(unit_vec(f, m.dim, v))) != rhs)
        rep.fail("Hopf module compatibility fails at (v,i)=(" + idx(v) + "," + idx(i) + ")");
    }
  }
  return rep;
}

HopfModule regular_module(const ComoduleAlgebra& c) {
  HopfModule m;
  m.dim = c.dim();
  for (std::size_t i = 0; i < c.dim(); ++i) m.action.push_back(c.algebra().right_mult(c.algebra().basis(i)));
  m.coaction = c.delta();
  return m;
}

HopfModule direct_sum(const HopfModule& m, const HopfModule& n) {
  const Field f = m.coaction.field();
  const std::size_t dh = m.dim ? m.coaction.rows() / m.dim : n.coaction.rows() / n.dim;
  HopfModule s;
  s.dim = m.dim + n.dim;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    Mat blk(f, s.dim, s.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t col = 0; col < m.dim; ++col) blk(r, col) = m.action[i](r, col);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t col = 0; col < n.dim; ++col) blk(m.dim + r, m.dim + col) = n.action[i](r, col);
    s.action.push_back(std::move(blk));
  }
  s.coaction = Mat(f, s.dim * dh, s.dim);
  for (std::size_t col = 0; col < m.dim; ++col)
    for (std::size_t r = 0; r < m.dim * dh; ++r) s.coaction(r, col) = m.coaction(r, col);
  for (std::size_t col = 0; col < n.dim; ++col)
    for (std::size_t r = 0; r < n.dim * dh; ++r) s.coaction(m.dim * dh + r, m.dim + col) = n.coaction(r, col);
  return s;
}

HopfModule quotient_module(const ComoduleAlgebra& c, const Subspace& ideal) {
  if (!is_costable(c, ideal)) throw Error("ideal is not costable");
  const Quotient q = quotient_algebra(c.algebra(), ideal);
  const Mat id_h = Mat::identity(c.field(), c.hopf_dim());
  HopfModule m;
  m.dim = q.algebra.dim();
  for (std::size_t i = 0; i < c.dim(); ++i)
    m.action.push_back(q.projection * c.algebra().right_mult(c.algebra().basis(i)) * q.section);
  m.coaction = kron(q.projection, id_h) * c.delta() * q.section;
  return m;
}

Subspace invariants(const ComoduleAlgebra& c) {
  return kernel(c.delta() - unit_embedding(c.field(), c.dim(), c.hopf().algebra().unit()));
}

Subspace invariants(const ComoduleAlgebra& c, const HopfModule& m) {
  return kernel(m.coaction - unit_embedding(c.field(), m.dim, c.hopf().algebra().unit()));
}

Mat hstar_matrix(const ComoduleAlgebra& c, const Vec& xi) {
  const Mat row = Mat::from_rows(c.field(), c.hopf_dim(), {xi});
  return kron(Mat::identity(c.field(), c.dim()), row) * c.delta();
}

Vec hstar_action(const ComoduleAlgebra& c, const Vec& xi, const Vec& v) { return hstar_matrix(c, xi).apply(v); }

bool is_costable(const ComoduleAlgebra& c, const Subspace& i) {
  if (!is_ideal(c.algebra(), i)) throw Error("subspace is not an ideal");
  for (const auto& b : i.basis())
    if (!in_left_tensor(i, c.coact(b), c.hopf_dim())) return false;
  return true;
}

Subspace costable_closure(const ComoduleAlgebra& c, const std::vector<Vec>& gens) {
  const std::size_t dh = c.hopf_dim();
  Subspace s = ideal_generated(c.algebra(), gens);
  while (true) {
    std::vector<Vec> more = s.basis();
    for (const auto& b : s.basis()) {
      const Vec d = c.coact(b);
      for (std::size_t k = 0; k < dh; ++k) more.push_back(component(d, c.dim(), dh, k));
    }
    Subspace next = ideal_generated(c.algebra(), more);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Subspace largest_costable_within(const ComoduleAlgebra& c, const Subspace& j) {
  const Field f = c.field();
  const std::size_t dh = c.hopf_dim();
  Subspace m = j;
  while (!m.is_zero()) {
    std::vector<Vec> gens;
    for (const auto& b : m.basis())
      for (std::size_t k = 0; k < dh; ++k) gens.push_back(tensor_vec(b, unit_vec(f, dh, k)));
    Subspace next = m.intersect(preimage(c.delta(), Subspace::span(f, c.dim() * dh, gens)));
    if (next.dim() == m.dim()) break;
    m = std::move(next);
  }
  return m;
}

PointMaps point_maps(const ComoduleAlgebra& c, const PointData& point) {
  PointMaps out;
  out.point = point;
  out.delta_p = kron(point.alpha, Mat::identity(c.field(), c.hopf_dim())) * c.delta();
  out.kernel = kernel(out.delta_p);
  if (!(out.kernel == largest_costable_within(c, point.ideal)))
    throw std::logic_error("kernel of delta_p differs from the largest costable ideal in p");
  return out;
}

Subspace h_radical(const ComoduleAlgebra& c) { return largest_costable_within(c, nilradical(c.algebra())); }

bool is_h_reduced(const ComoduleAlgebra& c) { return h_radical(c).is_zero(); }

bool is_h_simple(const ComoduleAlgebra& c) {
  const auto points = maximal_ideals(c.algebra());
  std::optional<Subspace> witness;
  bool simple = false;
  for (const auto& p : points) {
    Subspace l = largest_costable_within(c, p.ideal);
    if (l.is_zero()) {
      simple = true;
      break;
    }
    if (!witness) witness = std::move(l);
  }
  // Cross-checks: every nonzero element generates A when simple; otherwise
  // the witness is a nonzero proper costable ideal.
  if (simple) {
    for (const auto& p : points)
      for (const auto& b : p.ideal.basis())
        if (!costable_closure(c, {b}).is_whole())
          throw std::logic_error("H-simplicity cross-check failed: proper costable closure found");
  } else if (witness && (witness->is_whole() || !is_costable(c, *witness))) {
    throw std::logic_error("H-simplicity cross-check failed: witness is not a proper costable ideal");
  }
  return simple;
}

ComoduleQuotient quotient_comodule(const ComoduleAlgebra& c, const Subspace& ideal) {
  if (!is_costable(c, ideal)) throw Error("ideal is not costable");
  Quotient q = quotient_algebra(c.algebra(), ideal);
  Mat delta = kron(q.projection, Mat::identity(c.field(), c.hopf_dim())) * c.delta() * q.section;
  return ComoduleQuotient{ComoduleAlgebra(c.hopf(), std::move(q.algebra), std::move(delta)), std::move(q.projection),
                          std::move(q.section)};
}

namespace {

ComoduleAlgebra checked(ComoduleAlgebra c) {
  const auto rep = validate_comodule(c);
  if (!rep.ok) throw Error(rep.violations.front());
  return c;
}

bool is_automorphism(const FiniteAlgebra& a, const Mat& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim() || !inverse(m)) return false;
  if (m.apply(a.unit()) != a.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.apply(a.mul(a.basis(i), a.basis(j))) != a.mul(m.column(i), m.column(j))) return false;
  return true;
}

}  // namespace

ComoduleAlgebra build_graded(const GroupTable& g, const FiniteAlgebra& a, const std::vector<std::size_t>& degrees) {
  g.validate();
  const std::size_t n = g.order();
  if (degrees.size() != a.dim()) throw Error("one degree per basis element is required");
  for (auto d : degrees)
    if (d >= n) throw Error("degree out of range");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j))
        if (degrees[t.index] != g.mul[degrees[i]][degrees[j]])
          throw Error("grading incompatible at " + pair_text(i, j));
  HopfAlgebra h = build_group_algebra(a.field(), g);
  Mat delta(a.field(), a.dim() * n, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) delta(j * n + degrees[j], j) = Scalar::one(a.field());
  return checked(ComoduleAlgebra(std::move(h), a, std::move(delta)));
}

ComoduleAlgebra build_group_action(const GroupTable& g, const FiniteAlgebra& a,
                                   const std::vector<std::pair<std::size_t, Mat>>& generators) {
  g.validate();
  const Field f = a.field();
  const std::size_t n = g.order();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].first >= n) throw Error("generator " + idx(k) + " is not a group element");
    if (!is_automorphism(a, generators[k].second))
      throw Error("matrix for generator " + idx(k) + " is not an algebra automorphism");
  }
  std::vector<std::optional<Mat>> mats(n);
  mats[g.identity()] = Mat::identity(f, a.dim());
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& [s, m] : generators) {
      const std::size_t y = g.mul[s][x];
      if (!mats[y]) {
        mats[y] = m * *mats[x];
        queue.push_back(y);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!mats[x]) throw Error("generators do not generate the group");
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [s, m] : generators)
      if (m * *mats[x] != *mats[g.mul[s][x]]) throw Error("automorphisms do not compose according to the group table");
  HopfAlgebra h = build_dual_group_algebra(f, g);
  Mat delta(f, a.dim() * n, a.dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) delta(j * n + x, i) = (*mats[x])(j, i);
  return checked(ComoduleAlgebra(std::move(h), a, std::move(delta)));
}

ComoduleAlgebra build_derivation(const FiniteAlgebra& a, const Mat& d, const Scalar& c) {
  const Field f = a.field();
  if (f.is_rational()) throw Error("derivation instances need a prime field");
  if (d.rows() != a.dim() || d.cols() != a.dim()) throw Error("derivation matrix has wrong shape");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec ai = a.basis(i), aj = a.basis(j);
      if (d.apply(a.mul(ai, aj)) != a.mul(d.apply(ai), aj) + a.mul(ai, d.apply(aj)))
        throw Error("d is not a derivation at " + pair_text(i, j));
    }
  const std::uint64_t p = f.characteristic();
  std::vector<Mat> powers{Mat::identity(f, a.dim())};
  for (std::uint64_t k = 1; k <= p; ++k) powers.push_back(d * powers.back());
  if (powers[p] != c * d) throw Error("d^p differs from c*d");
  HopfAlgebra h = build_restricted_env(one_dim_plie(f, c), true);
  Mat delta(f, a.dim() * p, a.dim());
  for (std::uint64_t k = 0; k < p; ++k)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) delta(j * p + k, i) = powers[k](j, i);
  return checked(ComoduleAlgebra(std::move(h), a, std::move(delta)));
}

ComoduleAlgebra restrict_comodule(const ComoduleAlgebra& c, const Subalgebra& b) {
  const std::size_t dh = c.hopf_dim();
  const std::size_t m = b.algebra.dim();
  Mat delta(c.field(), m * dh, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec d = c.coact(b.inclusion.column(i));
    for (std::size_t k = 0; k < dh; ++k) {
      const auto coords = b.space.coordinates(component(d, c.dim(), dh, k));
      if (!coords) throw Error("subalgebra is not costable");
      for (std::size_t j = 0; j < m; ++j) delta(j * dh + k, i) = (*coords)[j];
    }
  }
  return ComoduleAlgebra(c.hopf(), b.algebra, std::move(delta));
}

Localization localize_at_invariant(const ComoduleAlgebra& c, const Vec& s) {
  const FiniteAlgebra& a = c.algebra();
  const Field f = c.field();
  if (c.coact(s) != tensor_vec(s, c.hopf().algebra().unit())) throw Error("element is not invariant");
  Mat power = Mat::identity(f, a.dim());
  const Mat ls = a.left_mult(s);
  for (std::size_t k = 0; k < a.dim(); ++k) power = ls * power;
  const Subspace unit_part = image(power);
  Localization out;
  if (unit_part.is_zero()) {
    out.map = Mat(f, 0, a.dim());
    out.idempotent = a.zero();
    out.warning = "s is nilpotent on every factor; the localization is the zero algebra";
    return out;
  }
  // 1 = e + f with e in s^N A and f in ker s^N (Fitting decomposition)
  const Subspace nil_part = kernel(power);
  std::vector<Vec> cols = unit_part.basis();
  cols.insert(cols.end(), nil_part.basis().begin(), nil_part.basis().end());
  const auto coeffs = solve(Mat::from_columns(f, a.dim(), cols), a.unit());
  if (!coeffs) throw std::logic_error("Fitting decomposition failed");
  Vec e = a.zero();
  for (std::size_t i = 0; i < unit_part.dim(); ++i) axpy(e, (*coeffs)[i], unit_part.basis()[i]);
  Subalgebra b = subalgebra(a, unit_part, e);
  out.map = Mat(f, b.algebra.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.map.set_column(i, *unit_part.coordinates(a.mul(e, a.basis(i))));
  out.comodule = restrict_comodule(c, b);
  out.idempotent = std::move(e);
  return out;
}

}  // namespace hopfinv
