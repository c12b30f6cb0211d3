#include "hopfinv/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hopfinv {

FiniteAlgebra::FiniteAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<Term>> table, Vec unit)
    : f_(f), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n * n) throw Error("structure constant table has wrong size");
  if (unit_.size() != n) throw Error("unit vector has wrong length");
  for (auto& cell : table_) {
    for (const auto& t : cell) {
      if (t.index >= n) throw Error("structure constant index out of range");
      if (t.coeff.field() != f_) throw Error("structure constant over the wrong field");
    }
    std::sort(cell.begin(), cell.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    for (std::size_t k = 1; k < cell.size(); ++k)
      if (cell[k].index == cell[k - 1].index) throw Error("duplicate structure constant entry");
    std::erase_if(cell, [](const Term& t) { return t.coeff.is_zero(); });
  }
}

FiniteAlgebra FiniteAlgebra::from_products(Field f, std::vector<std::string> labels,
                                           const std::function<Vec(std::size_t, std::size_t)>& product, Vec unit) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) table[i * n + j].push_back({k, v[k]});
    }
  return FiniteAlgebra(f, std::move(labels), std::move(table), std::move(unit));
}

FiniteAlgebra FiniteAlgebra::base(Field f) {
  return FiniteAlgebra(f, {"1"}, {{Term{0, Scalar::one(f)}}}, {Scalar::one(f)});
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw std::logic_error("algebra element has wrong length");
  Vec out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (const auto& t : table_[i * n + j]) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Vec FiniteAlgebra::pow(const Vec& a, std::uint64_t e) const {
  Vec acc = unit_;
  Vec b = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return acc;
}

Mat FiniteAlgebra::left_mult(const Vec& a) const {
  Mat m(f_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(a, basis(j)));
  return m;
}

Mat FiniteAlgebra::right_mult(const Vec& a) const {
  Mat m(f_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(basis(j), a));
  return m;
}

bool FiniteAlgebra::is_commutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = table_[i * n + j];
      const auto& y = table_[j * n + i];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].index != y[k].index || x[k].coeff != y[k].coeff) return false;
    }
  return true;
}

std::string FiniteAlgebra::format(const Vec& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string cs = v[i].to_string();
    const bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (labels_[i] == "1")
      out += cs;
    else if (cs == "1")
      out += labels_[i];
    else
      out += cs + "*" + labels_[i];
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Vec FiniteAlgebra::parse(const std::string& text) const {
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool neg = false;
  for (char ch : text) {
    const std::string t = trim(cur);
    if ((ch == '+' || ch == '-') && (t.empty() || (t.back() != '*' && t.back() != '/' && t.back() != '^'))) {
      if (!t.empty()) {
        terms.emplace_back(neg, t);
        neg = ch == '-';
      } else if (ch == '-') {
        neg = !neg;
      }
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty()) terms.emplace_back(neg, trim(cur));
  if (terms.empty()) throw Error("empty element expression");
  auto label_index = [&](const std::string& l) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    return std::nullopt;
  };
  Vec out = zero();
  for (const auto& [minus, t] : terms) {
    Scalar c = Scalar::one(f_);
    Vec v;
    if (auto i = label_index(t)) {
      v = basis(*i);
    } else if (t.find('*') == std::string::npos) {
      c = Scalar::parse(f_, t);
      v = unit_;
    } else {
      const auto star = t.find('*');
      c = Scalar::parse(f_, trim(t.substr(0, star)));
      const std::string l = trim(t.substr(star + 1));
      auto i = label_index(l);
      if (!i) throw Error("unknown basis label '" + l + "'");
      v = basis(*i);
    }
    axpy(out, minus ? -c : c, v);
  }
  return out;
}

FiniteAlgebra monogenic_algebra(const Poly& f, const std::string& var) {
  if (f.degree() < 1) throw Error("monogenic algebra needs a modulus of positive degree");
  const Field fld = f.field();
  const auto d = static_cast<std::size_t>(f.degree());
  const Poly m = f.monic();
  std::vector<std::string> labels{"1"};
  if (d > 1) labels.push_back(var);
  for (std::size_t k = 2; k < d; ++k) labels.push_back(var + "^" + std::to_string(k));
  auto product = [&](std::size_t i, std::size_t j) {
    const Poly r = Poly::monomial(fld, i + j, Scalar::one(fld)) % m;
    Vec v = zero_vec(fld, d);
    for (std::size_t k = 0; k < r.coeffs().size(); ++k) v[k] = r.coeffs()[k];
    return v;
  };
  return FiniteAlgebra::from_products(fld, std::move(labels), product, unit_vec(fld, d, 0));
}

FiniteAlgebra split_algebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  auto product = [&](std::size_t i, std::size_t j) { return i == j ? unit_vec(f, n, i) : zero_vec(f, n); };
  Vec unit(n, Scalar::one(f));
  return FiniteAlgebra::from_products(f, std::move(labels), product, unit);
}

std::vector<Vec> charpoly_over(const FiniteAlgebra& r, const RingMatrix<Vec>& m) {
  if (!r.is_commutative()) throw Error("characteristic polynomial over a non-commutative ring");
  return charpoly_divfree(AlgebraRing{&r}, m);
}

Poly charpoly(const Mat& m) {
  RingMatrix<Scalar> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return Poly(m.field(), charpoly_divfree(ScalarRing{m.field()}, rows));
}

AlgebraReport validate_algebra(const FiniteAlgebra& a, bool require_commutative) {
  AlgebraReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = a.basis(i);
    if (a.mul(a.unit(), e) != e) rep.fail("left unit law fails at i=" + std::to_string(i));
    if (a.mul(e, a.unit()) != e) rep.fail("right unit law fails at i=" + std::to_string(i));
  }
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.mul(a.basis(i), a.basis(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.mul(prod[i * n + j], a.basis(k)) != a.mul(a.basis(i), prod[j * n + k]))
          rep.fail("associativity fails at (i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
  if (require_commutative)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (prod[i * n + j] != prod[j * n + i])
          rep.fail("not commutative at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return rep;
}

Subspace ideal_generated(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  Subspace s(a.field(), a.dim());
  std::vector<Vec> queue;
  for (const auto& g : gens)
    if (s.add(g)) queue.push_back(g);
  while (!queue.empty()) {
    const Vec v = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (const Vec& w : {a.mul(a.basis(i), v), a.mul(v, a.basis(i))})
        if (s.add(w)) queue.push_back(w);
    }
  }
  return s;
}

bool is_ideal(const FiniteAlgebra& a, const Subspace& s) {
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis(i), v)) || !s.contains(a.mul(v, a.basis(i)))) return false;
  return true;
}

Quotient quotient_algebra(const FiniteAlgebra& a, const Subspace& ideal) {
  if (ideal.is_whole()) throw Error("quotient by the whole algebra");
  const auto comp = ideal.complement_indices();
  const std::size_t q = comp.size();
  Mat proj(a.field(), q, a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const Vec r = ideal.reduce(a.basis(c));
    for (std::size_t k = 0; k < q; ++k) proj(k, c) = r[comp[k]];
  }
  Mat sec(a.field(), a.dim(), q);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < q; ++k) {
    sec(comp[k], k) = Scalar::one(a.field());
    labels.push_back(a.labels()[comp[k]]);
  }
  auto product = [&](std::size_t i, std::size_t j) { return proj.apply(a.mul(a.basis(comp[i]), a.basis(comp[j]))); };
  FiniteAlgebra alg = FiniteAlgebra::from_products(a.field(), std::move(labels), product, proj.apply(a.unit()));
  return {std::move(alg), std::move(proj), std::move(sec)};
}

Vec tensor_vec(const Vec& x, const Vec& y) {
  Vec out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return out;
}

Vec tensor_mul(const FiniteAlgebra& a, const FiniteAlgebra& b, const Vec& x, const Vec& y) {
  const std::size_t na = a.dim(), nb = b.dim();
  Vec out = zero_vec(a.field(), na * nb);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (y[q].is_zero()) continue;
      const Scalar c = x[p] * y[q];
      for (const auto& s : a.product(p / nb, q / nb))
        for (const auto& t : b.product(p % nb, q % nb)) out[s.index * nb + t.index] += c * s.coeff * t.coeff;
    }
  }
  return out;
}

Vec tensor_apply(const Mat& f, const Mat& g, const Vec& v) {
  const std::size_t n2 = g.cols(), m2 = g.rows();
  if (v.size() != f.cols() * n2) throw std::logic_error("tensor_apply: length mismatch");
  Vec out = zero_vec(f.field(), f.rows() * m2);
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    const std::size_t i = p / n2, j = p % n2;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (f(r, i).is_zero()) continue;
      const Scalar c = v[p] * f(r, i);
      for (std::size_t s = 0; s < m2; ++s)
        if (!g(s, j).is_zero()) out[r * m2 + s] += c * g(s, j);
    }
  }
  return out;
}

Mat kron(const Mat& f, const Mat& g) {
  Mat out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t a = 0; a < f.rows(); ++a)
    for (std::size_t b = 0; b < f.cols(); ++b) {
      if (f(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < g.rows(); ++c)
        for (std::size_t d = 0; d < g.cols(); ++d) out(a * g.rows() + c, b * g.cols() + d) = f(a, b) * g(c, d);
    }
  return out;
}

FiniteAlgebra tensor_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.field() != b.field()) throw Error("tensor product over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto& cell = table[(i1 * nb + j1) * n + (i2 * nb + j2)];
          for (const auto& s : a.product(i1, i2))
            for (const auto& t : b.product(j1, j2)) cell.push_back({s.index * nb + t.index, s.coeff * t.coeff});
        }
  return FiniteAlgebra(a.field(), std::move(labels), std::move(table), tensor_vec(a.unit(), b.unit()));
}

Subalgebra subalgebra(const FiniteAlgebra& a, const Subspace& s, const std::vector<std::string>& labels) {
  return subalgebra(a, s, a.unit(), labels);
}

Subalgebra subalgebra(const FiniteAlgebra& a, const Subspace& s, const Vec& unit,
                      const std::vector<std::string>& labels) {
  const auto& basis = s.basis();
  const std::size_t d = basis.size();
  auto unit_coords = s.coordinates(unit);
  if (!unit_coords) throw Error("subspace does not contain the unit");
  std::vector<std::string> names = labels;
  if (names.empty())
    for (const auto& b : basis) names.push_back(a.format(b));
  if (names.size() != d) throw std::logic_error("subalgebra label count mismatch");
  auto product = [&](std::size_t i, std::size_t j) {
    auto c = s.coordinates(a.mul(basis[i], basis[j]));
    if (!c) throw Error("subspace is not closed under multiplication");
    return *c;
  };
  FiniteAlgebra alg = FiniteAlgebra::from_products(a.field(), std::move(names), product, *unit_coords);
  return {std::move(alg), s, s.basis_matrix()};
}

bool is_subalgebra(const FiniteAlgebra& a, const Subspace& s) {
  if (!s.contains(a.unit())) return false;
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!s.contains(a.mul(x, y))) return false;
  return true;
}

namespace {

/// Incremental elimination that remembers how each reduced row was formed
/// from the inserted vectors, so the first dependency can be read off.
class RelationFinder {
 public:
  explicit RelationFinder(Field f) : f_(f) {}

  /// Inserts v (the k-th vector). Returns the relation coefficients
  /// (length k+1, last entry 1) if v depends on the earlier ones.
  std::optional<Vec> insert(Vec v) {
    const std::size_t k = count_++;
    for (auto& c : combos_) c.push_back(Scalar::zero(f_));
    Vec comb = unit_vec(f_, k + 1, k);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      axpy(v, -c, rows_[r]);
      axpy(comb, -c, combos_[r]);
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv].is_zero()) ++piv;
    if (piv == v.size()) return comb;
    const Scalar inv = v[piv].inverse();
    rows_.push_back(inv * v);
    combos_.push_back(inv * comb);
    pivots_.push_back(piv);
    return std::nullopt;
  }

 private:
  Field f_;
  std::size_t count_ = 0;
  std::vector<Vec> rows_, combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Poly min_poly(const FiniteAlgebra& a, const Vec& v) { return min_poly(a, v, a.unit()); }

Poly min_poly(const FiniteAlgebra& a, const Vec& v, const Vec& unit) {
  RelationFinder finder(a.field());
  Vec power = unit;
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    if (auto rel = finder.insert(power)) return Poly(a.field(), *rel);
    power = a.mul(power, v);
  }
  throw std::logic_error("min_poly: no relation found");
}

Vec evaluate(const FiniteAlgebra& a, const Poly& f, const Vec& v) { return evaluate(a, f, v, a.unit()); }

Vec evaluate(const FiniteAlgebra& a, const Poly& f, const Vec& v, const Vec& unit) {
  Vec acc = a.zero();
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = a.mul(acc, v);
    axpy(acc, c[k], unit);
  }
  return acc;
}

std::optional<Vec> inverse(const FiniteAlgebra& a, const Vec& v) { return solve(a.left_mult(v), a.unit()); }

namespace {

/// Nilradical of a commutative algebra: kernel of a high Frobenius power in
/// characteristic p, kernel of the trace form in characteristic 0.
Subspace commutative_radical(const FiniteAlgebra& b) {
  const std::size_t n = b.dim();
  const Field f = b.field();
  if (n == 0) return Subspace(f, 0);
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t q = p;
    while (q < n) q *= p;
    Mat frob(f, n, n);
    for (std::size_t i = 0; i < n; ++i) frob.set_column(i, b.pow(b.basis(i), q));
    return kernel(frob);
  }
  Vec tr = zero_vec(f, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : b.product(k, i))
        if (t.index == i) tr[k] += t.coeff;
  Mat form(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(f);
      for (const auto& t : b.product(i, j)) s += t.coeff * tr[t.index];
      form(j, i) = s;
    }
  return kernel(form);
}

struct Probe {
  bool field;
  Vec element;
  Poly minpoly;
};

Vec random_element(const FiniteAlgebra& q, std::mt19937_64& rng) {
  const Field f = q.field();
  Vec v = q.zero();
  for (auto& x : v) {
    if (f.is_rational())
      x = Scalar::from_int(f, static_cast<long long>(rng() % 7) - 3);
    else
      x = Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic()));
  }
  return v;
}

/// For a reduced commutative algebra: either certifies that it is a field
/// (with a primitive element) or returns an element whose minimal polynomial
/// has at least two distinct irreducible factors.
Probe probe(const FiniteAlgebra& q) {
  const Field f = q.field();
  const std::size_t d = q.dim();
  if (d == 1) return {true, q.unit(), Poly(f, {-Scalar::one(f), Scalar::one(f)})};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  if (!f.is_rational()) {
    // Berlekamp subalgebra {x : x^p = x} is F_p^r, r = number of factors
    Mat m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) m.set_column(i, q.pow(q.basis(i), f.characteristic()) - q.basis(i));
    const auto ker = kernel_basis(m);
    if (ker.size() > 1) {
      const Subspace ones = Subspace::span(f, d, {q.unit()});
      for (const auto& v : ker)
        if (!ones.contains(v)) return {false, v, min_poly(q, v)};
    }
    for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
      const Vec v = attempt < d ? q.basis(attempt) : random_element(q, rng);
      Poly mp = min_poly(q, v);
      if (static_cast<std::size_t>(mp.degree()) == d) return {true, v, mp};
    }
    throw std::logic_error("no primitive element found in a finite field");
  }
  for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
    const Vec v = attempt < d ? q.basis(attempt) : random_element(q, rng);
    Poly mp = min_poly(q, v);
    const Factorization fac = factor(mp);
    if (fac.factors.size() > 1) return {false, v, mp};
    if (static_cast<std::size_t>(mp.degree()) == d) return {true, v, mp};
  }
  throw std::logic_error("splitting search exhausted");
}

std::vector<std::string> power_labels(std::size_t d) {
  std::vector<std::string> out{"1"};
  if (d > 1) out.push_back("w");
  for (std::size_t k = 2; k < d; ++k) out.push_back("w^" + std::to_string(k));
  return out;
}

}  // namespace

std::vector<PointData> maximal_ideals(const FiniteAlgebra& a) {
  if (!a.is_commutative()) throw Error("maximal ideals require a commutative algebra");
  const Field f = a.field();
  std::vector<PointData> points;
  if (a.dim() == 0) return points;
  std::vector<Vec> stack{a.unit()};
  while (!stack.empty()) {
    const Vec e = stack.back();
    stack.pop_back();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(e, a.basis(i)));
    const Subspace space = Subspace::span(f, a.dim(), gens);
    const Subalgebra corner = subalgebra(a, space, e, std::vector<std::string>(space.dim(), "b"));
    const FiniteAlgebra& b = corner.algebra;
    const Quotient q = quotient_algebra(b, commutative_radical(b));
    const Probe pr = probe(q.algebra);
    if (!pr.field) {
      const Vec w = corner.inclusion.apply(q.section.apply(pr.element));
      const Poly mp = min_poly(a, w, e);
      const Factorization fac = factor(mp);
      const Poly g = pow(fac.factors[0].poly, static_cast<std::uint64_t>(fac.factors[0].multiplicity));
      const Poly h = mp / g;
      const ExtendedGcd eg = xgcd(g, h);
      const Vec e1 = evaluate(a, eg.t * h, w, e);
      stack.push_back(e1);
      stack.push_back(e - e1);
      continue;
    }
    const std::size_t d = q.algebra.dim();
    Mat powers(f, d, d);
    Vec pw = q.algebra.unit();
    for (std::size_t k = 0; k < d; ++k) {
      powers.set_column(k, pw);
      pw = q.algebra.mul(pw, pr.element);
    }
    const Mat to_power = *inverse(powers);
    auto product = [&](std::size_t i, std::size_t j) {
      return to_power.apply(q.algebra.pow(pr.element, static_cast<std::uint64_t>(i + j)));
    };
    PointData pt;
    pt.residue = FiniteAlgebra::from_products(f, power_labels(d), product, unit_vec(f, d, 0));
    pt.modulus = pr.minpoly;
    pt.alpha = Mat(f, d, a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec in_b = *corner.space.coordinates(a.mul(e, a.basis(k)));
      pt.alpha.set_column(k, to_power.apply(q.projection.apply(in_b)));
    }
    pt.ideal = kernel(pt.alpha);
    pt.idempotent = e;
    points.push_back(std::move(pt));
  }
  std::sort(points.begin(), points.end(),
            [](const PointData& x, const PointData& y) { return subspace_less(x.ideal, y.ideal); });
  return points;
}

std::vector<Vec> primitive_idempotents(const FiniteAlgebra& a) {
  std::vector<Vec> out;
  for (const auto& p : maximal_ideals(a)) out.push_back(p.idempotent);
  return out;
}

Subspace nilradical(const FiniteAlgebra& a) {
  Subspace acc = Subspace::whole(a.field(), a.dim());
  for (const auto& p : maximal_ideals(a)) acc = acc.intersect(p.ideal);
  return acc;
}

bool is_field(const FiniteAlgebra& a) {
  if (a.dim() == 0 || !a.is_commutative()) return false;
  const auto pts = maximal_ideals(a);
  return pts.size() == 1 && pts[0].ideal.is_zero();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using IntMat = std::vector<std::vector<u64>>;

IntMat int_mul(const IntMat& x, const IntMat& y, u64 mod) {
  const std::size_t n = x.size();
  IntMat z(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        z[i][j] = static_cast<u64>((z[i][j] + static_cast<u128>(x[i][k]) * y[k][j]) % mod);
    }
  return z;
}

IntMat int_pow(IntMat x, u64 e, u64 mod) {
  const std::size_t n = x.size();
  IntMat acc(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1 % mod;
  while (e > 0) {
    if (e & 1) acc = int_mul(acc, x, mod);
    e >>= 1;
    if (e > 0) x = int_mul(x, x, mod);
  }
  return acc;
}

/// g_i(z) = (Tr(L~_z^{p^i}) mod p^{i+1}) / p^i with L~ the integer lift.
Scalar ptrace(const FiniteAlgebra& a, const Vec& z, unsigned i) {
  const Field f = a.field();
  const u64 p = f.characteristic();
  u64 pi = 1;
  for (unsigned k = 0; k < i; ++k) pi *= p;
  const u64 mod = pi * p;
  const Mat l = a.left_mult(z);
  const std::size_t n = a.dim();
  IntMat m(n, std::vector<u64>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = l(r, c).residue() % mod;
  const IntMat pw = int_pow(m, pi, mod);
  u64 tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + pw[r][r]) % mod;
  if (tr % pi != 0) throw std::logic_error("p-power trace not divisible");
  return Scalar::from_int(f, static_cast<long long>(tr / pi));
}

}  // namespace

RadicalResult radical_and_semisimplicity(const FiniteAlgebra& a) {
  const Field f = a.field();
  const std::size_t n = a.dim();
  if (f.is_rational()) {
    Mat form(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Mat l = a.left_mult(a.mul(a.basis(i), a.basis(j)));
        Scalar tr = Scalar::zero(f);
        for (std::size_t k = 0; k < n; ++k) tr += l(k, k);
        form(j, i) = tr;
      }
    Subspace r = kernel(form);
    const bool ss = r.is_zero();
    return {std::move(r), ss};
  }
  const u64 p = f.characteristic();
  unsigned levels = 0;
  for (u64 q = p; q <= n; q *= p) ++levels;
  std::vector<Vec> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(a.basis(i));
  for (unsigned i = 0; i <= levels && !current.empty(); ++i) {
    Mat g(f, n, current.size());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < current.size(); ++k) g(j, k) = ptrace(a, a.mul(current[k], a.basis(j)), i);
    std::vector<Vec> next;
    for (const auto& c : kernel_basis(g)) {
      Vec v = a.zero();
      for (std::size_t k = 0; k < current.size(); ++k) axpy(v, c[k], current[k]);
      next.push_back(std::move(v));
    }
    current = Subspace::span(f, n, next).basis();
  }
  Subspace r = Subspace::span(f, n, current);
  const bool ss = r.is_zero();
  return {std::move(r), ss};
}

}  // namespace hopfinv
