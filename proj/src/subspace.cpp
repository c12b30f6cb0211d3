#include "hopfinv/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfinv {

Subspace::Subspace(Field f, std::size_t ambient) : f_(f), n_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  if (vectors.empty()) return s;
  const Echelon e = row_echelon(Mat::from_rows(f, ambient, vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    s.basis_.push_back(e.rref.row(r));
    s.pivots_.push_back(e.pivots[r]);
  }
  return s;
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::logic_error("subspace: vector length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return hopfinv::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::add(const Vec& v) {
  if (contains(v)) return false;
  std::vector<Vec> vs = basis_;
  vs.push_back(v);
  *this = span(f_, n_, vs);
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vec> vs = basis_;
  vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
  return span(f_, n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (basis_.empty() || o.basis_.empty()) return Subspace(f_, n_);
  // a in U, b in W with sum_i a_i u_i - sum_j b_j w_j = 0
  std::vector<Vec> cols = basis_;
  for (const auto& w : o.basis_) cols.push_back(-w);
  const auto ker = kernel_basis(Mat::from_columns(f_, n_, cols));
  std::vector<Vec> out;
  for (const auto& k : ker) {
    Vec v = zero_vec(f_, n_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, k[i], basis_[i]);
    out.push_back(std::move(v));
  }
  return span(f_, n_, out);
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> piv(n_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

Mat Subspace::basis_matrix() const { return Mat::from_columns(f_, n_, basis_); }

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

Subspace kernel(const Mat& m) { return Subspace::span(m.field(), m.cols(), kernel_basis(m)); }

Subspace preimage(const Mat& m, const Subspace& target) {
  // v with m v in target  <=>  (projection killing target)(m v) = 0
  const auto comp = target.complement_indices();
  Mat q(m.field(), comp.size(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Vec r = target.reduce(m.column(c));
    for (std::size_t k = 0; k < comp.size(); ++k) q(k, c) = r[comp[k]];
  }
  return kernel(q);
}

bool vec_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] == b[i]) continue;
    return canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a.basis()[k] == b.basis()[k]) continue;
    return vec_less(a.basis()[k], b.basis()[k]);
  }
  return false;
}

}  // namespace hopfinv
