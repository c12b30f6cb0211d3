#include "hopfinv/matrix.hpp"

#include <stdexcept>

namespace hopfinv {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& v, const Scalar& c, const Vec& w) {
  if (v.size() != w.size()) throw std::logic_error("vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::logic_error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Mat::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::logic_error("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::logic_error("matrix-vector size mismatch");
  Vec out = zero_vec(f_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& x = (*this)(r, c);
      if (!x.is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::logic_error("matrix product size mismatch");
  Mat m(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("matrix sum size mismatch");
  Mat m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Mat operator*(const Scalar& c, const Mat& m) {
  Mat out = m;
  for (auto& x : out.data_) x *= c;
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("matrix difference size mismatch");
  Mat m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::logic_error("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks[0].cols()) throw std::logic_error("vstack column mismatch");
    rows += b.rows();
  }
  Mat m(blocks[0].field(), rows, blocks[0].cols());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return m;
}

Echelon row_echelon(Mat m) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t piv = lead_row;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead_row, j));
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead_row, j).is_zero()) m(r, j) -= factor * m(lead_row, j);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Mat& m) { return row_echelon(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::logic_error("solve: right-hand side length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  const Echelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

Scalar determinant(Mat m) {
  if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace hopfinv
