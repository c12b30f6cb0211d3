#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& c, const Vec& v);
/// v += c * w
void axpy(Vec& v, const Scalar& c, const Vec& w);
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major matrix over a field.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& m);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Stacks matrices with equal column count vertically.
Mat vstack(const std::vector<Mat>& blocks);

struct Echelon {
  Mat rref;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form, leftmost pivots normalized to 1.
Echelon row_echelon(Mat m);
std::size_t rank(const Mat& m);

/// Basis of the right null space {v : m v = 0}.
std::vector<Vec> kernel_basis(const Mat& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);
Scalar determinant(Mat m);

}  // namespace hopfinv
