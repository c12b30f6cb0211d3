#pragma once

#include <optional>
#include <vector>

#include "hopfinv/matrix.hpp"

namespace hopfinv {

/// Subspace of K^n held as a reduced row echelon basis (leftmost pivots equal
/// to 1), so two subspaces are equal exactly when their bases are.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^n.
  Subspace(Field f, std::size_t ambient);

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(Field f, std::size_t ambient);

  Field field() const { return f_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == n_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v lies in
  /// the subspace. The result vanishes on every pivot index.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  /// Coefficients with respect to basis(), or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Adds v; returns false when v was already inside.
  bool add(const Vec& v);

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Coordinate indices that are not pivots; their unit vectors span a
  /// complement.
  std::vector<std::size_t> complement_indices() const;
  /// basis() as the columns of an n x dim matrix.
  Mat basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Image of a linear map given by its matrix.
Subspace image(const Mat& m);
/// Kernel of a linear map given by its matrix.
Subspace kernel(const Mat& m);
/// {v : m v in target}.
Subspace preimage(const Mat& m, const Subspace& target);

/// Lexicographic order on vectors by canonical_less.
bool vec_less(const Vec& a, const Vec& b);
/// Deterministic order on subspaces: dimension, then echelon basis.
bool subspace_less(const Subspace& a, const Subspace& b);

}  // namespace hopfinv
