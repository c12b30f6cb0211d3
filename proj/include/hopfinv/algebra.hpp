#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfinv/berkowitz.hpp"
#include "hopfinv/poly.hpp"
#include "hopfinv/subspace.hpp"

namespace hopfinv {

struct Term {
  std::size_t index;
  Scalar coeff;
};

/// Finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// table[i * dim + j] lists the nonzero terms of e_i e_j.
  FiniteAlgebra(Field f, std::vector<std::string> labels, std::vector<std::vector<Term>> table, Vec unit);
  /// Builds the sparse table from a dense product rule on basis indices.
  static FiniteAlgebra from_products(Field f, std::vector<std::string> labels,
                                     const std::function<Vec(std::size_t, std::size_t)>& product, Vec unit);
  /// The one-dimensional algebra K.
  static FiniteAlgebra base(Field f);

  Field field() const { return f_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec zero() const { return zero_vec(f_, dim()); }
  Vec basis(std::size_t i) const { return unit_vec(f_, dim(), i); }
  Vec scalar(const Scalar& c) const { return c * unit_; }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, std::uint64_t e) const;
  /// Matrix of x -> a x.
  Mat left_mult(const Vec& a) const;
  /// Matrix of x -> x a.
  Mat right_mult(const Vec& a) const;
  bool is_commutative() const;

  std::string format(const Vec& v) const;
  /// Parses a linear combination of basis labels such as "2*x - 1/3*g + 1".
  Vec parse(const std::string& text) const;

 private:
  Field f_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;
  Vec unit_;
};

/// K[t]/(f) in the basis 1, t, ..., t^{d-1} with labels var^k.
FiniteAlgebra monogenic_algebra(const Poly& f, const std::string& var = "x");
/// Product algebra K^n with orthogonal idempotent basis e1..en.
FiniteAlgebra split_algebra(Field f, std::size_t n);

/// A commutative FiniteAlgebra viewed as a coefficient ring.
struct AlgebraRing {
  using Element = Vec;
  const FiniteAlgebra* alg;

  Vec zero() const { return alg->zero(); }
  Vec one() const { return alg->unit(); }
  Vec add(const Vec& a, const Vec& b) const { return a + b; }
  Vec sub(const Vec& a, const Vec& b) const { return a - b; }
  Vec mul(const Vec& a, const Vec& b) const { return alg->mul(a, b); }
  Vec neg(const Vec& a) const { return -a; }
};

/// Characteristic polynomial det(t I - m) over a commutative algebra;
/// rejects non-commutative coefficient rings.
std::vector<Vec> charpoly_over(const FiniteAlgebra& r, const RingMatrix<Vec>& m);
Poly charpoly(const Mat& m);

struct AlgebraReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// Associativity, two-sided unit and (optionally) commutativity on all
/// basis triples.
AlgebraReport validate_algebra(const FiniteAlgebra& a, bool require_commutative);

/// Smallest two-sided ideal containing gens.
Subspace ideal_generated(const FiniteAlgebra& a, const std::vector<Vec>& gens);
bool is_ideal(const FiniteAlgebra& a, const Subspace& s);

struct Quotient {
  FiniteAlgebra algebra;
  Mat projection;  // dim(A/I) x dim(A)
  Mat section;     // dim(A) x dim(A/I), picks the complement basis
};
Quotient quotient_algebra(const FiniteAlgebra& a, const Subspace& ideal);

FiniteAlgebra tensor_product(const FiniteAlgebra& a, const FiniteAlgebra& b);
/// Index of e_i (x) f_j in a tensor product with right factor of dimension db.
inline std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t db) { return i * db + j; }
Vec tensor_vec(const Vec& x, const Vec& y);
/// Product in a (x) b of two tensors, without materializing the tensor algebra.
Vec tensor_mul(const FiniteAlgebra& a, const FiniteAlgebra& b, const Vec& x, const Vec& y);
/// (f (x) g)(v) for v in K^{n1} (x) K^{n2}, f: m1 x n1, g: m2 x n2.
Vec tensor_apply(const Mat& f, const Mat& g, const Vec& v);
/// Kronecker product f (x) g as a matrix.
Mat kron(const Mat& f, const Mat& g);

struct Subalgebra {
  FiniteAlgebra algebra;
  Subspace space;
  Mat inclusion;  // dim(A) x dim(B)
};
/// The subspace as an algebra in its echelon basis; `unit` defaults to the
/// unit of a and may be an idempotent (for corner algebras eA).
Subalgebra subalgebra(const FiniteAlgebra& a, const Subspace& s, const std::vector<std::string>& labels = {});
Subalgebra subalgebra(const FiniteAlgebra& a, const Subspace& s, const Vec& unit,
                      const std::vector<std::string>& labels = {});
bool is_subalgebra(const FiniteAlgebra& a, const Subspace& s);

/// Monic minimal polynomial of v; powers start from `unit` (default 1).
Poly min_poly(const FiniteAlgebra& a, const Vec& v);
Poly min_poly(const FiniteAlgebra& a, const Vec& v, const Vec& unit);
Vec evaluate(const FiniteAlgebra& a, const Poly& f, const Vec& v);
Vec evaluate(const FiniteAlgebra& a, const Poly& f, const Vec& v, const Vec& unit);
std::optional<Vec> inverse(const FiniteAlgebra& a, const Vec& v);

/// A maximal ideal of a commutative algebra with its residue field.
struct PointData {
  Subspace ideal;
  /// k(p) in a power basis 1, w, ..., w^{d-1} of a primitive element.
  FiniteAlgebra residue;
  /// Minimal polynomial of the primitive element (irreducible, degree d).
  Poly modulus{Field()};
  /// alpha_p : A -> k(p), a d x dim(A) matrix.
  Mat alpha;
  /// Primitive idempotent of A whose corner eA is the local factor at p.
  Vec idempotent;
  std::size_t degree() const { return residue.dim(); }
};

/// All maximal ideals of a commutative algebra, deterministically ordered.
std::vector<PointData> maximal_ideals(const FiniteAlgebra& a);
/// Primitive idempotents of a commutative algebra, one per maximal ideal.
std::vector<Vec> primitive_idempotents(const FiniteAlgebra& a);
/// Nilradical of a commutative algebra.
Subspace nilradical(const FiniteAlgebra& a);

struct RadicalResult {
  Subspace radical;
  bool semisimple;
};
/// Jacobson radical: trace-form kernel in characteristic 0, the p-power trace
/// refinement in characteristic p.
RadicalResult radical_and_semisimplicity(const FiniteAlgebra& a);

/// Whether the commutative algebra a is a field (zero ideal maximal).
bool is_field(const FiniteAlgebra& a);

}  // namespace hopfinv
