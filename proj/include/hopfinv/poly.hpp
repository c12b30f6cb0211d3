#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

/// Univariate polynomial over a field; coefficients stored low to high with
/// the leading coefficient nonzero (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(Field f, std::size_t degree, const Scalar& c);
  /// The indeterminate t.
  static Poly t(Field f);

  Field field() const { return f_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar lead() const;

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field f_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd xgcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, std::uint64_t e);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

struct Factorization {
  Scalar unit;
  std::vector<Factor> factors;  // sorted by degree, then coefficients

  /// unit * prod(poly^multiplicity)
  Poly expand() const;
};

/// Largest squarefree degree accepted by factorization over Q.
inline constexpr int kRationalFactorDegreeLimit = 16;

/// Complete factorization into monic irreducibles. Throws on the zero
/// polynomial. Over F_p: squarefree decomposition, distinct-degree and
/// equal-degree splitting. Over Q: modular factorization, Hensel lifting
/// and subset recombination.
Factorization factor(const Poly& f);

}  // namespace hopfinv
