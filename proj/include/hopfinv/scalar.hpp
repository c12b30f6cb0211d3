#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopfinv {

/// Error raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws Error("<p> is not prime") for composite or out-of-range p.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "F_<p>".
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long n);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// "n" or "n/d" over Q (d > 0, gcd 1); decimal in [0,p) over F_p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue; only valid over F_p.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical sorting (not field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value = 0;
    std::uint64_t p = 2;
  };
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

}  // namespace hopfinv
