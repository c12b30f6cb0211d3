#include "hopfinv/scalar.hpp"

#include <cctype>

namespace hopfinv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 32)) throw Error(std::to_string(p) + " exceeds the supported prime range");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "F_") {
    std::uint64_t p = 0;
    for (char c : text.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed field '" + std::string(text) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ULL << 40)) throw Error("field characteristic too large");
    }
    return prime(p);
  }
  throw Error("malformed field '" + std::string(text) + "' (expected Q or F_<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long n) {
  Scalar s;
  if (f.is_rational()) {
    s.v_ = mpq_class(static_cast<long>(n));
  } else {
    const auto p = static_cast<long long>(f.characteristic());
    long long r = n % p;
    if (r < 0) r += p;
    s.v_ = Residue{static_cast<std::uint64_t>(r), f.characteristic()};
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) {
    Scalar s;
    s.v_ = q;
    return s;
  }
  const auto p = f.characteristic();
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
  if (den == 0) throw Error("denominator vanishes modulo " + std::to_string(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  return from_int(f, num.get_si()) / from_int(f, den.get_si());
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(Field f, std::string_view text) {
  const std::string original(text);
  if (f.is_rational()) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
      neg = body[0] == '-';
      body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
      throw Error("malformed scalar '" + original + "'");
    mpq_class q;
    q.get_num() = mpz_class(std::string(num));
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
    if (q.get_den() == 0) throw Error("malformed scalar '" + original + "': zero denominator");
    if (slash != std::string_view::npos) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
      if (g != 1 && q.get_num() != 0) throw Error("malformed scalar '" + original + "': not in lowest terms");
    }
    q.canonicalize();
    if (neg) q = -q;
    Scalar s;
    s.v_ = q;
    return s;
  }
  if (!all_digits(text)) throw Error("malformed scalar '" + original + "' for " + f.name());
  if (text.size() > 12) throw Error("scalar '" + original + "' out of range for " + f.name());
  const auto v = std::stoull(std::string(text));
  if (v >= f.characteristic()) throw Error("scalar '" + original + "' out of range [0," + std::to_string(f.characteristic()) + ")");
  return from_int(f, static_cast<long long>(v));
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
  return Field(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q;
  throw Error("rational() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value;
  throw Error("residue() on a rational scalar");
}

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (v_.index() == 1 && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p))
    throw std::logic_error("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto q = std::get_if<mpq_class>(&s.v_)) {
    *q = -*q;
  } else {
    auto& r = std::get<Residue>(s.v_);
    r.value = r.value == 0 ? 0 : r.p - r.value;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = (r.value + std::get<Residue>(o.v_).value) % r.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = (r.value * std::get<Residue>(o.v_).value) % r.p;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto q = std::get_if<mpq_class>(&v_)) {
    Scalar s;
    s.v_ = mpq_class(1) / *q;
    return s;
  }
  const auto& r = std::get<Residue>(v_);
  return pow(r.p - 2);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this;
  Scalar acc = one(field());
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  const auto& ra = std::get<Scalar::Residue>(a.v_);
  const auto& rb = std::get<Scalar::Residue>(b.v_);
  return ra.p == rb.p && ra.value == rb.value;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (auto q = std::get_if<mpq_class>(&a.v_)) return *q < std::get<mpq_class>(b.v_);
  return std::get<Scalar::Residue>(a.v_).value < std::get<Scalar::Residue>(b.v_).value;
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

}  // namespace hopfinv
