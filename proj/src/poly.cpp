#include "hopfinv/poly.hpp"

#include <stdexcept>

namespace hopfinv {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != f_) throw std::logic_error("polynomial coefficient field mismatch");
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(Field f, std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(f));
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::t(Field f) { return monomial(f, 1, Scalar::one(f)); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(f_); }

Scalar Poly::lead() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return lead().inverse() * *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(Scalar::from_int(f_, static_cast<long long>(i)) * c_[i]);
  return Poly(f_, std::move(d));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(f_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(f_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.f_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.f_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.f_, std::move(r));
}

Poly operator*(const Scalar& c, const Poly& p) {
  std::vector<Scalar> r = p.c_;
  for (auto& x : r) x *= c;
  return Poly(p.f_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly(f_), rem};
  std::vector<Scalar> q(static_cast<std::size_t>(rem.degree() - d.degree() + 1), Scalar::zero(f_));
  const Scalar inv = d.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const Scalar c = rem.lead() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= c * d.c_[i];
    rem.trim();
  }
  return {Poly(f_, std::move(q)), rem};
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  const Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar::one(f)), s1(f);
  Poly t0(f), t1 = Poly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.lead().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

Poly pow(const Poly& base, std::uint64_t e) {
  Poly acc = Poly::constant(Scalar::one(base.field()));
  Poly b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus) {
  Poly acc = Poly::constant(Scalar::one(base.field())) % modulus;
  Poly b = base % modulus;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % modulus;
  }
  return acc;
}

Poly Factorization::expand() const {
  Poly out = Poly::constant(unit);
  for (const auto& f : factors) out = out * pow(f.poly, static_cast<std::uint64_t>(f.multiplicity));
  return out;
}

}  // namespace hopfinv
