#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "hopfinv/poly.hpp"

namespace hopfinv {

namespace {

using Parts = std::vector<std::pair<Poly, int>>;

// ---------------------------------------------------------------- F_p

Poly pth_root(const Poly& f) {
  const auto p = f.field().characteristic();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(c));
}

void squarefree_fp(const Poly& f, int mult, Parts& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.field().characteristic());
  const Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_fp(pth_root(f), mult * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.emplace_back(z.monic(), mult * i);
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one() && c.degree() > 0) squarefree_fp(pth_root(c.monic()), mult * p, out);
}

void roots_split(const Poly& f, std::vector<Poly>& out) {
  const Field fld = f.field();
  Poly rest = f;
  const auto p = fld.characteristic();
  for (std::uint64_t r = 0; r < p && rest.degree() > 1; ++r) {
    const Scalar x = Scalar::from_int(fld, static_cast<long long>(r));
    if (rest.eval(x).is_zero()) {
      Poly lin(fld, {-x, Scalar::one(fld)});
      out.push_back(lin);
      rest = rest / lin;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
}

Poly random_poly(Field f, int below_degree, std::mt19937_64& rng) {
  const auto p = f.characteristic();
  std::vector<Scalar> c;
  for (int i = 0; i < below_degree; ++i)
    c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % p)));
  return Poly(f, std::move(c));
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field f = g.field();
  const auto p = f.characteristic();
  mpz_class half = 0;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, static_cast<unsigned long>(d));
    half = (half - 1) / 2;
  }
  for (;;) {
    Poly a = random_poly(f, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(f);
    if (p == 2) {
      Poly term = a % g;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b += term;
      }
    } else {
      b = powmod(a, half, g) - Poly::constant(Scalar::one(f));
    }
    Poly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_fp(const Poly& f) {
  std::vector<Poly> out;
  const Field fld = f.field();
  const auto p = fld.characteristic();
  if (f.degree() <= 1) {
    out.push_back(f.monic());
    return out;
  }
  if (f.degree() <= 3 && p <= 1024) {
    roots_split(f, out);
    return out;
  }
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(f.degree()));
  Poly rest = f.monic();
  const Poly x = Poly::t(fld);
  Poly h = x % rest;
  const mpz_class pz(static_cast<unsigned long>(p));
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, pz, rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      equal_degree(g, d, rng, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  return out;
}

// ---------------------------------------------------------------- Q

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  ztrim(a);
  return a;
}

Poly to_fp(const ZPoly& a, Field f) {
  const mpz_class p(static_cast<unsigned long>(f.characteristic()));
  std::vector<Scalar> c;
  for (const auto& x : a) {
    mpz_class r = x % p;
    if (r < 0) r += p;
    c.push_back(Scalar::from_int(f, r.get_si()));
  }
  return Poly(f, std::move(c));
}

ZPoly from_fp(const Poly& a) {
  ZPoly r;
  for (const auto& c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  return r;
}

Poly to_rational(const ZPoly& a) {
  std::vector<Scalar> c;
  for (const auto& x : a) c.push_back(Scalar::from_rational(Field::rationals(), mpq_class(x)));
  return Poly(Field::rationals(), std::move(c));
}

ZPoly primitive_part(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  mpz_class g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : a) x /= g;
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

ZPoly primitive_integer(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly a;
  for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.rational() * l));
  return primitive_part(std::move(a));
}

std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const Poly& g, const Poly& h, const mpz_class& modulus) {
  const Field fp = g.field();
  const mpz_class p(static_cast<unsigned long>(fp.characteristic()));
  const ExtendedGcd eg = xgcd(g, h);
  if (!eg.g.is_one()) throw std::logic_error("hensel_lift: factors not coprime");
  ZPoly big_g = from_fp(g), big_h = from_fp(h);
  mpz_class pk = p;
  while (pk < modulus) {
    ZPoly prod = zmul(big_g, big_h);
    ZPoly e = f;
    e.resize(std::max(e.size(), prod.size()), mpz_class(0));
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    e = zmod(std::move(e), modulus);
    for (auto& x : e) {
      if (x % pk != 0) throw std::logic_error("hensel_lift: lost congruence");
      x /= pk;
    }
    const Poly ebar = to_fp(e, fp);
    const Poly sigma = (eg.t * ebar) % g;
    const Poly tau = (ebar - sigma * h) / g;
    ZPoly ds = from_fp(sigma), dt = from_fp(tau);
    big_g.resize(std::max(big_g.size(), ds.size()), mpz_class(0));
    big_h.resize(std::max(big_h.size(), dt.size()), mpz_class(0));
    for (std::size_t i = 0; i < ds.size(); ++i) big_g[i] += pk * ds[i];
    for (std::size_t i = 0; i < dt.size(); ++i) big_h[i] += pk * dt[i];
    pk *= p;
    big_g = zmod(std::move(big_g), modulus);
    big_h = zmod(std::move(big_h), modulus);
  }
  return {big_g, big_h};
}

bool divides_exactly(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = to_rational(f).divmod(to_rational(g));
  if (!r.is_zero()) return false;
  quotient.clear();
  for (const auto& c : q.coeffs()) {
    if (c.rational().get_den() != 1) return false;
    quotient.push_back(c.rational().get_num());
  }
  return true;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  if (n > kRationalFactorDegreeLimit)
    throw Error("factorization over Q is limited to squarefree degree <= " + std::to_string(kRationalFactorDegreeLimit));

  // a prime keeping the degree and squarefreeness
  std::uint64_t p = 3;
  Poly fbar(Field::prime(3));
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    const Field fp = Field::prime(p);
    fbar = to_fp(f, fp);
    if (fbar.degree() != n) continue;
    if (gcd(fbar, fbar.derivative()).is_one()) break;
  }
  std::vector<Poly> modp = factor_squarefree_fp(fbar.monic());
  if (modp.size() == 1) return {f};

  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class root = 0;
  mpz_sqrt(root.get_mpz_t(), mpz_class(n + 1).get_mpz_t());
  mpz_class bound = abs(f.back()) * maxc * (root + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class modulus = pz;
  while (modulus <= 2 * bound) modulus *= pz;

  // multifactor lift: f = lc * g_1 * ... * g_r  (mod modulus)
  const Field fp = fbar.field();
  const Scalar lc_bar = fbar.lead();
  std::vector<ZPoly> lifted;
  ZPoly rest = zmod(f, modulus);
  for (std::size_t i = 0; i + 1 < modp.size(); ++i) {
    Poly h = Poly::constant(lc_bar);
    for (std::size_t j = i + 1; j < modp.size(); ++j) h = h * modp[j];
    auto [g_lift, h_lift] = hensel_lift(rest, modp[i], h, modulus);
    lifted.push_back(g_lift);
    rest = h_lift;
  }
  mpz_class lc_inv;
  mpz_class lcm = f.back() % modulus;
  if (lcm < 0) lcm += modulus;
  mpz_invert(lc_inv.get_mpz_t(), lcm.get_mpz_t(), modulus.get_mpz_t());
  for (auto& x : rest) x *= lc_inv;
  lifted.push_back(zmod(std::move(rest), modulus));
  (void)fp;

  // Zassenhaus recombination
  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{mpz_class(cur.back())};
      for (auto i : idx) cand = zmod(zmul(cand, lifted[i]), modulus);
      cand = primitive_part(zsym(cand, modulus));
      ZPoly quotient;
      if (cand.size() > 1 && divides_exactly(cand, cur, quotient)) {
        result.push_back(cand);
        cur = primitive_part(quotient);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) result.push_back(cur);
  return result;
}

Parts squarefree_q(const Poly& f) {
  Parts out;
  Poly a0 = gcd(f, f.derivative());
  Poly b = f / a0;
  Poly c = f.derivative() / a0;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    if (a.coeffs()[k] == b.coeffs()[k]) continue;
    return canonical_less(a.coeffs()[k], b.coeffs()[k]);
  }
  return false;
}

}  // namespace

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  const Field fld = f.field();
  Factorization out{f.lead(), {}};
  const Poly m = f.monic();
  std::vector<std::pair<Poly, int>> irreducibles;
  if (fld.is_rational()) {
    for (const auto& [part, mult] : squarefree_q(m))
      for (const auto& z : factor_squarefree_z(primitive_integer(part)))
        irreducibles.emplace_back(to_rational(z).monic(), mult);
  } else {
    Parts parts;
    squarefree_fp(m, 1, parts);
    for (const auto& [part, mult] : parts)
      for (const auto& g : factor_squarefree_fp(part)) irreducibles.emplace_back(g, mult);
  }
  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  for (auto& [g, mult] : irreducibles) {
    if (!out.factors.empty() && out.factors.back().poly == g)
      out.factors.back().multiplicity += mult;
    else
      out.factors.push_back({g, mult});
  }
  return out;
}

}  // namespace hopfinv
