#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hopfinv/algebra.hpp"

namespace testing {

using namespace hopfinv;

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint64_t p) { return Field::prime(p); }

inline Scalar S(Field f, int n) { return Scalar::from_int(f, n); }
inline Scalar S(Field f, long long n) { return Scalar::from_int(f, n); }
inline Scalar S(Field f, const char* text) { return Scalar::parse(f, text); }

inline Vec V(Field f, std::initializer_list<long long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

/// Polynomial from coefficients listed low to high.
inline Poly P(Field f, std::initializer_list<long long> xs) { return Poly(f, V(f, xs)); }

inline Mat M(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> rs;
  for (auto r : rows) rs.push_back(V(f, r));
  return Mat::from_rows(f, rs.empty() ? 0 : rs[0].size(), rs);
}

/// Polynomials over a coefficient algebra, low to high, used by the oracles.
using RingPoly = std::vector<Vec>;

inline RingPoly ring_poly_mul(const FiniteAlgebra& r, const RingPoly& a, const RingPoly& b) {
  RingPoly out(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + r.mul(a[i], b[j]);
  return out;
}

/// det(t I - m) by the Leibniz permutation expansion; coefficients low to high.
inline std::vector<Vec> leibniz_charpoly(const FiniteAlgebra& r, const RingMatrix<Vec>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Vec> total(n + 1, r.zero());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    RingPoly prod{r.unit()};
    for (std::size_t i = 0; i < n; ++i) {
      RingPoly entry{-m[i][perm[i]]};
      if (perm[i] == i) entry.push_back(r.unit());
      prod = ring_poly_mul(r, prod, entry);
    }
    for (std::size_t k = 0; k < prod.size(); ++k)
      total[k] = inversions % 2 ? total[k] - prod[k] : total[k] + prod[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Vec random_vec(Field f, std::size_t n, std::mt19937_64& rng, int range = 3) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_rational())
      v.push_back(Scalar::from_int(f, static_cast<long long>(rng() % (2 * range + 1)) - range));
    else
      v.push_back(Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic())));
  }
  return v;
}

}  // namespace testing
