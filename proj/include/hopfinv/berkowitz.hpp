#pragma once

#include <concepts>
#include <stdexcept>
#include <vector>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

/// Coefficient ring for the division-free characteristic polynomial: only
/// ring operations are required, no inverses.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Element& a) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, a) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
};

/// The base field viewed as a coefficient ring.
struct ScalarRing {
  using Element = Scalar;
  Field field;

  Scalar zero() const { return Scalar::zero(field); }
  Scalar one() const { return Scalar::one(field); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
};

template <class E>
using RingMatrix = std::vector<std::vector<E>>;

/// det(t*I - m) by Berkowitz' algorithm. Coefficients are returned low to
/// high (c_0, ..., c_n) with c_n = 1. Uses only ring operations, so it is
/// valid over rings with zero divisors and in positive characteristic.
template <CommutativeRing R>
std::vector<typename R::Element> charpoly_divfree(const R& ring, const RingMatrix<typename R::Element>& m) {
  using E = typename R::Element;
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("characteristic polynomial of a non-square matrix");

  // p holds the characteristic polynomial of the leading k x k block, high
  // degree first.
  std::vector<E> p{ring.one()};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C where A is
    // the leading k x k block, R = m[k][0..k), C = m[0..k)[k].
    std::vector<E> col{ring.one(), ring.neg(m[k][k])};
    std::vector<E> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m[i][k];
    for (std::size_t step = 0; step < k; ++step) {
      E rv = ring.zero();
      for (std::size_t i = 0; i < k; ++i) rv = ring.add(rv, ring.mul(m[k][i], v[i]));
      col.push_back(ring.neg(rv));
      if (step + 1 == k) break;
      std::vector<E> next(k, ring.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] = ring.add(next[i], ring.mul(m[i][j], v[j]));
      v = std::move(next);
    }
    std::vector<E> q(k + 2, ring.zero());
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < p.size(); ++j)
        q[i] = ring.add(q[i], ring.mul(col[i - j], p[j]));
    p = std::move(q);
  }
  return std::vector<E>(p.rbegin(), p.rend());
}

}  // namespace hopfinv
