#include "hopfinv/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace hopfinv {

HopfAlgebra::HopfAlgebra(FiniteAlgebra alg, Mat comul, Vec counit, Mat antipode)
    : alg_(std::move(alg)), comul_(std::move(comul)), counit_(std::move(counit)), antipode_(std::move(antipode)) {
  const std::size_t n = alg_.dim();
  if (comul_.rows() != n * n || comul_.cols() != n) throw Error("comultiplication has wrong shape");
  if (counit_.size() != n) throw Error("counit has wrong length");
  if (antipode_.rows() != n || antipode_.cols() != n) throw Error("antipode has wrong shape");
}

Scalar HopfAlgebra::counit(const Vec& h) const {
  Scalar s = Scalar::zero(field());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) s += h[i] * counit_[i];
  return s;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

Mat counit_row(const HopfAlgebra& h) { return Mat::from_rows(h.field(), h.dim(), {h.counit_vector()}); }

/// Multiplication map H (x) H -> H applied to a tensor.
Vec multiply_tensor(const FiniteAlgebra& a, const Vec& t) {
  const std::size_t n = a.dim();
  Vec out = a.zero();
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p].is_zero()) continue;
    for (const auto& term : a.product(p / n, p % n)) out[term.index] += t[p] * term.coeff;
  }
  return out;
}

}  // namespace

AlgebraReport validate_hopf(const HopfAlgebra& h) {
  AlgebraReport rep = validate_algebra(h.algebra(), false);
  const std::size_t n = h.dim();
  const FiniteAlgebra& a = h.algebra();
  const Field f = h.field();
  const Mat id = Mat::identity(f, n);
  const Mat eps = counit_row(h);
  const Mat& d = h.comul_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = a.basis(i);
    const Vec di = h.comul(e);
    if (tensor_apply(d, id, di) != tensor_apply(id, d, di)) rep.fail("coassociativity fails at i=" + idx(i));
    if (tensor_apply(eps, id, di) != e || tensor_apply(id, eps, di) != e) rep.fail("counit axiom fails at i=" + idx(i));
    const Vec left = multiply_tensor(a, tensor_apply(h.antipode(), id, di));
    const Vec right = multiply_tensor(a, tensor_apply(id, h.antipode(), di));
    const Vec expect = h.counit(e) * a.unit();
    if (left != expect || right != expect) rep.fail("antipode axiom fails at i=" + idx(i));
  }
  if (h.comul(a.unit()) != tensor_vec(a.unit(), a.unit())) rep.fail("comultiplication not unital");
  if (!h.counit(a.unit()).is_one()) rep.fail("counit not unital");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = a.mul(a.basis(i), a.basis(j));
      if (h.comul(prod) != tensor_mul(a, a, h.comul(a.basis(i)), h.comul(a.basis(j))))
        rep.fail("comultiplication not multiplicative at (i,j)=(" + idx(i) + "," + idx(j) + ")");
      if (h.counit(prod) != h.counit_vector()[i] * h.counit_vector()[j])
        rep.fail("counit not multiplicative at (i,j)=(" + idx(i) + "," + idx(j) + ")");
    }
  if (!inverse(h.antipode())) rep.fail("antipode is not invertible");
  return rep;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  const FiniteAlgebra& a = h.algebra();
  const Mat& d = h.comul_matrix();
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(l + "*");
  auto product = [&](std::size_t i, std::size_t j) { return d.row(i * n + j); };
  FiniteAlgebra dual = FiniteAlgebra::from_products(f, std::move(labels), product, h.counit_vector());
  Mat comul(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) comul(i * n + j, t.index) = t.coeff;
  return HopfAlgebra(std::move(dual), std::move(comul), a.unit(), h.antipode().transpose());
}

HopfAlgebra opposite_hopf(const HopfAlgebra& h) {
  const FiniteAlgebra& a = h.algebra();
  auto product = [&](std::size_t i, std::size_t j) { return a.mul(a.basis(j), a.basis(i)); };
  FiniteAlgebra op = FiniteAlgebra::from_products(h.field(), a.labels(), product, a.unit());
  auto inv = inverse(h.antipode());
  if (!inv) throw Error("antipode is not invertible");
  return HopfAlgebra(std::move(op), h.comul_matrix(), h.counit_vector(), *inv);
}

void GroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw Error("group table is empty");
  if (mul.size() != n) throw Error("group table has wrong number of rows");
  for (const auto& row : mul) {
    if (row.size() != n) throw Error("group table row has wrong length");
    for (auto x : row)
      if (x >= n) throw Error("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error("group table not associative at (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
  (void)identity();
  for (std::size_t a = 0; a < n; ++a) (void)inverse(a);
}

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order() && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) return e;
  }
  throw Error("group table has no identity");
}

std::size_t GroupTable::inverse(std::size_t a) const {
  const std::size_t e = identity();
  for (std::size_t b = 0; b < order(); ++b)
    if (mul[a][b] == e && mul[b][a] == e) return b;
  throw Error("group element " + idx(a) + " has no inverse");
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  for (std::size_t i = 0; i < n; ++i) g.names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + idx(i)));
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

GroupTable klein_four_group() {
  GroupTable g;
  g.names = {"e", "a", "b", "ab"};
  g.mul.assign(4, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) g.mul[x][y] = x ^ y;
  return g;
}

GroupTable symmetric_group_s3() {
  // permutations of {0,1,2} in lexicographic order of their images
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  GroupTable g;
  g.names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  g.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) g.mul[a][b] = k;
    }
  return g;
}

std::vector<GroupTable> small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_four_group(), cyclic_group(5), cyclic_group(6), symmetric_group_s3()};
}

HopfAlgebra build_group_algebra(Field f, const GroupTable& g) {
  g.validate();
  const std::size_t n = g.order();
  auto product = [&](std::size_t a, std::size_t b) { return unit_vec(f, n, g.mul[a][b]); };
  FiniteAlgebra alg = FiniteAlgebra::from_products(f, g.names, product, unit_vec(f, n, g.identity()));
  Mat comul(f, n * n, n);
  Mat antipode(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comul(a * n + a, a) = Scalar::one(f);
    antipode(g.inverse(a), a) = Scalar::one(f);
  }
  return HopfAlgebra(std::move(alg), std::move(comul), Vec(n, Scalar::one(f)), std::move(antipode));
}

HopfAlgebra build_dual_group_algebra(Field f, const GroupTable& g) { return dual_hopf(build_group_algebra(f, g)); }

HopfAlgebra build_sweedler(Field f) {
  if (f.characteristic() == 2) throw Error("the Sweedler algebra needs characteristic different from 2");
  const Scalar one = Scalar::one(f);
  const Vec z = zero_vec(f, 4);
  auto e = [&](std::size_t i) { return unit_vec(f, 4, i); };
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  const Vec table[4][4] = {
      {e(0), e(1), e(2), e(3)},
      {e(1), e(0), e(3), e(2)},
      {e(2), -e(3), z, z},
      {e(3), -e(2), z, z},
  };
  auto product = [&](std::size_t i, std::size_t j) { return table[i][j]; };
  FiniteAlgebra alg = FiniteAlgebra::from_products(f, {"1", "g", "x", "gx"}, product, e(0));
  Mat comul(f, 16, 4);
  comul(0 * 4 + 0, 0) = one;
  comul(1 * 4 + 1, 1) = one;
  comul(2 * 4 + 0, 2) = one;  // x (x) 1
  comul(1 * 4 + 2, 2) = one;  // g (x) x
  comul(3 * 4 + 1, 3) = one;  // gx (x) g
  comul(0 * 4 + 3, 3) = one;  // 1 (x) gx
  Mat antipode(f, 4, 4);
  antipode(0, 0) = one;
  antipode(1, 1) = one;
  antipode(3, 2) = -one;  // sigma(x) = -gx
  antipode(2, 3) = one;   // sigma(gx) = x
  return HopfAlgebra(std::move(alg), std::move(comul), Vec{one, one, Scalar::zero(f), Scalar::zero(f)},
                     std::move(antipode));
}

AlgebraReport validate_plie(const PLieAlgebra& l) {
  AlgebraReport rep;
  const std::size_t d = l.dim();
  const Field f = l.field;
  if (f.is_rational()) {
    rep.fail("restricted Lie algebras need a prime field");
    return rep;
  }
  if (l.bracket.size() != d * d || l.p_map.size() != d) {
    rep.fail("bracket or p-map has wrong size");
    return rep;
  }
  auto br = [&](const Vec& x, const Vec& y) {
    Vec out = zero_vec(f, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!x[i].is_zero() && !y[j].is_zero()) axpy(out, x[i] * y[j], l.bracket[i * d + j]);
    return out;
  };
  auto e = [&](std::size_t i) { return unit_vec(f, d, i); };
  for (std::size_t i = 0; i < d; ++i) {
    if (!is_zero(l.bracket[i * d + i])) rep.fail("[x,x] != 0 at i=" + idx(i));
    for (std::size_t j = 0; j < d; ++j) {
      if (l.bracket[i * d + j] != -l.bracket[j * d + i]) rep.fail("bracket not antisymmetric at (" + idx(i) + "," + idx(j) + ")");
      for (std::size_t k = 0; k < d; ++k) {
        const Vec jac = br(e(i), br(e(j), e(k))) + br(e(j), br(e(k), e(i))) + br(e(k), br(e(i), e(j)));
        if (!is_zero(jac)) rep.fail("Jacobi fails at (" + idx(i) + "," + idx(j) + "," + idx(k) + ")");
      }
    }
  }
  const std::uint64_t p = f.characteristic();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec y = e(j);
      for (std::uint64_t k = 0; k < p; ++k) y = br(e(i), y);
      if (br(l.p_map[i], e(j)) != y) rep.fail("ad(x^[p]) != ad(x)^p at (" + idx(i) + "," + idx(j) + ")");
    }
  return rep;
}

PLieAlgebra one_dim_plie(Field f, const Scalar& c, const std::string& name) {
  return PLieAlgebra{f, {name}, {zero_vec(f, 1)}, {Vec{c}}};
}

namespace {

using Word = std::vector<std::size_t>;

/// Straightening of words in u(L) to PBW normal form.
class PBW {
 public:
  explicit PBW(const PLieAlgebra& l) : l_(l), d_(l.dim()), p_(l.field.characteristic()) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < d_; ++i) {
      size *= p_;
      if (size > kRestrictedEnvLimit) throw Error("u(L) exceeds the size limit p^dim <= 32");
    }
    size_ = size;
  }

  std::size_t size() const { return size_; }

  std::vector<std::size_t> exponents(std::size_t index) const {
    std::vector<std::size_t> a(d_);
    for (std::size_t i = d_; i-- > 0;) {
      a[i] = index % p_;
      index /= p_;
    }
    return a;
  }

  std::size_t index(const std::vector<std::size_t>& a) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < d_; ++i) k = k * p_ + a[i];
    return k;
  }

  Word word(std::size_t index) const {
    Word w;
    const auto a = exponents(index);
    for (std::size_t i = 0; i < d_; ++i) w.insert(w.end(), a[i], i);
    return w;
  }

  std::string label(std::size_t index) const {
    const auto a = exponents(index);
    std::string out;
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += l_.names[i];
      if (a[i] > 1) out += "^" + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
  }

  /// Normal form of a linear combination of words.
  Vec normalize(std::map<Word, Scalar> pending) const {
    const Field f = l_.field;
    Vec out = zero_vec(f, size_);
    while (!pending.empty()) {
      auto it = pending.begin();
      const Word w = it->first;
      const Scalar c = it->second;
      pending.erase(it);
      if (c.is_zero()) continue;
      auto push = [&](Word nw, const Scalar& k) {
        auto [pos, inserted] = pending.emplace(std::move(nw), k);
        if (!inserted) pos->second += k;
      };
      // first descent
      std::size_t pos = 0;
      while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
      if (pos + 1 < w.size()) {
        // x_a x_b = x_b x_a + [x_a, x_b]
        const std::size_t a = w[pos], b = w[pos + 1];
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        push(swapped, c);
        const Vec& br = l_.bracket[a * d_ + b];
        for (std::size_t k = 0; k < d_; ++k) {
          if (br[k].is_zero()) continue;
          Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          nw.push_back(k);
          nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
          push(nw, c * br[k]);
        }
        continue;
      }
      // sorted; look for a run of p equal letters
      std::size_t start = 0;
      bool reduced = false;
      while (start < w.size()) {
        std::size_t end = start;
        while (end < w.size() && w[end] == w[start]) ++end;
        if (end - start >= p_) {
          const Vec& pm = l_.p_map[w[start]];
          for (std::size_t k = 0; k < d_; ++k) {
            if (pm[k].is_zero()) continue;
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
            nw.push_back(k);
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(start + p_), w.end());
            push(nw, c * pm[k]);
          }
          reduced = true;
          break;
        }
        start = end;
      }
      if (reduced) continue;
      std::vector<std::size_t> a(d_, 0);
      for (auto x : w) ++a[x];
      out[index(a)] += c;
    }
    return out;
  }

 private:
  const PLieAlgebra& l_;
  std::size_t d_;
  std::uint64_t p_;
  std::size_t size_ = 1;
};

Scalar binomial(Field f, std::size_t n, std::size_t k) {
  Scalar r = Scalar::one(f);
  // small n: multiplicative formula over the integers, then reduce
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (f.is_rational()) return Scalar::from_rational(f, mpq_class(b));
  const mpz_class pz(static_cast<unsigned long>(f.characteristic()));
  mpz_class m = b % pz;
  r = Scalar::from_int(f, m.get_si());
  return r;
}

}  // namespace

HopfAlgebra build_restricted_env(const PLieAlgebra& l, bool dualize) {
  const auto rep = validate_plie(l);
  if (!rep.ok) throw Error("invalid restricted Lie algebra: " + rep.violations.front());
  const Field f = l.field;
  const PBW pbw(l);
  const std::size_t n = pbw.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(pbw.label(i));
  auto product = [&](std::size_t i, std::size_t j) {
    Word w = pbw.word(i);
    const Word v = pbw.word(j);
    w.insert(w.end(), v.begin(), v.end());
    return pbw.normalize({{w, Scalar::one(f)}});
  };
  FiniteAlgebra alg = FiniteAlgebra::from_products(f, std::move(labels), product, unit_vec(f, n, 0));
  Mat comul(f, n * n, n);
  Mat antipode(f, n, n);
  Vec counit = zero_vec(f, n);
  counit[0] = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = pbw.exponents(i);
    // Delta(x^a) = sum_{k <= a} prod_i C(a_i, k_i) x^k (x) x^{a-k}
    const std::size_t count = n;
    for (std::size_t j = 0; j < count; ++j) {
      const auto k = pbw.exponents(j);
      bool le = true;
      for (std::size_t t = 0; t < a.size() && le; ++t) le = k[t] <= a[t];
      if (!le) continue;
      Scalar c = Scalar::one(f);
      std::vector<std::size_t> rest(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) {
        c *= binomial(f, a[t], k[t]);
        rest[t] = a[t] - k[t];
      }
      if (!c.is_zero()) comul(j * n + pbw.index(rest), i) += c;
    }
    // sigma(x^a) = (-1)^{|a|} x_d^{a_d} ... x_1^{a_1}
    Word w = pbw.word(i);
    std::reverse(w.begin(), w.end());
    const Scalar sign = w.size() % 2 ? -Scalar::one(f) : Scalar::one(f);
    antipode.set_column(i, pbw.normalize({{w, sign}}));
  }
  HopfAlgebra u(std::move(alg), std::move(comul), std::move(counit), std::move(antipode));
  return dualize ? dual_hopf(u) : u;
}

Subspace left_integral_space(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    Mat m = h.algebra().left_mult(h.algebra().basis(i));
    for (std::size_t k = 0; k < n; ++k) m(k, k) -= h.counit_vector()[i];
    blocks.push_back(std::move(m));
  }
  return kernel(vstack(blocks));
}

Subspace right_integral_space(const HopfAlgebra& h) { return left_integral_space(opposite_hopf(h)); }

CosemisimplicityResult is_geometrically_cosemisimple(const HopfAlgebra& h) {
  const HopfAlgebra dual = dual_hopf(h);
  const Subspace ints = right_integral_space(dual);
  CosemisimplicityResult out;
  for (const auto& phi : ints.basis()) {
    // phi(1_H) = sum_i phi_i (1_H)_i
    Scalar at_one = Scalar::zero(h.field());
    for (std::size_t i = 0; i < h.dim(); ++i) at_one += phi[i] * h.algebra().unit()[i];
    if (!at_one.is_zero()) {
      out.cosemisimple = true;
      out.witness = at_one.inverse() * phi;
      break;
    }
  }
  return out;
}

CoidealReport coideal_subalgebra_check(const HopfAlgebra& h, const Subspace& b) {
  if (!is_subalgebra(h.algebra(), b)) throw Error("subspace is not a unital subalgebra");
  const std::size_t n = h.dim();
  CoidealReport rep;
  rep.left = rep.right = true;
  for (const auto& v : b.basis()) {
    const Vec d = h.comul(v);
    for (std::size_t k = 0; k < n && rep.right; ++k) {
      Vec col(n);
      for (std::size_t j = 0; j < n; ++j) col[j] = d[j * n + k];
      rep.right = b.contains(col);
    }
    for (std::size_t j = 0; j < n && rep.left; ++j) {
      Vec row(d.begin() + static_cast<std::ptrdiff_t>(j * n), d.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
      rep.left = b.contains(row);
    }
  }
  rep.dim_divides = b.dim() > 0 && n % b.dim() == 0;
  return rep;
}

}  // namespace hopfinv
