#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfinv/algebra.hpp"

namespace hopfinv {

/// Finite-dimensional Hopf algebra. The comultiplication is stored as an
/// (n*n) x n matrix whose column i is Delta(h_i) in the basis h_j (x) h_k at
/// index j*n + k.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(FiniteAlgebra alg, Mat comul, Vec counit, Mat antipode);

  const FiniteAlgebra& algebra() const { return alg_; }
  Field field() const { return alg_.field(); }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<std::string>& labels() const { return alg_.labels(); }

  const Mat& comul_matrix() const { return comul_; }
  const Vec& counit_vector() const { return counit_; }
  const Mat& antipode() const { return antipode_; }

  Vec comul(const Vec& h) const { return comul_.apply(h); }
  Scalar counit(const Vec& h) const;

 private:
  FiniteAlgebra alg_;
  Mat comul_;
  Vec counit_;
  Mat antipode_;
};

/// All bialgebra and antipode axioms on basis elements, plus invertibility
/// of the antipode.
AlgebraReport validate_hopf(const HopfAlgebra& h);

/// H* in the dual basis: multiplication is the transpose of Delta,
/// comultiplication the transpose of the product, counit is evaluation at 1
/// and the antipode is the transpose of sigma. Labels gain a trailing '*'.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// Same coalgebra, opposite multiplication, antipode inverted.
HopfAlgebra opposite_hopf(const HopfAlgebra& h);

struct GroupTable {
  std::vector<std::string> names;
  /// mul[a][b] = index of ab.
  std::vector<std::vector<std::size_t>> mul;

  std::size_t order() const { return names.size(); }
  /// Checks closure, associativity, identity and inverses; throws Error.
  void validate() const;
  std::size_t identity() const;
  std::size_t inverse(std::size_t a) const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group_s3();
/// One representative of every group of order at most 6.
std::vector<GroupTable> small_groups();

HopfAlgebra build_group_algebra(Field f, const GroupTable& g);
HopfAlgebra build_dual_group_algebra(Field f, const GroupTable& g);
/// Four-dimensional Sweedler algebra with basis 1, g, x, gx and
/// Delta(x) = x (x) 1 + g (x) x. Rejects characteristic 2.
HopfAlgebra build_sweedler(Field f);

/// Restricted Lie algebra over F_p with basis x_1..x_d.
struct PLieAlgebra {
  Field field;
  std::vector<std::string> names;
  /// bracket[i * d + j] = [x_i, x_j] in the basis.
  std::vector<Vec> bracket;
  /// p_map[i] = x_i^[p].
  std::vector<Vec> p_map;

  std::size_t dim() const { return names.size(); }
};

/// Antisymmetry, Jacobi and ad(x^[p]) = ad(x)^p on basis elements.
AlgebraReport validate_plie(const PLieAlgebra& l);
/// Abelian one-dimensional L with x^[p] = c x.
PLieAlgebra one_dim_plie(Field f, const Scalar& c, const std::string& name = "x");

/// Restricted enveloping algebra u(L) in the PBW basis ordered
/// lexicographically by exponent vector, generators primitive. Rejects
/// p^dim(L) > 32. With `dualize`, returns its dual.
HopfAlgebra build_restricted_env(const PLieAlgebra& l, bool dualize);
inline constexpr std::size_t kRestrictedEnvLimit = 32;

/// {x : h x = eps(h) x for all h}.
Subspace left_integral_space(const HopfAlgebra& h);
/// {x : x h = eps(h) x for all h}, via left integrals of the opposite algebra.
Subspace right_integral_space(const HopfAlgebra& h);

struct CosemisimplicityResult {
  bool cosemisimple = false;
  /// Right integral phi of H* with phi(1) = 1, as the vector (phi(h_i))_i.
  std::optional<Vec> witness;
};
CosemisimplicityResult is_geometrically_cosemisimple(const HopfAlgebra& h);

struct CoidealReport {
  bool left = false;   // Delta(B) in H (x) B
  bool right = false;  // Delta(B) in B (x) H
  bool dim_divides = false;
};
/// Throws Error when b is not a unital subalgebra.
CoidealReport coideal_subalgebra_check(const HopfAlgebra& h, const Subspace& b);

}  // namespace hopfinv
