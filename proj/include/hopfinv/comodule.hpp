#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfinv/hopf.hpp"

namespace hopfinv {

/// Commutative algebra A with a right coaction delta: A -> A (x) H, stored as
/// a (dim A * dim H) x dim A matrix; entry (j*dim H + k, i) is the
/// coefficient of a_j (x) h_k in delta(a_i).
class ComoduleAlgebra {
 public:
  ComoduleAlgebra() = default;
  ComoduleAlgebra(HopfAlgebra h, FiniteAlgebra a, Mat delta);

  const HopfAlgebra& hopf() const { return h_; }
  const FiniteAlgebra& algebra() const { return a_; }
  const Mat& delta() const { return delta_; }
  Field field() const { return a_.field(); }
  std::size_t dim() const { return a_.dim(); }
  std::size_t hopf_dim() const { return h_.dim(); }

  Vec coact(const Vec& a) const { return delta_.apply(a); }
  /// The algebra A (x) H.
  const FiniteAlgebra& tensor() const { return tensor_; }

 private:
  HopfAlgebra h_;
  FiniteAlgebra a_;
  Mat delta_;
  FiniteAlgebra tensor_;
};

/// A commutative, delta unital, multiplicative, coassociative and counital.
/// Violations of the Hopf axioms are reported with a "hopf: " prefix.
AlgebraReport validate_comodule(const ComoduleAlgebra& c);

/// delta(a) = a (x) 1.
ComoduleAlgebra trivial_coaction(const HopfAlgebra& h, const FiniteAlgebra& a);

/// Right (H, A)-Hopf module: a right A-module M with a compatible coaction.
struct HopfModule {
  std::size_t dim = 0;
  /// action[i] is the matrix of v -> v a_i.
  std::vector<Mat> action;
  /// (dim M * dim H) x dim M, indexed like ComoduleAlgebra::delta.
  Mat coaction;

  Vec act(const Vec& v, const Vec& a) const;
};

AlgebraReport validate_hopf_module(const ComoduleAlgebra& c, const HopfModule& m);
/// M = A with multiplication and delta.
HopfModule regular_module(const ComoduleAlgebra& c);
HopfModule direct_sum(const HopfModule& m, const HopfModule& n);
/// M = A/I for a costable ideal I; coordinates follow quotient_algebra.
HopfModule quotient_module(const ComoduleAlgebra& c, const Subspace& ideal);

/// A^H = {a : delta(a) = a (x) 1}.
Subspace invariants(const ComoduleAlgebra& c);
/// M^H = {v : delta(v) = v (x) 1}.
Subspace invariants(const ComoduleAlgebra& c, const HopfModule& m);

/// L_xi(v) = (id (x) xi)(delta v) for a functional xi given by its values on
/// the basis of H.
Vec hstar_action(const ComoduleAlgebra& c, const Vec& xi, const Vec& v);
Mat hstar_matrix(const ComoduleAlgebra& c, const Vec& xi);

/// delta(I) inside I (x) H. Throws Error when i is not an ideal.
bool is_costable(const ComoduleAlgebra& c, const Subspace& i);
/// Smallest costable ideal containing gens.
Subspace costable_closure(const ComoduleAlgebra& c, const std::vector<Vec>& gens);
/// Largest costable ideal inside the ideal j.
Subspace largest_costable_within(const ComoduleAlgebra& c, const Subspace& j);

struct PointMaps {
  PointData point;
  /// delta_p = (alpha_p (x) id) delta: A -> k(p) (x) H, a (d * dim H) x dim A matrix.
  Mat delta_p;
  Subspace kernel;
};
/// Throws std::logic_error if ker delta_p differs from the largest costable
/// ideal inside p.
PointMaps point_maps(const ComoduleAlgebra& c, const PointData& point);

Subspace h_radical(const ComoduleAlgebra& c);
bool is_h_reduced(const ComoduleAlgebra& c);
bool is_h_simple(const ComoduleAlgebra& c);

struct ComoduleQuotient {
  ComoduleAlgebra comodule;
  Mat projection;
  Mat section;
};
/// A/I with the induced coaction. Throws Error when I is not costable or is
/// all of A.
ComoduleQuotient quotient_comodule(const ComoduleAlgebra& c, const Subspace& ideal);

/// Group-graded algebra as a KG-comodule: delta(a_i) = a_i (x) g_{deg(i)}.
ComoduleAlgebra build_graded(const GroupTable& g, const FiniteAlgebra& a, const std::vector<std::size_t>& degrees);
/// G acting on A by automorphisms, as a comodule algebra over K^G:
/// delta(a) = sum_g (g.a) (x) e_g. Generators are (group element, matrix).
ComoduleAlgebra build_group_action(const GroupTable& g, const FiniteAlgebra& a,
                                   const std::vector<std::pair<std::size_t, Mat>>& generators);
/// Derivation d with d^p = c d, as a comodule algebra over u(L)* for the
/// one-dimensional L with x^[p] = c x.
ComoduleAlgebra build_derivation(const FiniteAlgebra& a, const Mat& d, const Scalar& c);

struct Localization {
  /// Empty when s is nilpotent on every factor.
  std::optional<ComoduleAlgebra> comodule;
  /// A -> A_s = eA, a dim(A_s) x dim(A) matrix in the basis of eA.
  Mat map;
  Vec idempotent;
  std::string warning;
};
/// A_s for an invariant s; for Artinian A this is the factor eA on which s
/// is invertible. Throws Error when s is not invariant.
Localization localize_at_invariant(const ComoduleAlgebra& c, const Vec& s);

/// The coaction restricted to a costable subalgebra or ideal-with-unit.
ComoduleAlgebra restrict_comodule(const ComoduleAlgebra& c, const Subalgebra& b);

}  // namespace hopfinv
