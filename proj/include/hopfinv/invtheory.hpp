#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfinv/comodule.hpp"

namespace hopfinv {

/// Characteristic polynomial of left multiplication by delta(a) on the free
/// A-module A (x) H with basis 1 (x) h_j. Coefficients run low to high.
struct CoactionCharPoly {
  Vec element;
  std::vector<Vec> coeffs;
  std::vector<bool> invariant_flags;
  bool all_invariant() const;
};
/// Throws std::logic_error if sum c_i a^i != 0.
CoactionCharPoly coaction_charpoly(const ComoduleAlgebra& c, const Vec& a);
/// The n x n matrix over A used by coaction_charpoly.
RingMatrix<Vec> coaction_matrix(const ComoduleAlgebra& c, const Vec& a);

struct InvarianceReport {
  CoactionCharPoly charpoly;
  bool h_reduced = false;
  /// H-reduced but some coefficient is not invariant.
  bool alarm = false;
};
InvarianceReport invariance_check(const ComoduleAlgebra& c, const Vec& a);
/// Same, reusing a known H-reducedness verdict.
InvarianceReport invariance_check(const ComoduleAlgebra& c, const Vec& a, bool h_reduced);

struct IntegralityWitness {
  bool found = false;
  /// "invariant element" (t - a), "invariant charpoly" or "p-power lift".
  std::string method;
  /// Monic polynomial with invariant coefficients, low to high.
  std::vector<Vec> coeffs;
  std::string reason;
};
IntegralityWitness integrality_witness(const ComoduleAlgebra& c, const Vec& a);

struct NormReport {
  Vec norm;
  bool element_invertible = false;
  bool coaction_invertible = false;
  bool norm_invertible = false;
  /// a invertible => N invertible, and delta(a) invertible <=> N invertible.
  bool consistent() const;
};
NormReport norm_of_coaction(const ComoduleAlgebra& c, const Vec& a);

struct OrbitalData {
  PointMaps maps;
  /// k(p) (x) H with basis w^r (x) h_k at index r * dim H + k.
  FiniteAlgebra eh;
  /// O(p) as a K-subspace of k(p) (x) H.
  Subspace space;
  std::size_t dim_over_kp = 0;
  /// Elements of A whose images form a k(p)-basis of O(p).
  std::vector<Vec> lifted_reps;
  bool is_subalgebra = false;
  bool is_right_coideal = false;
  const PointData& point() const { return maps.point; }
};
OrbitalData orbital(const ComoduleAlgebra& c, const PointData& point);

struct StabilizerData {
  PointData point;
  /// k(p) (x) H* with basis w^r (x) h_k* at index r * dim H + k.
  FiniteAlgebra ehstar;
  Subspace space;
  FiniteAlgebra algebra;
  std::size_t dim_over_kp = 0;
  bool is_subalgebra = false;
  bool is_left_coideal = false;
  bool is_semisimple = false;
};
StabilizerData stabilizer(const ComoduleAlgebra& c, const PointData& point);
StabilizerData stabilizer(const ComoduleAlgebra& c, const OrbitalData& orbit);

/// q must equal p cap A^H for some maximal ideal p; returns the maximal ideals
/// over q as preimages of the maximal ideals of O(p). Sorted.
std::vector<Subspace> fiber(const ComoduleAlgebra& c, const Subspace& q);
/// Maximal ideals p with p cap A^H = q, by enumeration. Sorted.
std::vector<Subspace> brute_fiber(const ComoduleAlgebra& c, const Subspace& q);
/// Every contraction p cap A^H, without repetition. Sorted.
std::vector<Subspace> invariant_contractions(const ComoduleAlgebra& c);

struct OpennessReport {
  /// I_a inside A^H, as a subspace of A.
  Subspace ideal;
  std::vector<Subspace> image_of_da;
  std::vector<Subspace> complement_of_vq;
  bool verified = false;
};
OpennessReport openness_ideal_check(const ComoduleAlgebra& c, const Vec& a);

struct GaloisReport {
  std::size_t gamma_rank = 0;
  bool gamma_criterion = false;
  std::vector<std::size_t> orbit_dims;
  bool pointwise_criterion = false;
  bool agree() const { return gamma_criterion == pointwise_criterion; }
  bool galois() const { return gamma_criterion && pointwise_criterion; }
};
GaloisReport is_galois(const ComoduleAlgebra& c);

struct IntegralSpace {
  /// Comodule maps H -> A as dim A x dim H matrices.
  std::vector<Mat> basis;
  /// {phi(1)} inside A^H.
  Subspace value_ideal;
  bool value_ideal_is_ideal = false;
  bool has_total = false;
  std::optional<Mat> total;
  /// Per maximal ideal, in maximal_ideals order.
  std::vector<bool> stabilizer_semisimple;
  /// Some integral has phi(1) outside p.
  std::vector<bool> integral_outside_point;
  bool all_stabilizers_semisimple() const;
  /// All stabilizers semisimple but no total integral.
  bool alarm() const { return all_stabilizers_semisimple() && !has_total; }
};
IntegralSpace integral_space(const ComoduleAlgebra& c);
bool is_comodule_map(const ComoduleAlgebra& c, const Mat& phi);

/// tr_M(v) = sum v_0 phi(sigma(v_1)). Throws Error unless phi is a total integral.
Vec doi_trace(const ComoduleAlgebra& c, const Mat& phi, const HopfModule& m, const Vec& v);

struct FreeBasisFactor {
  Vec idempotent;
  std::vector<Vec> basis;
  std::size_t orbit_dim = 0;
  /// dim O(p) is the same at every point of the factor.
  bool orbit_dim_constant = false;
  bool unique_representation = false;
};
struct FreeBasisReport {
  std::vector<FreeBasisFactor> factors;
  bool ok() const;
};
/// Throws Error when A is not H-reduced.
FreeBasisReport free_basis_over_invariants(const ComoduleAlgebra& c);

struct CorrespondenceReport {
  std::size_t costable_count = 0;
  std::size_t invariant_ideal_count = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Throws Error when A is not H-reduced.
CorrespondenceReport ideal_correspondence_check(const ComoduleAlgebra& c);
/// Costable ideals reachable from the maximal ideals, basis elements and
/// invariants, closed under one round of sums and intersections.
std::vector<Subspace> costable_family(const ComoduleAlgebra& c);

struct ModuleEquivalenceReport {
  bool skipped = false;
  std::string notice;
  bool psi_bijective = false;
  bool phi_bijective = false;
  bool ok() const { return skipped || (psi_bijective && phi_bijective); }
};
/// Throws Error when A is not H-reduced.
ModuleEquivalenceReport hopf_module_equivalence_check(const ComoduleAlgebra& c, const HopfModule& m);

struct PowerImageReport {
  std::size_t m = 0;
  std::vector<bool> lifts;
  bool ok() const;
};
/// abar is given in the coordinates of quotient_algebra(A, I). Throws Error
/// when I is not costable or abar is not invariant.
PowerImageReport power_image_check(const ComoduleAlgebra& c, const Subspace& ideal, const Vec& abar);

struct WeakReductivityReport {
  std::vector<bool> surjective;
  bool ok() const;
};
/// Surjectivity of A^H -> (A/I)^H on the given family only.
WeakReductivityReport weak_reductivity_check(const ComoduleAlgebra& c, const std::vector<Subspace>& family);

struct ReductivityCertificate {
  /// 'a', 'b', 'c', or 0 for none.
  char which = 0;
  std::string text;
};
ReductivityCertificate weak_reductivity_certificate(const ComoduleAlgebra& c);
/// True when H is commutative or A is H-reduced; otherwise the charpolys of
/// the basis and of seeded random elements are tested.
bool has_invariant_charpolys(const ComoduleAlgebra& c);

struct ResidueDegreeEntry {
  std::size_t degree_p = 0;
  std::size_t degree_q = 0;
  std::size_t orbit_dim = 0;
  bool ok = false;
};
struct ResidueDegreeReport {
  std::vector<ResidueDegreeEntry> points;
  bool ok() const;
};
ResidueDegreeReport residue_degree_check(const ComoduleAlgebra& c);

struct OrbitResidueReport {
  std::size_t orbit_dim = 0;
  std::size_t fiber_dim = 0;
  bool dims_match = false;
  bool iso_searched = false;
  bool iso_found = false;
  bool ok() const { return dims_match && (!iso_searched || iso_found); }
};
/// Throws Error when A is not H-reduced.
OrbitResidueReport orbit_residue_iso_check(const ComoduleAlgebra& c, const PointData& point);

}  // namespace hopfinv
