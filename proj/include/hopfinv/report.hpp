#pragma once

#include <string>
#include <vector>

#include "hopfinv/instance.hpp"
#include "hopfinv/invtheory.hpp"

namespace hopfinv {

/// Section names in execution order.
const std::vector<std::string>& report_sections();

struct ReportDocument {
  Json json;
  /// Failed structural guarantees; any entry makes the exit status 2.
  std::vector<std::string> alarms;
  /// Observations recorded as data, such as non-invariant coefficients on
  /// instances that are not H-reduced.
  std::vector<std::string> notes;
  int status() const { return alarms.empty() ? 0 : 2; }
};

/// Runs the selected sections (all when empty) in a fixed order. The
/// document is a deterministic function of the instance.
ReportDocument run_report(const ComoduleAlgebra& c, const std::vector<std::string>& sections = {});

Json subspace_json(const FiniteAlgebra& a, const Subspace& s);
Json point_json(const FiniteAlgebra& a, const PointData& p);
Json charpoly_json(const ComoduleAlgebra& c, const CoactionCharPoly& cp);
Json orbital_json(const OrbitalData& o);
Json stabilizer_json(const StabilizerData& s);
Json galois_json(const GaloisReport& g);
Json integral_json(const ComoduleAlgebra& c, const IntegralSpace& is);
Json free_basis_json(const ComoduleAlgebra& c, const FreeBasisReport& r);
Json correspondence_json(const CorrespondenceReport& r);

}  // namespace hopfinv
