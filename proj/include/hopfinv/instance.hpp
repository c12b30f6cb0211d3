#pragma once

#include <cstdint>
#include <string>

#include "hopfinv/comodule.hpp"
#include "json.hpp"

namespace hopfinv {

using Json = nlohmann::json;

/// Instance files are JSON objects with keys "field", "hopf", "algebra" and
/// "coaction". Scalars are strings in the exactfield grammar. Sparse tables:
///   product:  [[i, j, [[k, c], ...]], ...]   e_i e_j = sum c e_k
///   comul:    [[[j, k, c], ...], ...]        Delta(h_i), one list per i
///   antipode: [[[j, c], ...], ...]           sigma(h_i), one list per i
///   coaction: [[[j, k, c], ...], ...]        delta(a_i) = sum c a_j (x) h_k
/// "hopf" may instead be {"builder": name, ...} with name one of
/// group_algebra, dual_group_algebra (key "group": C1..C6, V4, S3),
/// sweedler, u_restricted, u_restricted_dual (key "p_map": c, for x^[p] = c x).
/// "algebra" may be {"builder": "monogenic", "modulus": [c_0, ..., 1], "var": v}
/// or {"builder": "split", "n": n}.
ComoduleAlgebra instance_from_json(const Json& j);
/// Canonical explicit form; builders are expanded.
Json instance_to_json(const ComoduleAlgebra& c);

HopfAlgebra hopf_from_json(Field f, const Json& j);
Json hopf_to_json(const HopfAlgebra& h);
FiniteAlgebra algebra_from_json(Field f, const Json& j);
Json algebra_to_json(const FiniteAlgebra& a);

/// Reads, parses and validates. Errors name the offending key or the first
/// violated axiom.
ComoduleAlgebra parse_instance(const std::string& path);
/// Multi-line JSON in which any container that fits in 100 columns stays on one line.
std::string pretty_json(const Json& j, std::size_t indent = 0);
/// instance_to_json pretty-printed with a trailing newline.
std::string canonical_text(const ComoduleAlgebra& c);
/// FNV-1a of the compact canonical form, as 16 hex digits.
std::string instance_digest(const ComoduleAlgebra& c);
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

GroupTable group_by_name(const std::string& name);

}  // namespace hopfinv
