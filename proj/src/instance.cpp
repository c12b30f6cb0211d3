#include "hopfinv/instance.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfinv {

namespace {

/// Rethrows parse failures with the JSON location prepended.
template <class F>
auto at(const std::string& where, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  } catch (const Json::exception& e) {
    throw Error(where + ": " + e.what());
  }
}

const Json& key(const Json& j, const std::string& name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw Error(where + ": missing key '" + name + "'");
  return j.at(name);
}

Scalar scalar(Field f, const Json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  throw Error("scalar must be a string");
}

std::size_t index(const Json& j, std::size_t bound) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) throw Error("index must be an integer");
  const long long v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw Error("index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

Vec dense(Field f, const Json& j, std::size_t n, const std::string& where) {
  return at(where, [&] {
    if (!j.is_array() || j.size() != n)
      throw Error("expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(at("[" + std::to_string(i) + "]", [&] { return scalar(f, j[i]); }));
    return v;
  });
}

Json dense_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<std::string> labels_of(const Json& j, const std::string& where) {
  const Json& l = key(j, "labels", where);
  return at(where + ".labels", [&] { return l.get<std::vector<std::string>>(); });
}

/// Column i of an (n_out) x n matrix from lists of ([a, b, ...], c) entries.
Mat sparse_columns(Field f, const Json& j, std::size_t n, std::size_t rows, const std::vector<std::size_t>& bounds,
                   const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw Error(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Mat m(f, rows, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < j[i].size(); ++t) {
      const std::string loc = where + "[" + std::to_string(i) + "][" + std::to_string(t) + "]";
      at(loc, [&] {
        const Json& e = j[i][t];
        if (!e.is_array() || e.size() != bounds.size() + 1) throw Error("malformed entry");
        std::size_t row = 0;
        for (std::size_t b = 0; b < bounds.size(); ++b) row = row * bounds[b] + index(e[b], bounds[b]);
        m(row, i) += scalar(f, e[bounds.size()]);
        return 0;
      });
    }
  return m;
}

Json sparse_columns_json(const Mat& m, const std::vector<std::size_t>& bounds) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.cols(); ++i) {
    Json col = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, i).is_zero()) continue;
      Json e = Json::array();
      std::vector<std::size_t> idx(bounds.size());
      std::size_t rest = r;
      for (std::size_t b = bounds.size(); b-- > 0;) {
        idx[b] = rest % bounds[b];
        rest /= bounds[b];
      }
      for (auto x : idx) e.push_back(x);
      e.push_back(m(r, i).to_string());
      col.push_back(std::move(e));
    }
    out.push_back(std::move(col));
  }
  return out;
}

Field field_from_json(const Json& j) {
  return at("field", [&] {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_number_unsigned()) {
      const auto p = j.get<std::uint64_t>();
      return p == 0 ? Field::rationals() : Field::prime(p);
    }
    throw Error("expected \"Q\" or \"F_<p>\"");
  });
}

}  // namespace

GroupTable group_by_name(const std::string& name) {
  if (name == "V4") return klein_four_group();
  if (name == "S3") return symmetric_group_s3();
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '1' && name[1] <= '6')
    return cyclic_group(static_cast<std::size_t>(name[1] - '0'));
  throw Error("unknown group '" + name + "' (expected C1..C6, V4 or S3)");
}

FiniteAlgebra algebra_from_json(Field f, const Json& j) {
  if (j.is_object() && j.contains("builder")) {
    const std::string b = j.at("builder").get<std::string>();
    if (b == "monogenic") {
      const Json& m = key(j, "modulus", "algebra");
      const Vec c = dense(f, m, m.size(), "algebra.modulus");
      const std::string var = j.contains("var") ? j.at("var").get<std::string>() : "x";
      return at("algebra", [&] { return monogenic_algebra(Poly(f, c), var); });
    }
    if (b == "split") return at("algebra", [&] { return split_algebra(f, key(j, "n", "algebra").get<std::size_t>()); });
    throw Error("algebra: unknown builder '" + b + "'");
  }
  const auto labels = labels_of(j, "algebra");
  const std::size_t n = labels.size();
  std::vector<std::vector<Term>> table(n * n);
  const Json& prod = key(j, "product", "algebra");
  if (!prod.is_array()) throw Error("algebra.product: expected an array");
  for (std::size_t t = 0; t < prod.size(); ++t)
    at("algebra.product[" + std::to_string(t) + "]", [&] {
      const Json& e = prod[t];
      if (!e.is_array() || e.size() != 3 || !e[2].is_array()) throw Error("expected [i, j, [[k, c], ...]]");
      const std::size_t i = index(e[0], n), jj = index(e[1], n);
      for (const auto& term : e[2]) {
        if (!term.is_array() || term.size() != 2) throw Error("expected [k, c]");
        const Scalar c = scalar(f, term[1]);
        if (!c.is_zero()) table[i * n + jj].push_back({index(term[0], n), c});
      }
      return 0;
    });
  const Vec unit = dense(f, key(j, "unit", "algebra"), n, "algebra.unit");
  return at("algebra", [&] { return FiniteAlgebra(f, labels, std::move(table), unit); });
}

Json algebra_to_json(const FiniteAlgebra& a) {
  Json prod = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      // combine and sort terms so the form is canonical
      Vec v = a.mul(a.basis(i), a.basis(j));
      Json terms = Json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) terms.push_back(Json::array({k, v[k].to_string()}));
      if (!terms.empty()) prod.push_back(Json::array({i, j, terms}));
    }
  return {{"labels", a.labels()}, {"product", prod}, {"unit", dense_json(a.unit())}};
}

HopfAlgebra hopf_from_json(Field f, const Json& j) {
  if (j.is_object() && j.contains("builder")) {
    const std::string b = j.at("builder").get<std::string>();
    return at("hopf", [&] {
      if (b == "group_algebra") return build_group_algebra(f, group_by_name(key(j, "group", "hopf").get<std::string>()));
      if (b == "dual_group_algebra")
        return build_dual_group_algebra(f, group_by_name(key(j, "group", "hopf").get<std::string>()));
      if (b == "sweedler") return build_sweedler(f);
      if (b == "u_restricted" || b == "u_restricted_dual") {
        const Scalar c = j.contains("p_map") ? scalar(f, j.at("p_map")) : Scalar::zero(f);
        return build_restricted_env(one_dim_plie(f, c), b == "u_restricted_dual");
      }
      throw Error("unknown builder '" + b + "'");
    });
  }
  const FiniteAlgebra alg = algebra_from_json(f, j);
  const std::size_t n = alg.dim();
  const Mat comul = sparse_columns(f, key(j, "comul", "hopf"), n, n * n, {n, n}, "hopf.comul");
  const Vec counit = dense(f, key(j, "counit", "hopf"), n, "hopf.counit");
  const Mat antipode = sparse_columns(f, key(j, "antipode", "hopf"), n, n, {n}, "hopf.antipode");
  return at("hopf", [&] { return HopfAlgebra(alg, comul, counit, antipode); });
}

Json hopf_to_json(const HopfAlgebra& h) {
  Json out = algebra_to_json(h.algebra());
  out["comul"] = sparse_columns_json(h.comul_matrix(), {h.dim(), h.dim()});
  out["counit"] = dense_json(h.counit_vector());
  out["antipode"] = sparse_columns_json(h.antipode(), {h.dim()});
  return out;
}

ComoduleAlgebra instance_from_json(const Json& j) {
  if (!j.is_object()) throw Error("instance must be a JSON object");
  const Field f = field_from_json(key(j, "field", "instance"));
  HopfAlgebra h = hopf_from_json(f, key(j, "hopf", "instance"));
  const auto hrep = validate_hopf(h);
  if (!hrep.ok) throw Error("hopf: " + hrep.violations.front());
  FiniteAlgebra a = algebra_from_json(f, key(j, "algebra", "instance"));
  const std::size_t da = a.dim(), dh = h.dim();
  const Mat delta = sparse_columns(f, key(j, "coaction", "instance"), da, da * dh, {da, dh}, "coaction");
  ComoduleAlgebra c = at("instance", [&] { return ComoduleAlgebra(std::move(h), std::move(a), delta); });
  const auto rep = validate_comodule(c);
  if (!rep.ok) throw Error(rep.violations.front());
  return c;
}

Json instance_to_json(const ComoduleAlgebra& c) {
  return {{"field", c.field().name()},
          {"hopf", hopf_to_json(c.hopf())},
          {"algebra", algebra_to_json(c.algebra())},
          {"coaction", sparse_columns_json(c.delta(), {c.dim(), c.hopf_dim()})}};
}

ComoduleAlgebra parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  return instance_from_json(j);
}

std::string pretty_json(const Json& j, std::size_t indent) {
  const std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || flat.size() + indent <= 100) return flat;
  const std::string pad(indent + 2, ' ');
  std::string out(1, j.is_object() ? '{' : '[');
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += first ? "\n" : ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    out += pretty_json(*it, indent + 2);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_object() ? '}' : ']');
  return out;
}

std::string canonical_text(const ComoduleAlgebra& c) { return pretty_json(instance_to_json(c)) + "\n"; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string instance_digest(const ComoduleAlgebra& c) { return hex64(fnv1a64(instance_to_json(c).dump())); }

}  // namespace hopfinv
