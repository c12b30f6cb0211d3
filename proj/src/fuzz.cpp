#include "hopfinv/fuzz.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace hopfinv {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Scalar rand_scalar(Field f, Rng& rng) {
  if (f.is_rational()) return Scalar::from_int(f, static_cast<long long>(pick(rng, 7)) - 3);
  return Scalar::from_int(f, static_cast<long long>(pick(rng, f.characteristic())));
}

Scalar rand_nonzero(Field f, Rng& rng) {
  for (;;) {
    Scalar s = rand_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

/// Random monic g(x^m) with deg g = k.
Poly rand_monic_in_power(Field f, std::size_t k, std::size_t m, Rng& rng) {
  std::vector<Scalar> c(k * m + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < k; ++i) c[i * m] = rand_scalar(f, rng);
  c[k * m] = Scalar::one(f);
  return Poly(f, c);
}

Mat permutation_matrix(Field f, const std::vector<std::size_t>& perm) {
  Mat m(f, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = Scalar::one(f);
  return m;
}

/// A permutation of n points made of `cycles` disjoint m-cycles.
std::vector<std::size_t> cycle_permutation(std::size_t n, std::size_t m, std::size_t cycles) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t c = 0; c < cycles; ++c)
    for (std::size_t t = 0; t < m; ++t) perm[c * m + t] = c * m + (t + 1) % m;
  return perm;
}

/// K[x_1..x_n]/(x)^2 with basis 1, x_1, ..., x_n.
FiniteAlgebra square_zero(Field f, std::size_t n) {
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return FiniteAlgebra::from_products(
      f, labels,
      [f, n](std::size_t i, std::size_t j) {
        Vec v = zero_vec(f, n + 1);
        if (i == 0) v[j] = Scalar::one(f);
        else if (j == 0) v[i] = Scalar::one(f);
        return v;
      },
      unit_vec(f, n + 1, 0));
}

using Gen = std::optional<FuzzInstance> (*)(Field, Rng&, const FuzzOptions&);

bool fits(const FuzzOptions& o, std::size_t da, std::size_t dh) { return da <= o.max_dim && da * dh <= o.max_tensor; }

std::optional<FuzzInstance> gen_graded_cyclic(Field f, Rng& rng, const FuzzOptions& o) {
  const std::size_t m = 2 + pick(rng, 2);
  if (!fits(o, m, m)) return std::nullopt;
  std::size_t kmax = 1;
  while (fits(o, (kmax + 1) * m, m)) ++kmax;
  const std::size_t k = 1 + pick(rng, kmax);
  std::vector<std::size_t> deg(k * m);
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = i % m;
  return FuzzInstance{"graded_cyclic",
                      build_graded(cyclic_group(m), monogenic_algebra(rand_monic_in_power(f, k, m, rng)), deg)};
}

std::optional<FuzzInstance> gen_graded_klein(Field f, Rng& rng, const FuzzOptions& o) {
  if (!fits(o, 4, 4)) return std::nullopt;
  const FiniteAlgebra a = monogenic_algebra(rand_monic_in_power(f, 1, 2, rng), "x");
  const FiniteAlgebra b = monogenic_algebra(rand_monic_in_power(f, 1, 2, rng), "z");
  std::vector<std::size_t> deg(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) deg[i * 2 + j] = i + 2 * j;
  return FuzzInstance{"graded_klein", build_graded(klein_four_group(), tensor_product(a, b), deg)};
}

std::optional<FuzzInstance> gen_regular_action(Field f, Rng& rng, const FuzzOptions& o) {
  static const char* names[] = {"C2", "C3", "C4", "V4"};
  const std::string name = names[pick(rng, 4)];
  const GroupTable g = name == "V4" ? klein_four_group() : cyclic_group(static_cast<std::size_t>(name[1] - '0'));
  const std::size_t n = g.order();
  if (!fits(o, n, n)) return std::nullopt;
  std::vector<std::pair<std::size_t, Mat>> gens;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> perm(n);
    for (std::size_t y = 0; y < n; ++y) perm[y] = g.mul[x][y];
    gens.emplace_back(x, permutation_matrix(f, perm));
  }
  return FuzzInstance{"regular_action", build_group_action(g, split_algebra(f, n), gens)};
}

std::optional<FuzzInstance> gen_cycle_action(Field f, Rng& rng, const FuzzOptions& o) {
  const std::size_t m = 2 + pick(rng, 2);
  const std::size_t n = 1 + pick(rng, o.max_dim);
  if (!fits(o, n, m)) return std::nullopt;
  const std::size_t cycles = pick(rng, n / m + 1);
  const Mat p = permutation_matrix(f, cycle_permutation(n, m, cycles));
  return FuzzInstance{"cycle_action", build_group_action(cyclic_group(m), split_algebra(f, n), {{1, p}})};
}

std::optional<FuzzInstance> gen_sign_action(Field f, Rng& rng, const FuzzOptions& o) {
  std::size_t kmax = 0;
  while (fits(o, 2 * (kmax + 1), 2)) ++kmax;
  if (kmax == 0) return std::nullopt;
  const std::size_t k = 1 + pick(rng, kmax);
  Mat s = Mat::identity(f, 2 * k);
  for (std::size_t i = 1; i < 2 * k; i += 2) s(i, i) = -Scalar::one(f);
  const FiniteAlgebra a = monogenic_algebra(rand_monic_in_power(f, k, 2, rng));
  return FuzzInstance{"sign_action", build_group_action(cyclic_group(2), a, {{1, s}})};
}

std::optional<FuzzInstance> gen_square_zero_action(Field f, Rng& rng, const FuzzOptions& o) {
  const std::size_t m = 2 + pick(rng, 2);
  const std::size_t n = m + pick(rng, 2);
  if (!fits(o, n + 1, m)) return std::nullopt;
  std::vector<std::size_t> perm = cycle_permutation(n, m, n / m);
  perm.insert(perm.begin(), 0);
  for (std::size_t i = 1; i < perm.size(); ++i) perm[i] += 1;
  return FuzzInstance{"square_zero_action",
                      build_group_action(cyclic_group(m), square_zero(f, n), {{1, permutation_matrix(f, perm)}})};
}

/// d/dy (c = 0) or y d/dy (c = 1) on F_p[y]/(y^p - b), scaled.
std::pair<Mat, int> rand_derivation(Field f, std::size_t p, Rng& rng) {
  const bool euler = pick(rng, 2) == 1;
  const Scalar lam = rand_nonzero(f, rng);
  Mat d(f, p, p);
  for (std::size_t k = 1; k < p; ++k) {
    const Scalar kk = Scalar::from_int(f, static_cast<long long>(k));
    if (euler) d(k, k) = lam * kk;
    else d(k - 1, k) = lam * kk;
  }
  return {d, euler ? 1 : 0};
}

std::optional<FuzzInstance> gen_derivation(Field f, Rng& rng, const FuzzOptions& o) {
  if (f.is_rational()) return std::nullopt;
  const std::size_t p = f.characteristic();
  if (!fits(o, p, p)) return std::nullopt;
  std::vector<Scalar> mod(p + 1, Scalar::zero(f));
  mod[0] = -rand_scalar(f, rng);
  mod[p] = Scalar::one(f);
  const auto [d, c] = rand_derivation(f, p, rng);
  return FuzzInstance{"derivation", build_derivation(monogenic_algebra(Poly(f, mod), "y"), d,
                                                     c ? Scalar::one(f) : Scalar::zero(f))};
}

std::optional<FuzzInstance> gen_derivation_pair(Field f, Rng& rng, const FuzzOptions& o) {
  if (f.is_rational()) return std::nullopt;
  const std::size_t p = f.characteristic();
  if (!fits(o, p * p, p)) return std::nullopt;
  auto factor = [&](const std::string& var) {
    std::vector<Scalar> mod(p + 1, Scalar::zero(f));
    mod[0] = -rand_scalar(f, rng);
    mod[p] = Scalar::one(f);
    return monogenic_algebra(Poly(f, mod), var);
  };
  const FiniteAlgebra a = tensor_product(factor("y"), factor("z"));
  const Mat id = Mat::identity(f, p);
  Mat d1(f, p, p), d2(f, p, p);
  const bool euler = pick(rng, 2) == 1;
  for (std::size_t k = 1; k < p; ++k) {
    const Scalar kk = Scalar::from_int(f, static_cast<long long>(k));
    if (euler) {
      d1(k, k) = rand_scalar(f, rng) * kk;
      d2(k, k) = rand_scalar(f, rng) * kk;
    } else {
      d1(k - 1, k) = kk;
      d2(k - 1, k) = kk;
    }
  }
  const Mat d = kron(d1, id) + kron(id, d2);
  return FuzzInstance{"derivation_pair", build_derivation(a, d, euler ? Scalar::one(f) : Scalar::zero(f))};
}

std::optional<FuzzInstance> gen_sweedler(Field f, Rng& rng, const FuzzOptions& o) {
  if (f.characteristic() == 2) return std::nullopt;
  const bool twist = pick(rng, 2) == 1;
  const std::size_t da = twist ? 4 : 2;
  if (!fits(o, da, 4)) return std::nullopt;
  const Scalar lam = rand_scalar(f, rng);
  const Scalar one = Scalar::one(f);
  FiniteAlgebra a = twist ? FiniteAlgebra::from_products(
                                f, {"1", "u", "w", "uw"},
                                [f](std::size_t i, std::size_t j) {
                                  Vec v = zero_vec(f, 4);
                                  if ((i & j) == 0) v[i | j] = Scalar::one(f);
                                  return v;
                                },
                                unit_vec(f, 4, 0))
                          : monogenic_algebra(Poly(f, {Scalar::zero(f), Scalar::zero(f), one}), "u");
  // basis of H: 1, g, x, gx
  Mat delta(f, da * 4, da);
  delta(0, 0) = one;
  delta(1 * 4 + 1, 1) = one;
  if (twist) {
    delta(2 * 4 + 3, 1) = lam;
    delta(2 * 4 + 0, 2) = one;
    delta(3 * 4 + 1, 3) = one;
  } else {
    delta(0 * 4 + 3, 1) = lam;
  }
  ComoduleAlgebra c(build_sweedler(f), std::move(a), std::move(delta));
  const auto rep = validate_comodule(c);
  if (!rep.ok) throw std::logic_error("sweedler generator: " + rep.violations.front());
  return FuzzInstance{twist ? "sweedler_twist" : "sweedler", std::move(c)};
}

std::optional<FuzzInstance> gen_trivial(Field f, Rng& rng, const FuzzOptions& o) {
  HopfAlgebra h;
  switch (pick(rng, 5)) {
    case 0: h = build_group_algebra(f, cyclic_group(2 + pick(rng, 2))); break;
    case 1: h = build_dual_group_algebra(f, cyclic_group(2 + pick(rng, 2))); break;
    case 2:
      if (f.characteristic() == 2) return std::nullopt;
      h = build_sweedler(f);
      break;
    default:
      if (f.is_rational()) return std::nullopt;
      h = build_restricted_env(one_dim_plie(f, rand_scalar(f, rng)), pick(rng, 2) == 1);
  }
  std::size_t kmax = 0;
  while (fits(o, kmax + 1, h.dim())) ++kmax;
  if (kmax == 0) return std::nullopt;
  const std::size_t k = 1 + pick(rng, kmax);
  const FiniteAlgebra a = pick(rng, 3) == 0 ? split_algebra(f, k) : monogenic_algebra(rand_monic_in_power(f, k, 1, rng));
  return FuzzInstance{"trivial", trivial_coaction(h, a)};
}

const std::vector<Gen>& generators() {
  static const std::vector<Gen> gens{gen_graded_cyclic, gen_graded_klein,       gen_regular_action,
                                     gen_cycle_action,  gen_sign_action,        gen_square_zero_action,
                                     gen_derivation,    gen_derivation_pair,    gen_sweedler,
                                     gen_trivial};
  return gens;
}

Field field_for(const FuzzOptions& opt, std::size_t index) {
  if (opt.field == "mixed") {
    static const char* cycle[] = {"F_2", "F_3", "Q"};
    return Field::parse(cycle[index % 3]);
  }
  return Field::parse(opt.field);
}

}  // namespace

FuzzInstance fuzz_instance(const FuzzOptions& opt, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(opt.max_dim),
                    static_cast<std::uint32_t>(opt.max_tensor)};
  Rng rng(seq);
  const Field f = field_for(opt, index);
  const auto& gens = generators();
  const std::size_t start = pick(rng, gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    auto inst = gens[(start + t) % gens.size()](f, rng, opt);
    if (!inst) continue;
    // one in three instances is replaced by a random costable quotient
    if (pick(rng, 3) == 0 && inst->comodule.dim() > 1) {
      const ComoduleAlgebra& c = inst->comodule;
      Vec v = zero_vec(f, c.dim());
      for (auto& x : v) x = rand_scalar(f, rng);
      const Subspace i = costable_closure(c, {v});
      if (!i.is_zero() && !i.is_whole())
        inst = FuzzInstance{inst->generator + "+quotient", quotient_comodule(c, i).comodule};
    }
    return *inst;
  }
  // the trivial coaction on K always fits
  return FuzzInstance{"trivial", trivial_coaction(build_group_algebra(f, cyclic_group(1)), FiniteAlgebra::base(f))};
}

std::vector<FuzzInstance> fuzz_corpus(const FuzzOptions& opt) {
  std::vector<FuzzInstance> out;
  for (std::size_t i = 0; i < opt.count; ++i) out.push_back(fuzz_instance(opt, i));
  return out;
}

std::size_t FuzzSummary::alarm_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.alarms.empty() ? 0 : 1;
  return n;
}

Json FuzzSummary::to_json() const {
  Json items = Json::array();
  std::size_t reduced = 0;
  for (const auto& e : entries) {
    reduced += e.h_reduced;
    items.push_back({{"digest", e.digest},
                     {"generator", e.generator},
                     {"field", e.field},
                     {"dim_a", e.dim_a},
                     {"dim_h", e.dim_h},
                     {"h_reduced", e.h_reduced},
                     {"alarms", e.alarms},
                     {"notes", e.notes}});
  }
  return {{"seed", options.seed},
          {"count", options.count},
          {"field", options.field},
          {"max_dim", options.max_dim},
          {"max_tensor", options.max_tensor},
          {"h_reduced_count", reduced},
          {"alarm_count", alarm_count()},
          {"instances", items}};
}

FuzzSummary run_fuzz(const FuzzOptions& opt,
                     const std::function<void(const FuzzInstance&, const FuzzEntry&)>& on_alarm) {
  FuzzSummary s;
  s.options = opt;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const FuzzInstance inst = fuzz_instance(opt, i);
    const ComoduleAlgebra& c = inst.comodule;
    const ReportDocument doc = run_report(c);
    FuzzEntry e{instance_digest(c), inst.generator, c.field().name(), c.dim(), c.hopf_dim(),
                is_h_reduced(c),     doc.alarms,     doc.notes};
    if (!e.alarms.empty() && on_alarm) on_alarm(inst, e);
    s.entries.push_back(std::move(e));
  }
  std::stable_sort(s.entries.begin(), s.entries.end(),
                   [](const FuzzEntry& a, const FuzzEntry& b) { return a.digest < b.digest; });
  return s;
}

}  // namespace hopfinv
