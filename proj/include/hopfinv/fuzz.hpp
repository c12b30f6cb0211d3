#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hopfinv/report.hpp"

namespace hopfinv {

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t count = 10;
  /// "F_2", "F_3", "Q", or "mixed" to cycle through the three.
  std::string field = "mixed";
  /// Bound on dim A.
  std::size_t max_dim = 4;
  /// Bound on dim A * dim H.
  std::size_t max_tensor = 24;
};

struct FuzzInstance {
  std::string generator;
  ComoduleAlgebra comodule;
};

/// Instance number `index` of the run; depends only on the seed, the index
/// and the bounds.
FuzzInstance fuzz_instance(const FuzzOptions& opt, std::size_t index);
std::vector<FuzzInstance> fuzz_corpus(const FuzzOptions& opt);

struct FuzzEntry {
  std::string digest;
  std::string generator;
  std::string field;
  std::size_t dim_a = 0;
  std::size_t dim_h = 0;
  bool h_reduced = false;
  std::vector<std::string> alarms;
  std::vector<std::string> notes;
};

struct FuzzSummary {
  FuzzOptions options;
  /// Sorted by digest.
  std::vector<FuzzEntry> entries;
  std::size_t alarm_count() const;
  Json to_json() const;
};

/// Runs the full report on every instance. on_alarm sees each instance
/// with at least one alarm.
FuzzSummary run_fuzz(const FuzzOptions& opt,
                     const std::function<void(const FuzzInstance&, const FuzzEntry&)>& on_alarm = {});

}  // namespace hopfinv
