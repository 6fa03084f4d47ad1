#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shatter/report.hpp"

namespace shatter {

enum class ClassFilter { all, extremal, maximum };

std::string_view to_string(ClassFilter f);
/// Throws PreconditionError on an unknown name.
ClassFilter parse_filter(std::string_view name);

/// A class whose report failed at least one bound check.
struct Refutation {
  std::uint64_t index = 0;
  std::vector<std::string> concepts;
  std::vector<std::string> failed;

  bool operator==(const Refutation&) const = default;
};

/// Running totals of a scan. Merging is associative and commutative as long
/// as refutations are merged in index order.
struct ScanTotals {
  static constexpr std::size_t kMaxRefutations = 16;

  std::uint64_t visited = 0;
  std::uint64_t matched = 0;
  std::uint64_t extremal = 0;
  std::uint64_t maximum = 0;
  /// checks[i][r]: number of reports where check i had result r.
  std::array<std::array<std::uint64_t, 4>, kCheckCount> checks{};
  std::uint64_t pajor_violations = 0;
  /// Classes where "strongly shattered = shattered" disagrees with extremality.
  std::uint64_t strong_shatter_mismatches = 0;
  /// Extremal classes whose cube complex dimension differs from vc.
  std::uint64_t complex_dim_mismatches = 0;
  std::uint64_t refutation_count = 0;
  std::vector<Refutation> refutations;
  /// Largest r - 2·vc and vc* - 2·vc seen on extremal classes.
  std::optional<long long> max_radon_excess;
  std::optional<long long> max_dual_excess;

  void add(std::uint64_t index, const ConceptClass& c, const Report& r);
  void merge(const ScanTotals& later);
  bool operator==(const ScanTotals&) const = default;
};

struct ScanConfig {
  std::size_t n = 0;
  ClassFilter filter = ClassFilter::all;
  /// When set, draw this many seeded uniform samples instead of the
  /// exhaustive sweep.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::uint64_t block = 4096;
  /// Stop after processing this many classes in one call.
  std::optional<std::uint64_t> budget;
  /// Written after every block.
  std::optional<std::string> checkpoint_path;
};

/// Resumable position of a scan: (mode, n, seed, next index, running totals).
struct ScanState {
  std::string mode;  // "exhaustive" or "sample"
  std::size_t n = 0;
  ClassFilter filter = ClassFilter::all;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;
  std::uint64_t next_index = 0;
  ScanTotals totals;

  bool complete() const { return next_index >= total; }
  bool operator==(const ScanState&) const = default;
};

nlohmann::ordered_json to_json(const ScanState& s);
ScanState scan_state_from_json(const nlohmann::json& j);
void write_checkpoint(const std::string& path, const ScanState& s);
ScanState read_checkpoint(const std::string& path);

/// The class of exhaustive index i over {0,1}^n: concept j (in lexicographic
/// order) is present when bit j of i is set.
ConceptClass class_from_index(std::size_t n, std::uint64_t index);
/// The index of sample s for a seed; never zero.
std::uint64_t sample_index(std::size_t n, std::uint64_t seed, std::uint64_t s);

ScanState initial_scan_state(const ScanConfig& config);

/// Runs (or resumes) a scan. Each matching class yields a report passed to
/// `sink` in index order. Returns the state reached; complete() is false
/// when the budget ran out.
ScanState run_scan(const ScanConfig& config, std::optional<ScanState> resume = std::nullopt,
                   const std::function<void(std::uint64_t, const Report&)>& sink = {});

/// Structured end-of-scan summary.
nlohmann::ordered_json summary_json(const ScanState& s);

}  // namespace shatter
