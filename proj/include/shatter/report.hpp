#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shatter/concept_class.hpp"

namespace shatter {

enum class CheckResult { pass, fail, not_applicable, indeterminate };

std::string_view to_string(CheckResult r);

/// Bound checks carried by every report, in output order.
enum class Check : std::size_t {
  assouad_lower,
  assouad_upper,
  thm_b_upper,
  thm_c_upper,
  thm_c_log_lower,
  thm_c_maximum_lower,
  thm_d_vcstar_le_r,
  thm_d_extremal_upper,
};
inline constexpr std::size_t kCheckCount = 8;
inline constexpr std::array<std::string_view, kCheckCount> kCheckNames = {
    "assouad_lower",   "assouad_upper",       "thm_b_upper",       "thm_c_upper",
    "thm_c_log_lower", "thm_c_maximum_lower", "thm_d_vcstar_le_r", "thm_d_extremal_upper",
};

struct Report {
  std::string source;
  std::size_t n = 0;
  std::size_t size = 0;
  std::size_t vc = 0;
  std::size_t vc_star = 0;
  std::size_t radon = 0;
  bool radon_exact = true;
  bool extremal = false;
  bool maximum = false;
  std::size_t shatter_count = 0;
  std::size_t strong_shatter_count = 0;
  std::size_t complex_dim = 0;
  std::array<CheckResult, kCheckCount> checks{};
  std::vector<std::string> radon_witness;
  std::vector<std::string> dual_shattered;

  CheckResult check(Check c) const { return checks[static_cast<std::size_t>(c)]; }
  /// True when any check failed: a bound was violated.
  bool refuted() const;
  std::vector<std::string> failed_checks() const;
};

struct CheckOptions {
  /// Explicit Radon search limit; overrides scan_limits.
  std::optional<std::size_t> radon_limit;
  /// Cap the Radon search at 2·vc+2 on extremal classes, one above the
  /// proven bound, so a violation is still visible.
  bool scan_limits = false;
  bool witnesses = true;
};

/// Computes every metric of a nonempty class and evaluates the bound checks.
Report check_bounds(const ConceptClass& c, std::string source, const CheckOptions& options = {});

nlohmann::ordered_json to_json(const Report& r);
/// One-line JSON record.
std::string to_record(const Report& r);
/// Human-readable key/value table.
void print_table(std::ostream& out, const Report& r);

}  // namespace shatter
