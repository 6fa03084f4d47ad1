#include "shatter/report.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "shatter/convexity.hpp"
#include "shatter/cube_complex.hpp"

namespace shatter {

std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::pass:
      return "pass";
    case CheckResult::fail:
      return "fail";
    case CheckResult::not_applicable:
      return "n/a";
    case CheckResult::indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool Report::refuted() const {
  return std::find(checks.begin(), checks.end(), CheckResult::fail) != checks.end();
}

std::vector<std::string> Report::failed_checks() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    if (checks[i] == CheckResult::fail) out.emplace_back(kCheckNames[i]);
  }
  return out;
}

namespace {

CheckResult holds(bool b) { return b ? CheckResult::pass : CheckResult::fail; }

// lhs ≤ r where r may only be known as a lower bound.
CheckResult lower_bound_on_r(long long lhs, const Report& r) {
  if (lhs <= static_cast<long long>(r.radon)) return CheckResult::pass;
  return r.radon_exact ? CheckResult::fail : CheckResult::indeterminate;
}

// r ≤ rhs where r may only be known as a lower bound.
CheckResult upper_bound_on_r(long long rhs, const Report& r) {
  if (static_cast<long long>(r.radon) > rhs) return CheckResult::fail;
  return r.radon_exact ? CheckResult::pass : CheckResult::indeterminate;
}

long long pow2_minus_one(std::size_t e) {
  return e >= 62 ? std::numeric_limits<long long>::max() : (1LL << e) - 1;
}

}  // namespace

Report check_bounds(const ConceptClass& c, std::string source, const CheckOptions& options) {
  require_nonempty(c, "check_bounds");
  Report r;
  r.source = std::move(source);
  r.n = c.domain_size();
  r.size = c.size();
  r.vc = vc(c);
  const auto dual_class = dual(c);
  r.vc_star = vc(dual_class);
  r.shatter_count = shattered_sets(c).size();
  r.extremal = r.size == r.shatter_count;
  r.maximum = r.size == sauer_bound(r.n, r.vc);
  r.strong_shatter_count = strongly_shattered_sets(c).size();
  r.complex_dim = complex_dimension(c);

  std::optional<std::size_t> limit = options.radon_limit;
  if (!limit && options.scan_limits && r.extremal) limit = 2 * r.vc + 2;
  const auto radon = radon_number(c, limit);
  r.radon = radon.value;
  r.radon_exact = radon.exact;

  const auto vc_ll = static_cast<long long>(r.vc);
  const auto vcs_ll = static_cast<long long>(r.vc_star);
  auto set = [&](Check k, CheckResult v) { r.checks[static_cast<std::size_t>(k)] = v; };
  set(Check::assouad_lower, holds(ilog2(r.vc) <= vcs_ll));
  set(Check::assouad_upper, holds(vcs_ll <= pow2_minus_one(r.vc + 1)));
  set(Check::thm_b_upper, r.extremal ? holds(vcs_ll <= 2 * vc_ll + 1) : CheckResult::not_applicable);
  set(Check::thm_c_upper, r.extremal ? upper_bound_on_r(2 * vc_ll + 1, r) : CheckResult::not_applicable);
  set(Check::thm_c_log_lower, lower_bound_on_r(ilog2(2 * r.vc + 2), r));
  set(Check::thm_c_maximum_lower,
      r.maximum && !c.is_full_cube() ? lower_bound_on_r(vc_ll + 1, r) : CheckResult::not_applicable);
  set(Check::thm_d_vcstar_le_r, lower_bound_on_r(vcs_ll, r));
  set(Check::thm_d_extremal_upper,
      r.extremal ? upper_bound_on_r(pow2_minus_one(r.vc_star + 2), r) : CheckResult::not_applicable);

  if (options.witnesses) {
    r.radon_witness = radon.witness.sorted_strings();
    if (auto coords = first_shattered_set(dual_class, r.vc_star)) {
      for (auto i : *coords) r.dual_shattered.push_back(c[i].to_string());
      std::sort(r.dual_shattered.begin(), r.dual_shattered.end());
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["n"] = r.n;
  j["size"] = r.size;
  j["vc"] = r.vc;
  j["vc_star"] = r.vc_star;
  j["radon"] = r.radon;
  j["radon_exact"] = r.radon_exact;
  j["extremal"] = r.extremal;
  j["maximum"] = r.maximum;
  j["shatter_count"] = r.shatter_count;
  j["strong_shatter_count"] = r.strong_shatter_count;
  j["complex_dim"] = r.complex_dim;
  auto& checks = j["checks"];
  checks = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kCheckCount; ++i) checks[std::string(kCheckNames[i])] = to_string(r.checks[i]);
  auto& w = j["witnesses"];
  w = nlohmann::ordered_json::object();
  w["radon"] = r.radon_witness;
  w["dual_shattered"] = r.dual_shattered;
  return j;
}

std::string to_record(const Report& r) { return to_json(r).dump(); }

void print_table(std::ostream& out, const Report& r) {
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "source:            " << r.source << '\n'
      << "domain size:       " << r.n << '\n'
      << "concepts:          " << r.size << '\n'
      << "vc:                " << r.vc << '\n'
      << "vc*:               " << r.vc_star << '\n'
      << "radon number:      " << (r.radon_exact ? "" : ">= ") << r.radon << '\n'
      << "extremal:          " << yes_no(r.extremal) << '\n'
      << "maximum:           " << yes_no(r.maximum) << '\n'
      << "shattered sets:    " << r.shatter_count << '\n'
      << "strongly shattered: " << r.strong_shatter_count << '\n'
      << "complex dimension: " << r.complex_dim << '\n';
  out << "checks:\n";
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    out << "  " << kCheckNames[i];
    for (std::size_t pad = kCheckNames[i].size(); pad < 22; ++pad) out << ' ';
    out << to_string(r.checks[i]) << '\n';
  }
  auto list = [&](const char* label, const std::vector<std::string>& v) {
    out << label;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  };
  if (!r.radon_witness.empty()) list("radon witness:     ", r.radon_witness);
  if (!r.dual_shattered.empty()) list("dually shattered:  ", r.dual_shattered);
}

}  // namespace shatter
