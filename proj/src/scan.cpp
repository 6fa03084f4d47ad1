#include "shatter/scan.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <thread>

#include "shatter/errors.hpp"

namespace shatter {

std::string_view to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::all:
      return "all";
    case ClassFilter::extremal:
      return "extremal";
    case ClassFilter::maximum:
      return "maximum";
  }
  return "?";
}

ClassFilter parse_filter(std::string_view name) {
  if (name == "all") return ClassFilter::all;
  if (name == "extremal") return ClassFilter::extremal;
  if (name == "maximum") return ClassFilter::maximum;
  throw PreconditionError("unknown filter '" + std::string(name) + "' (expected all, extremal or maximum)");
}

namespace {

std::size_t result_slot(CheckResult r) { return static_cast<std::size_t>(r); }

void bump_max(std::optional<long long>& slot, long long v) {
  if (!slot || v > *slot) slot = v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t index_mask(std::size_t n) {
  const std::size_t bits = std::size_t{1} << n;
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

void ScanTotals::add(std::uint64_t index, const ConceptClass& c, const Report& r) {
  ++matched;
  if (r.extremal) ++extremal;
  if (r.maximum) ++maximum;
  for (std::size_t i = 0; i < kCheckCount; ++i) ++checks[i][result_slot(r.checks[i])];
  if (r.size > r.shatter_count) ++pajor_violations;
  if ((r.strong_shatter_count == r.shatter_count) != r.extremal) ++strong_shatter_mismatches;
  if (r.extremal) {
    if (r.complex_dim != r.vc) ++complex_dim_mismatches;
    const auto two_vc = 2 * static_cast<long long>(r.vc);
    bump_max(max_radon_excess, static_cast<long long>(r.radon) - two_vc);
    bump_max(max_dual_excess, static_cast<long long>(r.vc_star) - two_vc);
  }
  const bool bad = r.refuted() || r.size > r.shatter_count ||
                   (r.strong_shatter_count == r.shatter_count) != r.extremal;
  if (bad) {
    ++refutation_count;
    if (refutations.size() < kMaxRefutations) {
      auto failed = r.failed_checks();
      if (r.size > r.shatter_count) failed.emplace_back("pajor");
      if ((r.strong_shatter_count == r.shatter_count) != r.extremal) failed.emplace_back("strong_shattering");
      refutations.push_back({index, c.to_strings(), std::move(failed)});
    }
  }
}

void ScanTotals::merge(const ScanTotals& later) {
  visited += later.visited;
  matched += later.matched;
  extremal += later.extremal;
  maximum += later.maximum;
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    for (std::size_t j = 0; j < 4; ++j) checks[i][j] += later.checks[i][j];
  }
  pajor_violations += later.pajor_violations;
  strong_shatter_mismatches += later.strong_shatter_mismatches;
  complex_dim_mismatches += later.complex_dim_mismatches;
  refutation_count += later.refutation_count;
  for (const auto& r : later.refutations) {
    if (refutations.size() >= kMaxRefutations) break;
    refutations.push_back(r);
  }
  if (later.max_radon_excess) bump_max(max_radon_excess, *later.max_radon_excess);
  if (later.max_dual_excess) bump_max(max_dual_excess, *later.max_dual_excess);
}

ConceptClass class_from_index(std::size_t n, std::uint64_t index) {
  if (n < 1 || n > 6) throw PreconditionError("class_from_index: n must be in [1, 6]");
  if (index == 0 || (index & ~index_mask(n)) != 0) throw PreconditionError("class_from_index: index out of range");
  std::vector<Concept> out;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
    if ((index >> j) & 1U) out.push_back(Concept::from_integer(j, n));
  }
  return ConceptClass(n, std::move(out));
}

std::uint64_t sample_index(std::size_t n, std::uint64_t seed, std::uint64_t s) {
  const auto mask = index_mask(n);
  std::uint64_t state = splitmix64(seed) ^ splitmix64(s * 0x632be59bd9b4e019ULL + 1);
  for (;;) {
    state = splitmix64(state);
    if (auto idx = state & mask; idx != 0) return idx;
  }
}

ScanState initial_scan_state(const ScanConfig& config) {
  ScanState s;
  s.n = config.n;
  s.filter = config.filter;
  s.seed = config.seed;
  if (config.samples) {
    if (config.n < 1 || config.n > 6) throw PreconditionError("sampled scan: n must be in [1, 6]");
    s.mode = "sample";
    s.total = *config.samples;
  } else {
    if (config.n < 1 || config.n > 4) throw PreconditionError("exhaustive scan: n must be in [1, 4]");
    s.mode = "exhaustive";
    s.seed = 0;
    s.total = index_mask(config.n);
  }
  return s;
}

namespace {

struct Chunk {
  ScanTotals totals;
  std::vector<std::pair<std::uint64_t, Report>> reports;
};

bool passes(ClassFilter f, const ConceptClass& c) {
  switch (f) {
    case ClassFilter::all:
      return true;
    case ClassFilter::extremal:
      return is_extremal(c);
    case ClassFilter::maximum:
      return is_maximum(c);
  }
  return false;
}

void scan_range(const ScanState& s, std::uint64_t begin, std::uint64_t end, bool keep, Chunk& out) {
  CheckOptions options;
  options.scan_limits = true;
  options.witnesses = false;
  for (std::uint64_t pos = begin; pos < end; ++pos) {
    const auto index = s.mode == "sample" ? sample_index(s.n, s.seed, pos) : pos + 1;
    const auto c = class_from_index(s.n, index);
    ++out.totals.visited;
    if (!passes(s.filter, c)) continue;
    auto report = check_bounds(c, "enumerate n=" + std::to_string(s.n) + " index=" + std::to_string(index), options);
    out.totals.add(index, c, report);
    if (keep) out.reports.emplace_back(index, std::move(report));
  }
}

}  // namespace

ScanState run_scan(const ScanConfig& config, std::optional<ScanState> resume,
                   const std::function<void(std::uint64_t, const Report&)>& sink) {
  ScanState state = initial_scan_state(config);
  if (resume) {
    if (resume->mode != state.mode || resume->n != state.n || resume->seed != state.seed ||
        resume->filter != state.filter || resume->total != state.total) {
      throw PreconditionError("checkpoint does not match the requested scan");
    }
    state = std::move(*resume);
  }
  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  const std::uint64_t block = std::max<std::uint64_t>(1, config.block);
  std::uint64_t stop = state.total;
  if (config.budget) stop = std::min(stop, state.next_index + *config.budget);

  while (state.next_index < stop) {
    const std::uint64_t begin = state.next_index;
    const std::uint64_t end = std::min(stop, begin + block);
    const std::uint64_t span = end - begin;
    const std::size_t parts = static_cast<std::size_t>(std::min<std::uint64_t>(workers, span));
    std::vector<Chunk> chunks(parts);
    auto bound = [&](std::size_t p) { return begin + span * p / parts; };
    if (parts == 1) {
      scan_range(state, begin, end, bool(sink), chunks[0]);
    } else {
      std::vector<std::exception_ptr> errors(parts);
      std::vector<std::thread> threads;
      threads.reserve(parts);
      for (std::size_t p = 0; p < parts; ++p) {
        threads.emplace_back([&, p] {
          try {
            scan_range(state, bound(p), bound(p + 1), bool(sink), chunks[p]);
          } catch (...) {
            errors[p] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& chunk : chunks) {
      state.totals.merge(chunk.totals);
      if (sink) {
        for (const auto& [index, report] : chunk.reports) sink(index, report);
      }
    }
    state.next_index = end;
    if (config.checkpoint_path) write_checkpoint(*config.checkpoint_path, state);
  }
  return state;
}

namespace {

nlohmann::ordered_json optional_json(const std::optional<long long>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<long long> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long long>();
}

constexpr std::array<CheckResult, 4> kResults = {CheckResult::pass, CheckResult::fail, CheckResult::not_applicable,
                                                 CheckResult::indeterminate};

nlohmann::ordered_json totals_json(const ScanTotals& t) {
  nlohmann::ordered_json j;
  j["visited"] = t.visited;
  j["matched"] = t.matched;
  j["extremal"] = t.extremal;
  j["maximum"] = t.maximum;
  auto& checks = j["checks"];
  checks = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    nlohmann::ordered_json counts;
    for (auto r : kResults) counts[std::string(to_string(r))] = t.checks[i][result_slot(r)];
    checks[std::string(kCheckNames[i])] = counts;
  }
  j["pajor_violations"] = t.pajor_violations;
  j["strong_shatter_mismatches"] = t.strong_shatter_mismatches;
  j["complex_dim_mismatches"] = t.complex_dim_mismatches;
  j["max_radon_excess"] = optional_json(t.max_radon_excess);
  j["max_dual_excess"] = optional_json(t.max_dual_excess);
  j["refutation_count"] = t.refutation_count;
  auto& refs = j["refutations"];
  refs = nlohmann::ordered_json::array();
  for (const auto& r : t.refutations) {
    refs.push_back({{"index", r.index}, {"concepts", r.concepts}, {"failed", r.failed}});
  }
  return j;
}

ScanTotals totals_from_json(const nlohmann::json& j) {
  ScanTotals t;
  t.visited = j.at("visited").get<std::uint64_t>();
  t.matched = j.at("matched").get<std::uint64_t>();
  t.extremal = j.at("extremal").get<std::uint64_t>();
  t.maximum = j.at("maximum").get<std::uint64_t>();
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    const auto& counts = j.at("checks").at(std::string(kCheckNames[i]));
    for (auto r : kResults) t.checks[i][result_slot(r)] = counts.at(std::string(to_string(r))).get<std::uint64_t>();
  }
  t.pajor_violations = j.at("pajor_violations").get<std::uint64_t>();
  t.strong_shatter_mismatches = j.at("strong_shatter_mismatches").get<std::uint64_t>();
  t.complex_dim_mismatches = j.at("complex_dim_mismatches").get<std::uint64_t>();
  t.max_radon_excess = optional_from(j.at("max_radon_excess"));
  t.max_dual_excess = optional_from(j.at("max_dual_excess"));
  t.refutation_count = j.at("refutation_count").get<std::uint64_t>();
  for (const auto& r : j.at("refutations")) {
    t.refutations.push_back({r.at("index").get<std::uint64_t>(), r.at("concepts").get<std::vector<std::string>>(),
                             r.at("failed").get<std::vector<std::string>>()});
  }
  return t;
}

}  // namespace

nlohmann::ordered_json to_json(const ScanState& s) {
  nlohmann::ordered_json j;
  j["mode"] = s.mode;
  j["n"] = s.n;
  j["filter"] = to_string(s.filter);
  j["seed"] = s.seed;
  j["total"] = s.total;
  j["next_index"] = s.next_index;
  j["totals"] = totals_json(s.totals);
  return j;
}

ScanState scan_state_from_json(const nlohmann::json& j) {
  try {
    ScanState s;
    s.mode = j.at("mode").get<std::string>();
    if (s.mode != "exhaustive" && s.mode != "sample") throw ParseError(0, "checkpoint: unknown mode " + s.mode);
    s.n = j.at("n").get<std::size_t>();
    s.filter = parse_filter(j.at("filter").get<std::string>());
    s.seed = j.at("seed").get<std::uint64_t>();
    s.total = j.at("total").get<std::uint64_t>();
    s.next_index = j.at("next_index").get<std::uint64_t>();
    s.totals = totals_from_json(j.at("totals"));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("checkpoint: ") + e.what());
  }
}

void write_checkpoint(const std::string& path, const ScanState& s) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw PreconditionError("cannot write checkpoint " + tmp);
    out << to_json(s).dump(2) << '\n';
    if (!out) throw PreconditionError("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

ScanState read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open checkpoint " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("checkpoint: ") + e.what());
  }
  return scan_state_from_json(j);
}

nlohmann::ordered_json summary_json(const ScanState& s) {
  auto j = to_json(s);
  j["complete"] = s.complete();
  j["refuted"] = s.totals.refutation_count > 0;
  return j;
}

}  // namespace shatter
