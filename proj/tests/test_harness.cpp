#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "shatter/convexity.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"
#include "shatter/known_results.hpp"
#include "shatter/report.hpp"
#include "shatter/scan.hpp"
#include "shatter/search.hpp"

using namespace shatter;

TEST_CASE("reports on the standard families") {
  const auto cube = check_bounds(gen_cube(3), "cube 3");
  CHECK_FALSE(cube.refuted());
  CHECK(cube.radon == 3);
  CHECK(cube.radon == static_cast<std::size_t>(ilog2(2 * 3 + 2)));
  for (auto r : cube.checks) CHECK((r == CheckResult::pass || r == CheckResult::not_applicable));
  CHECK(cube.check(Check::thm_c_maximum_lower) == CheckResult::not_applicable);

  const auto dented = check_bounds(gen_dented_cube(3), "dented cube 3");
  CHECK(dented.check(Check::thm_c_maximum_lower) == CheckResult::pass);
  CHECK(dented.radon == dented.vc + 1);

  const auto singletons = check_bounds(gen_singletons(6), "singletons 6");
  CHECK(singletons.check(Check::thm_b_upper) == CheckResult::not_applicable);
  CHECK(singletons.check(Check::thm_c_upper) == CheckResult::not_applicable);
  CHECK(singletons.check(Check::thm_d_extremal_upper) == CheckResult::not_applicable);
  CHECK(singletons.check(Check::thm_d_vcstar_le_r) == CheckResult::pass);
  CHECK(singletons.radon == 6);

  CHECK_THROWS_AS(check_bounds(ConceptClass(3), "empty"), PreconditionError);
}

TEST_CASE("radon limit makes dependent checks indeterminate") {
  CheckOptions options;
  options.radon_limit = 2;
  const auto r = check_bounds(gen_singletons(6), "singletons 6", options);
  CHECK_FALSE(r.radon_exact);
  CHECK(r.check(Check::thm_d_vcstar_le_r) == CheckResult::pass);

  options.radon_limit = 1;
  const auto dented = check_bounds(gen_dented_cube(3), "dented cube 3", options);
  CHECK(dented.check(Check::thm_c_maximum_lower) == CheckResult::indeterminate);
  CHECK(dented.check(Check::thm_c_upper) == CheckResult::indeterminate);
}

TEST_CASE("report records carry every field") {
  const auto j = to_json(check_bounds(gen_example_d1(), "example-d1"));
  for (const char* key : {"source", "n", "size", "vc", "vc_star", "radon", "radon_exact", "extremal", "maximum",
                          "checks", "witnesses"}) {
    CHECK(j.contains(key));
  }
  for (auto name : kCheckNames) CHECK(j["checks"].contains(std::string(name)));
  CHECK(j["witnesses"]["radon"].size() == 3);
  CHECK(j["witnesses"]["dual_shattered"].size() == 3);
}

TEST_CASE("class indices") {
  CHECK(class_from_index(2, 1).to_strings() == std::vector<std::string>{"00"});
  CHECK(class_from_index(2, 0b1010).to_strings() == std::vector<std::string>{"01", "11"});
  CHECK(class_from_index(2, 15).is_full_cube());
  CHECK_THROWS_AS(class_from_index(2, 0), PreconditionError);
  CHECK_THROWS_AS(class_from_index(2, 16), PreconditionError);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto i = sample_index(3, 7, s);
    CHECK(i != 0);
    CHECK(i < 256);
    CHECK(i == sample_index(3, 7, s));
  }
  CHECK(sample_index(6, 1, 0) != sample_index(6, 2, 0));
}

TEST_CASE("small exhaustive scans") {
  ScanConfig config;
  config.n = 2;
  const auto s = run_scan(config);
  CHECK(s.complete());
  CHECK(s.totals.visited == 15);
  CHECK(s.totals.refutation_count == 0);

  config.n = 3;
  config.filter = ClassFilter::extremal;
  std::size_t seen = 0;
  const auto e = run_scan(config, std::nullopt, [&](std::uint64_t, const Report& r) {
    ++seen;
    CHECK(r.extremal);
    CHECK(r.check(Check::thm_b_upper) == CheckResult::pass);
    CHECK(r.check(Check::thm_c_upper) == CheckResult::pass);
  });
  CHECK(seen == e.totals.matched);

  // The extremal count agrees with brute force.
  std::uint64_t expected = 0;
  for (std::uint64_t i = 1; i < 256; ++i) expected += oracle::extremal(class_from_index(3, i).to_strings(), 3);
  CHECK(e.totals.matched == expected);
}

TEST_CASE("maximum classes at n = 4 other than the cube satisfy vc+1 <= r") {
  ScanConfig config;
  config.n = 4;
  config.filter = ClassFilter::maximum;
  std::size_t cube_seen = 0;
  const auto s = run_scan(config, std::nullopt, [&](std::uint64_t index, const Report& r) {
    if (index == 0xFFFF) {
      ++cube_seen;
      CHECK(r.check(Check::thm_c_maximum_lower) == CheckResult::not_applicable);
    } else {
      CHECK(r.check(Check::thm_c_maximum_lower) == CheckResult::pass);
      CHECK(r.radon >= r.vc + 1);
    }
  });
  CHECK(cube_seen == 1);
  const auto idx = static_cast<std::size_t>(Check::thm_c_maximum_lower);
  CHECK(s.totals.checks[idx][0] == s.totals.matched - 1);
}

TEST_CASE("scan totals do not depend on workers or block size") {
  ScanConfig config;
  config.n = 3;
  config.block = 1000;
  const auto one = run_scan(config);
  config.workers = 3;
  config.block = 17;
  const auto three = run_scan(config);
  CHECK(one.totals == three.totals);
  CHECK(summary_json(one).dump() == summary_json(three).dump());
}

TEST_CASE("budget, checkpoint and resume") {
  const auto path = (std::filesystem::temp_directory_path() / "shatter_harness_checkpoint.json").string();
  ScanConfig config;
  config.n = 3;
  config.block = 10;
  const auto full = run_scan(config);

  config.budget = 95;
  config.checkpoint_path = path;
  const auto partial = run_scan(config);
  CHECK_FALSE(partial.complete());
  CHECK(partial.next_index == 95);
  const auto loaded = read_checkpoint(path);
  CHECK(loaded == partial);

  config.budget.reset();
  const auto resumed = run_scan(config, loaded);
  CHECK(resumed == full);
  CHECK(summary_json(resumed).dump() == summary_json(full).dump());

  ScanConfig other = config;
  other.n = 2;
  CHECK_THROWS_AS(run_scan(other, loaded), PreconditionError);
  std::filesystem::remove(path);
}

TEST_CASE("sampled scans") {
  ScanConfig config;
  config.n = 6;
  config.samples = 40;
  config.seed = 9;
  const auto a = run_scan(config);
  CHECK(a.totals.visited == 40);
  CHECK(a.mode == "sample");
  const auto b = run_scan(config);
  CHECK(a == b);
  config.n = 7;
  CHECK_THROWS_AS(run_scan(config), PreconditionError);
  ScanConfig exhaustive;
  exhaustive.n = 5;
  CHECK_THROWS_AS(run_scan(exhaustive), PreconditionError);
}

TEST_CASE("refutation bookkeeping") {
  ScanTotals t;
  Report fake;
  fake.size = 3;
  fake.shatter_count = 3;
  fake.strong_shatter_count = 3;
  fake.extremal = true;
  fake.checks.fill(CheckResult::pass);
  fake.checks[static_cast<std::size_t>(Check::thm_c_upper)] = CheckResult::fail;
  const auto c = ConceptClass::from_strings({"00", "01", "10"});
  for (std::uint64_t i = 0; i < 20; ++i) t.add(i, c, fake);
  CHECK(t.refutation_count == 20);
  CHECK(t.refutations.size() == ScanTotals::kMaxRefutations);
  CHECK(t.refutations.front().failed == std::vector<std::string>{"thm_c_upper"});
}

TEST_CASE("search with zero budget returns the initial class") {
  SearchConfig config;
  config.d = 2;
  config.seed = 5;
  config.budget = 0;
  const auto s = stochastic_search(config);
  CHECK(s.iterations == 0);
  CHECK(s.current == search_initial_class(config));
  CHECK(s.best == s.current);
}

TEST_CASE("search finds an extremal vc-1 class with r = 3") {
  SearchConfig config;
  config.goal = SearchGoal::radon;
  config.d = 1;
  config.seed = 1;
  config.budget = 500;
  const auto s = stochastic_search(config);
  CHECK(s.best_objective == 1);
  CHECK(is_extremal(s.best));
  CHECK(vc(s.best) == 1);
  CHECK(radon_number(s.best).value == 3);
  CHECK_FALSE(s.refuted());
}

TEST_CASE("dual-vc search keeps its constraint and is deterministic") {
  SearchConfig config;
  config.goal = SearchGoal::dual_vc;
  config.d = 1;
  config.seed = 2;
  config.budget = 3000;
  const auto a = stochastic_search(config);
  const auto b = stochastic_search(config);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(is_extremal(a.best));
  CHECK(vc(a.best) == 1);
  CHECK(a.best_objective <= 1);
  CHECK(a.best_objective == static_cast<long long>(vc_star(a.best)) - 2);

  const auto many = stochastic_search_many(config, 4, 2);
  REQUIRE(many.size() == 4);
  CHECK(to_json(many[0]).dump() == to_json(a).dump());
  for (std::size_t i = 0; i < many.size(); ++i) CHECK(many[i].seed == config.seed + i);
}

TEST_CASE("known results") {
  const auto results = verify_known_results();
  CHECK(results.size() >= 20);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.actual);
    CHECK(r.pass);
  }
}
