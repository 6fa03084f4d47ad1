#include "shatter/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "shatter/arrangement.hpp"
#include "shatter/cube_complex.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"
#include "shatter/known_results.hpp"
#include "shatter/report.hpp"
#include "shatter/scan.hpp"
#include "shatter/search.hpp"

namespace shatter::cli {

std::size_t default_workers() {
  if (const char* env = std::getenv("SHATTER_WORKERS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

template <class F>
auto with_input(const std::string& path, Io& io, F&& fn) {
  if (path == "-") return fn(io.in);
  std::ifstream file(path);
  if (!file) throw PreconditionError("cannot open " + path);
  return fn(file);
}

void with_output(const std::string& path, Io& io, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(io.out);
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw PreconditionError("cannot write " + path);
  fn(file);
  if (!file) throw PreconditionError("write failed: " + path);
}

ConceptClass load_class(const std::string& path, Io& io) {
  try {
    return with_input(path, io, [](std::istream& s) { return read_class(s); });
  } catch (const ParseError& e) {
    throw ParseError(e.line(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

// ---- analyze ----------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  bool records = false;
  std::optional<std::size_t> radon_limit;
};

int analyze(const AnalyzeArgs& a, Io& io) {
  const auto c = load_class(a.file, io);
  if (c.empty()) throw PreconditionError("analyze: the class is empty");
  CheckOptions options;
  options.radon_limit = a.radon_limit;
  const auto report = check_bounds(c, a.file == "-" ? "stdin" : a.file, options);
  if (a.records) {
    io.out << to_record(report) << '\n';
  } else {
    print_table(io.out, report);
  }
  if (report.refuted()) {
    io.err << "refutation: failed checks:";
    for (const auto& name : report.failed_checks()) io.err << ' ' << name;
    io.err << '\n';
    return kExitRefuted;
  }
  return report.radon_exact ? kExitOk : kExitResource;
}

// ---- generate ---------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::vector<std::string> params;
  std::string output = "-";
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> random;
  std::optional<std::string> export_arrangement;
};

std::size_t int_param(const GenerateArgs& g, std::size_t i, const char* what) {
  if (i >= g.params.size()) throw PreconditionError(g.family + ": missing parameter " + what);
  const auto& s = g.params[i];
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw PreconditionError(g.family + ": " + what + " must be a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

void expect_params(const GenerateArgs& g, std::size_t count) {
  if (g.params.size() != count) {
    throw PreconditionError(g.family + ": expected " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(g.params.size()));
  }
}

int generate(const GenerateArgs& g, Io& io) {
  ConceptClass c;
  std::optional<Arrangement> arrangement;
  std::string source = g.family;
  if (g.family == "cube" || g.family == "dented-cube" || g.family == "singletons") {
    expect_params(g, 1);
    const auto k = int_param(g, 0, g.family == "singletons" ? "n" : "d");
    c = g.family == "cube" ? gen_cube(k) : g.family == "dented-cube" ? gen_dented_cube(k) : gen_singletons(k);
    source += " " + g.params[0];
  } else if (g.family == "example-d1") {
    expect_params(g, 0);
    c = gen_example_d1();
  } else if (g.family == "arrangement") {
    if (!g.random.empty()) {
      expect_params(g, 0);
      if (!g.seed) throw PreconditionError("arrangement --random requires --seed");
      arrangement = gen_random_generic_arrangement(g.random[0], g.random[1], *g.seed);
      source += " random d=" + std::to_string(g.random[0]) + " n=" + std::to_string(g.random[1]) +
                " seed=" + std::to_string(*g.seed);
    } else {
      expect_params(g, 1);
      try {
        arrangement = with_input(g.params[0], io, [](std::istream& s) { return read_arrangement(s); });
      } catch (const ParseError& e) {
        throw ParseError(e.line(), g.params[0] + ": " + e.what());
      }
      source += " " + g.params[0];
    }
  } else if (g.family == "simplex-arrangement") {
    expect_params(g, 1);
    arrangement = gen_simplex_arrangement(int_param(g, 0, "d"));
    source += " " + g.params[0];
  } else if (g.family == "shattered-points") {
    expect_params(g, 1);
    arrangement = gen_shattered_points_arrangement(int_param(g, 0, "d"), g.seed.value_or(1));
    source += " " + g.params[0];
  } else {
    throw PreconditionError("unknown family '" + g.family +
                            "' (cube, dented-cube, singletons, example-d1, arrangement, simplex-arrangement, "
                            "shattered-points)");
  }
  if (arrangement) {
    c = gen_arrangement_class(*arrangement);
    if (g.export_arrangement) {
      with_output(*g.export_arrangement, io, [&](std::ostream& s) { write_arrangement(s, *arrangement); });
    }
  } else if (g.export_arrangement) {
    throw PreconditionError("--export-arrangement only applies to arrangement families");
  }
  with_output(g.output, io, [&](std::ostream& s) { write_class(s, c, source); });
  return kExitOk;
}

// ---- enumerate --------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  std::string filter = "all";
  std::size_t workers = 0;
  std::optional<std::string> checkpoint;
  std::optional<std::string> resume;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  std::uint64_t block = 4096;
  bool records = false;
  std::optional<std::string> summary;
  std::string dump_dir = ".";
};

void print_summary(std::ostream& out, const ScanState& s) {
  const auto& t = s.totals;
  out << "mode:            " << s.mode << " n=" << s.n << " filter=" << to_string(s.filter);
  if (s.mode == "sample") out << " seed=" << s.seed;
  out << '\n'
      << "progress:        " << s.next_index << '/' << s.total << (s.complete() ? "" : " (incomplete)") << '\n'
      << "visited:         " << t.visited << '\n'
      << "matched:         " << t.matched << '\n'
      << "extremal:        " << t.extremal << '\n'
      << "maximum:         " << t.maximum << '\n'
      << "pajor failures:  " << t.pajor_violations << '\n'
      << "strong mismatch: " << t.strong_shatter_mismatches << '\n'
      << "dim mismatch:    " << t.complex_dim_mismatches << '\n';
  if (t.max_radon_excess) out << "max r-2vc:       " << *t.max_radon_excess << '\n';
  if (t.max_dual_excess) out << "max vc*-2vc:     " << *t.max_dual_excess << '\n';
  out << "checks (pass/fail/n-a/indeterminate):\n";
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    out << "  " << kCheckNames[i];
    for (std::size_t pad = kCheckNames[i].size(); pad < 22; ++pad) out << ' ';
    out << t.checks[i][0] << '/' << t.checks[i][1] << '/' << t.checks[i][2] << '/' << t.checks[i][3] << '\n';
  }
  out << "refutations:     " << t.refutation_count << '\n';
}

int enumerate(const EnumerateArgs& a, Io& io) {
  ScanConfig config;
  config.n = a.n;
  config.filter = parse_filter(a.filter);
  config.samples = a.sample;
  if (a.sample && !a.seed) throw PreconditionError("enumerate --sample requires --seed");
  config.seed = a.seed.value_or(0);
  config.workers = a.workers ? a.workers : default_workers();
  config.block = a.block;
  config.budget = a.budget;
  config.checkpoint_path = a.checkpoint;
  std::optional<ScanState> resume;
  if (a.resume) resume = read_checkpoint(*a.resume);
  if (a.resume && !config.checkpoint_path) config.checkpoint_path = a.resume;

  std::function<void(std::uint64_t, const Report&)> sink;
  if (a.records) sink = [&](std::uint64_t, const Report& r) { io.out << to_record(r) << '\n'; };
  const auto state = run_scan(config, std::move(resume), sink);

  const auto summary = summary_json(state);
  if (a.records) {
    io.out << summary.dump() << '\n';
  } else {
    print_summary(io.out, state);
  }
  if (a.summary) with_output(*a.summary, io, [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

  if (state.totals.refutation_count > 0) {
    std::filesystem::create_directories(a.dump_dir);
    for (const auto& r : state.totals.refutations) {
      const auto path = std::filesystem::path(a.dump_dir) /
                        ("refutation-n" + std::to_string(state.n) + "-" + std::to_string(r.index) + ".txt");
      std::ofstream file(path);
      std::vector<std::string_view> rows(r.concepts.begin(), r.concepts.end());
      std::string failed;
      for (const auto& f : r.failed) failed += " " + f;
      write_class(file, ConceptClass::from_strings(rows, state.n), "failed:" + failed);
      io.err << "refutation: index " << r.index << " written to " << path.string() << '\n';
    }
    return kExitRefuted;
  }
  if (!state.complete()) {
    io.err << "budget exhausted at " << state.next_index << '/' << state.total;
    if (config.checkpoint_path) io.err << "; resume with --resume " << *config.checkpoint_path;
    io.err << '\n';
    return kExitResource;
  }
  return kExitOk;
}

// ---- search -----------------------------------------------------------

struct SearchArgs {
  std::string goal;
  std::size_t d = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::size_t n = 0;
  std::size_t max_size = 0;
  std::size_t restarts = 1;
  std::size_t workers = 0;
  bool records = false;
  std::optional<std::string> output;
};

int search(const SearchArgs& a, Io& io) {
  SearchConfig config;
  config.goal = parse_goal(a.goal);
  config.d = a.d;
  config.seed = a.seed;
  config.budget = a.budget;
  config.n = a.n;
  config.max_size = a.max_size;
  const auto results = stochastic_search_many(config, a.restarts, a.workers ? a.workers : default_workers());
  const SearchState* best = &results.front();
  for (const auto& r : results) {
    if (r.best_objective > best->best_objective) best = &r;
  }
  if (a.records) {
    for (const auto& r : results) io.out << to_json(r).dump() << '\n';
  } else {
    for (const auto& r : results) {
      io.out << "seed " << r.seed << ": best objective " << r.best_objective << " (|C|=" << r.best.size()
             << ", iterations " << r.iterations << ")\n";
    }
    io.out << "best class (seed " << best->seed << ", " << to_string(best->goal) << " objective "
           << best->best_objective << "):\n";
    write_class(io.out, best->best);
  }
  if (a.output) {
    std::ostringstream comment;
    comment << "search goal=" << to_string(best->goal) << " d=" << best->d << " seed=" << best->seed
            << " objective=" << best->best_objective;
    with_output(*a.output, io, [&](std::ostream& s) { write_class(s, best->best, comment.str()); });
  }
  bool refuted = false;
  for (const auto& r : results) refuted = refuted || r.refuted();
  if (refuted) {
    io.err << "refutation: an extremal class exceeded the objective bound of +1\n";
    return kExitRefuted;
  }
  return kExitOk;
}

// ---- verify-paper / complex ------------------------------------------

int verify(bool records, Io& io) {
  const auto results = verify_known_results();
  if (records) {
    for (const auto& item : to_json(results)) io.out << item.dump() << '\n';
  } else {
    print_known_results(io.out, results);
  }
  for (const auto& r : results) {
    if (!r.pass) return kExitRefuted;
  }
  return kExitOk;
}

int complex(const std::string& file, const std::string& output, Io& io) {
  const auto c = load_class(file, io);
  if (c.empty()) throw PreconditionError("complex: the class is empty");
  const auto q = enumerate_cubes(c);
  with_output(output, io, [&](std::ostream& s) { export_complex(q, s); });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Shattering, convexity and Radon numbers of finite concept classes"};
  app.name("shatter");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Metrics and bound checks for a class file");
  analyze_cmd->add_option("file", analyze_args.file, "Class file, or - for stdin")->required();
  analyze_cmd->add_flag("--records", analyze_args.records, "Emit one JSON record instead of a table");
  analyze_cmd->add_option("--radon-limit", analyze_args.radon_limit, "Stop the Radon search at this size")
      ->check(CLI::PositiveNumber);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a class file for a standard family");
  gen_cmd->add_option("family", gen_args.family,
                      "cube | dented-cube | singletons | example-d1 | arrangement | simplex-arrangement | "
                      "shattered-points")
      ->required();
  gen_cmd->add_option("params", gen_args.params, "Family parameters (d, n, or an arrangement file)");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output path, - for stdout");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed for random or perturbed arrangements");
  gen_cmd->add_option("--random", gen_args.random, "Random generic arrangement: D N")->expected(2);
  gen_cmd->add_option("--export-arrangement", gen_args.export_arrangement, "Also write the arrangement file");

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "Scan all (or sampled) classes over {0,1}^n");
  enum_cmd->add_option("--n", enum_args.n, "Domain size")->required()->check(CLI::Range(1, 6));
  enum_cmd->add_option("--filter", enum_args.filter, "all | extremal | maximum")
      ->check(CLI::IsMember({"all", "extremal", "maximum"}));
  enum_cmd->add_option("--workers", enum_args.workers, "Worker threads (default: SHATTER_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--checkpoint", enum_args.checkpoint, "Write progress here after every block");
  enum_cmd->add_option("--resume", enum_args.resume, "Continue from a checkpoint file");
  enum_cmd->add_option("--budget", enum_args.budget, "Process at most this many classes");
  enum_cmd->add_option("--sample", enum_args.sample, "Draw this many seeded random classes")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--seed", enum_args.seed, "Seed for --sample");
  enum_cmd->add_option("--block", enum_args.block, "Classes per checkpoint block")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--records", enum_args.records, "Emit one JSON record per class and a JSON summary");
  enum_cmd->add_option("--summary", enum_args.summary, "Write the JSON summary to this path");
  enum_cmd->add_option("--dump-dir", enum_args.dump_dir, "Directory for refuting class files");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Local search for extremal classes with a large objective");
  search_cmd->add_option("--goal", search_args.goal, "dual-vc | radon")
      ->required()
      ->check(CLI::IsMember({"dual-vc", "vc-star", "radon"}));
  search_cmd->add_option("--d", search_args.d, "Required VC dimension")->required()->check(CLI::Range(1, 16));
  search_cmd->add_option("--seed", search_args.seed, "Random seed")->required();
  search_cmd->add_option("--budget", search_args.budget, "Iterations per seed")->required();
  search_cmd->add_option("--n", search_args.n, "Domain size (default 4(d+1))")->check(CLI::Range(2, 64));
  search_cmd->add_option("--max-size", search_args.max_size, "Cap on |C| (default 4n)");
  search_cmd->add_option("--restarts", search_args.restarts, "Independent seeds seed, seed+1, ...")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--workers", search_args.workers, "Threads for restarts")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--records", search_args.records, "Emit JSON records");
  search_cmd->add_option("-o,--output", search_args.output, "Write the best class here");

  bool verify_records = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the published values for the standard examples");
  verify_cmd->add_flag("--records", verify_records, "Emit JSON records");

  std::string complex_file;
  std::string complex_output = "-";
  auto* complex_cmd = app.add_subcommand("complex", "Export the cube complex of a class");
  complex_cmd->add_option("file", complex_file, "Class file, or - for stdin")->required();
  complex_cmd->add_option("-o,--output", complex_output, "Output path, - for stdout");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("shatter");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_args, io);
    if (*gen_cmd) return generate(gen_args, io);
    if (*enum_cmd) return enumerate(enum_args, io);
    if (*search_cmd) return search(search_args, io);
    if (*verify_cmd) return verify(verify_records, io);
    if (*complex_cmd) return complex(complex_file, complex_output, io);
  } catch (const ParseError& e) {
    err << "shatter: input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "shatter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "shatter: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvariantViolation& e) {
    err << "shatter: internal invariant violated: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const std::exception& e) {
    err << "shatter: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shatter::cli
