#include "shatter/known_results.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "shatter/arrangement.hpp"
#include "shatter/convexity.hpp"
#include "shatter/cube_complex.hpp"
#include "shatter/generators.hpp"
#include "shatter/relabel.hpp"
#include "shatter/report.hpp"

namespace shatter {

namespace {

std::string metrics(const ConceptClass& c) {
  std::ostringstream s;
  s << "vc=" << vc(c) << " vc*=" << vc_star(c) << " r=" << radon_number(c).value;
  return s.str();
}

std::string metrics(std::size_t v, std::size_t vs, std::size_t r) {
  std::ostringstream s;
  s << "vc=" << v << " vc*=" << vs << " r=" << r;
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string cube_text(const Cube& q) { return "Y=" + format_coords(q.free) + " f=" + q.fixed.to_string(); }

std::string counts_text(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

class Collector {
 public:
  void add(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    items_.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
  // Runs `fn` and records an exception as a failed item.
  template <class F>
  void guarded(const std::string& name, const std::string& expected, F&& fn) {
    try {
      add(name, expected, fn());
    } catch (const std::exception& e) {
      add(name, expected, std::string("error: ") + e.what());
    }
  }
  std::vector<KnownResult> take() { return std::move(items_); }

 private:
  std::vector<KnownResult> items_;
};

}  // namespace

std::vector<KnownResult> verify_known_results() {
  Collector out;

  out.guarded("singletons n=10 metrics", metrics(1, 1, 10), [] { return metrics(gen_singletons(10)); });
  out.guarded("singletons n=4 extremal", "no", [] { return yes_no(is_extremal(gen_singletons(4))); });
  out.guarded("singletons n=4 shatters {1,2}", "no", [] { return yes_no(shatters(gen_singletons(4), {0, 1})); });
  out.guarded("singletons n=4 all concepts independent", "yes", [] {
    const auto c = gen_singletons(4);
    return yes_no(is_radon_independent(c, c.concepts()));
  });
  out.guarded("singletons n=6 report", "thm_b_upper=n/a thm_d_vcstar_le_r=pass", [] {
    const auto r = check_bounds(gen_singletons(6), "singletons 6");
    return "thm_b_upper=" + std::string(to_string(r.check(Check::thm_b_upper))) +
           " thm_d_vcstar_le_r=" + std::string(to_string(r.check(Check::thm_d_vcstar_le_r)));
  });
  out.guarded("singletons n=3 complex", "counts=(3) maximal=3", [] {
    const auto q = enumerate_cubes(gen_singletons(3));
    return "counts=" + counts_text(q.counts()) + " maximal=" + std::to_string(q.maximal.size());
  });

  out.guarded("cube d=2 radon", "r=2", [] { return "r=" + std::to_string(radon_number(gen_cube(2)).value); });
  out.guarded("cube d=3 metrics", metrics(3, 1, 3), [] { return metrics(gen_cube(3)); });
  out.guarded("cube d=7 metrics", metrics(7, 2, 4), [] { return metrics(gen_cube(7)); });
  out.guarded("cube d=3 report", "refuted=no", [] {
    return "refuted=" + yes_no(check_bounds(gen_cube(3), "cube 3").refuted());
  });

  for (std::size_t d = 1; d <= 3; ++d) {
    const auto log_d1 = static_cast<std::size_t>(ilog2(d + 1));
    out.guarded("dented cube d=" + std::to_string(d) + " metrics", metrics(d, log_d1, d + 1),
                [d] { return metrics(gen_dented_cube(d)); });
    out.guarded("dented cube d=" + std::to_string(d) + " maximum", "yes",
                [d] { return yes_no(is_maximum(gen_dented_cube(d))); });
  }
  out.guarded("dented cube d=3 maximum lower bound", "pass r=4", [] {
    const auto r = check_bounds(gen_dented_cube(3), "dented cube 3");
    return std::string(to_string(r.check(Check::thm_c_maximum_lower))) + " r=" + std::to_string(r.radon);
  });

  const auto ex = gen_example_d1();
  out.guarded("example-d1 metrics", metrics(1, 3, 3), [&] { return metrics(ex); });
  out.guarded("example-d1 maximum", "yes", [&] { return yes_no(is_maximum(ex)); });
  out.guarded("example-d1 invariant under permutations of the pairs {1,2},{3,4},{5,6},{7,8}", "24/24", [&] {
    std::vector<std::size_t> pairs = {0, 1, 2, 3};
    std::size_t fixed = 0, total = 0;
    do {
      Relabeling r = Relabeling::identity(8);
      for (std::size_t k = 0; k < 4; ++k) {
        r.permutation[2 * k] = 2 * pairs[k];
        r.permutation[2 * k + 1] = 2 * pairs[k] + 1;
      }
      ++total;
      if (apply(r, ex) == ex) ++fixed;
    } while (std::next_permutation(pairs.begin(), pairs.end()));
    return std::to_string(fixed) + "/" + std::to_string(total);
  });
  out.guarded("example-d1 dually shatters every 3 of the 4 far concepts", "4/4", [&] {
    const auto far = example_d1_far_concepts();
    const auto d = dual(ex);
    std::size_t hits = 0;
    for (std::size_t skip = 0; skip < far.size(); ++skip) {
      CoordSet picked;
      for (std::size_t i = 0; i < far.size(); ++i) {
        if (i != skip) picked.push_back(*ex.index_of(far[i]));
      }
      std::sort(picked.begin(), picked.end());
      if (shatters(d, picked)) ++hits;
    }
    return std::to_string(hits) + "/" + std::to_string(far.size());
  });
  out.guarded("example-d1 every 2-set minimal non-shattered", "28/28", [&] {
    const auto m = minimal_non_shattered_sets(ex);
    const auto pairs = std::count_if(m.begin(), m.end(), [](const CoordSet& s) { return s.size() == 2; });
    return std::to_string(pairs) + "/28";
  });

  const auto fig = gen_square_and_edge();
  out.guarded("square-and-edge extremal", "yes", [&] { return yes_no(is_extremal(fig)); });
  out.guarded("square-and-edge shatters {1,2}", "yes", [&] { return yes_no(shatters(fig, {0, 1})); });
  out.guarded("square-and-edge shattered sets", "{} {1} {2} {3} {1,2}", [&] {
    std::vector<std::string> parts;
    for (const auto& s : shattered_sets(fig)) parts.push_back(format_coords(s));
    return join(parts);
  });
  out.guarded("square-and-edge cube counts", "(5,5,1)",
              [&] { return counts_text(enumerate_cubes(fig).counts()); });
  out.guarded("square-and-edge maximal cubes", "Y={3} f={1:0,2:0}; Y={1,2} f={3:0}", [&] {
    std::vector<std::string> parts;
    for (const auto& q : enumerate_cubes(fig).maximal) parts.push_back(cube_text(q));
    return join(parts, "; ");
  });
  out.guarded("square-and-edge strongly shattered = shattered", "yes",
              [&] { return yes_no(strongly_shattered_sets(fig) == shattered_sets(fig)); });

  const auto lines = gen_three_lines_arrangement();
  const auto lines_class = gen_arrangement_class(lines);
  out.guarded("three-lines arrangement generic", "yes", [&] { return yes_no(is_generic(lines)); });
  out.guarded("three-lines arrangement cells", "7", [&] { return std::to_string(lines_class.size()); });
  out.guarded("three-lines arrangement metrics", metrics(2, 1, 3), [&] { return metrics(lines_class); });
  out.guarded("three-lines arrangement maximum", "yes", [&] { return yes_no(is_maximum(lines_class)); });
  out.guarded("three-lines radon witness independent", "size=3 independent=yes", [&] {
    const auto w = radon_number(lines_class).witness;
    return "size=" + std::to_string(w.concepts.size()) +
           " independent=" + yes_no(is_radon_independent(lines_class, w.concepts));
  });
  out.guarded("random generic arrangement d=2 n=6 cells", "22",
              [] { return std::to_string(gen_arrangement_class(gen_random_generic_arrangement(2, 6, 7)).size()); });

  out.guarded("simplex arrangement d=1 cells", "3",
              [] { return std::to_string(gen_arrangement_class(gen_simplex_arrangement(1)).size()); });
  out.guarded("simplex arrangement d=2", "cells=7 dented-cube-2=yes r=3", [] {
    const auto c = gen_arrangement_class(gen_simplex_arrangement(2));
    return "cells=" + std::to_string(c.size()) + " dented-cube-2=" + yes_no(isomorphic(c, gen_dented_cube(2))) +
           " r=" + std::to_string(radon_number(c).value);
  });
  out.guarded("simplex arrangement d=3", "cells=15 r=4", [] {
    const auto c = gen_arrangement_class(gen_simplex_arrangement(3));
    return "cells=" + std::to_string(c.size()) + " r=" + std::to_string(radon_number(c).value);
  });

  out.guarded("shattered-points arrangement d=1", metrics(1, 2, 2) + " maximum=yes", [] {
    const auto c = gen_arrangement_class(gen_shattered_points_arrangement(1));
    return metrics(c) + " maximum=" + yes_no(is_maximum(c));
  });
  out.guarded("shattered-points arrangement d=2", metrics(2, 3, 3) + " maximum=yes", [] {
    const auto c = gen_arrangement_class(gen_shattered_points_arrangement(2));
    return metrics(c) + " maximum=" + yes_no(is_maximum(c));
  });

  out.guarded("shattering witness cube d=3", "3",
              [] { return std::to_string(radon_witness_from_shattering(gen_cube(3)).concepts.size()); });
  out.guarded("shattering witness cube d=7", "4",
              [] { return std::to_string(radon_witness_from_shattering(gen_cube(7)).concepts.size()); });
  out.guarded("maximum-class witness dented cube d=2", "011 101 110",
              [] { return join(radon_witness_maximum(gen_dented_cube(2)).sorted_strings()); });
  out.guarded("maximum-class witness dented cube d=3", "4",
              [] { return std::to_string(radon_witness_maximum(gen_dented_cube(3)).concepts.size()); });

  return out.take();
}

void print_known_results(std::ostream& out, const std::vector<KnownResult>& results) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name << ": expected " << r.expected;
    if (!r.pass) out << ", got " << r.actual;
    out << '\n';
    if (r.pass) ++passed;
  }
  out << passed << '/' << results.size() << " known results reproduced\n";
}

nlohmann::ordered_json to_json(const std::vector<KnownResult>& results) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    j.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
  }
  return j;
}

}  // namespace shatter
