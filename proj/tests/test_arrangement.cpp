#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "shatter/arrangement.hpp"
#include "shatter/convexity.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"
#include "shatter/relabel.hpp"

using namespace shatter;

namespace {

// Cells of a planar arrangement found by probing just off every vertex in
// the four wedges, and far out along every line. Every cell of a generic
// planar arrangement with at least two lines touches a vertex.
std::set<std::string> probe_cells_2d(const Arrangement& a) {
  std::set<std::string> out;
  const Rational eps{1, 1000000};
  auto probe = [&](const std::vector<Rational>& x) {
    if (auto s = sign_vector_at(a, x)) out.insert(s->to_string());
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto& p = a[i];
      const auto& q = a[j];
      const Rational det = p.normal[0] * q.normal[1] - p.normal[1] * q.normal[0];
      REQUIRE(det != 0);
      const Rational x = (p.offset * q.normal[1] - q.offset * p.normal[1]) / det;
      const Rational y = (p.normal[0] * q.offset - q.normal[0] * p.offset) / det;
      const std::vector<Rational> dp = {-p.normal[1], p.normal[0]};
      const std::vector<Rational> dq = {-q.normal[1], q.normal[0]};
      for (int s : {-1, 1}) {
        for (int t : {-1, 1}) {
          probe({x + eps * (s * dp[0] + t * dq[0]), y + eps * (s * dp[1] + t * dq[1])});
        }
      }
    }
  }
  return out;
}

std::set<std::string> as_set(const ConceptClass& c) {
  const auto r = c.to_strings();
  return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(format_rational(Rational(-13, 10)) == "-13/10");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("arrangement file round trip and errors") {
  const auto a = gen_three_lines_arrangement();
  std::ostringstream out;
  write_arrangement(out, a);
  CHECK(parse_arrangement(out.str()) == a);
  CHECK_THROWS_AS(parse_arrangement("2 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("2 1\n0 0 1\n"), std::exception);
}

TEST_CASE("three lines") {
  const auto a = gen_three_lines_arrangement();
  CHECK(is_generic(a));
  const auto c = gen_arrangement_class(a);
  CHECK(c.size() == 7);
  CHECK_FALSE(c.contains(Concept::from_string("001")));
  CHECK(vc(c) == 2);
  CHECK(vc_star(c) == 1);
  CHECK(radon_number(c).value == 3);
  CHECK(is_maximum(c));
  CHECK(as_set(c) == probe_cells_2d(a));
}

TEST_CASE("sign vectors at points") {
  const auto a = gen_simplex_arrangement(2);
  const std::vector<Rational> inside = {Rational(1, 4), Rational(1, 4)};
  CHECK(sign_vector_at(a, inside)->to_string() == "111");
  const std::vector<Rational> on_axis = {Rational(0), Rational(1, 2)};
  CHECK_FALSE(sign_vector_at(a, on_axis).has_value());
  CHECK(sign_pattern_feasible(a, Concept::from_string("111")));
  CHECK_FALSE(sign_pattern_feasible(a, Concept::from_string("000")));
  CHECK_THROWS_AS(sign_pattern_feasible(a, Concept::from_string("11")), PreconditionError);
}

TEST_CASE("genericity") {
  CHECK_FALSE(is_generic(Arrangement(2, {{{1, 0}, 0}, {{2, 0}, 1}})));                    // parallel
  CHECK_FALSE(is_generic(Arrangement(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}})));       // concurrent
  CHECK(is_generic(Arrangement(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}})));
}

TEST_CASE("simplex arrangements") {
  CHECK(gen_arrangement_class(gen_simplex_arrangement(1)).size() == 3);
  const auto c2 = gen_arrangement_class(gen_simplex_arrangement(2));
  CHECK(c2.size() == 7);
  CHECK(isomorphic(c2, gen_dented_cube(2)));
  CHECK(radon_number(c2).value == 3);
  const auto c3 = gen_arrangement_class(gen_simplex_arrangement(3));
  CHECK(c3.size() == 15);
  CHECK(radon_number(c3).value == 4);
}

TEST_CASE("shattered-points arrangements") {
  const auto a1 = gen_shattered_points_arrangement(1);
  CHECK(a1.size() == 4);
  const auto c1 = gen_arrangement_class(a1);
  CHECK(vc(c1) == 1);
  CHECK(vc_star(c1) == 2);
  CHECK(radon_number(c1).value == 2);
  CHECK(is_maximum(c1));

  const auto a2 = gen_shattered_points_arrangement(2);
  CHECK(a2.size() == 8);
  CHECK(is_generic(a2));
  const auto c2 = gen_arrangement_class(a2);
  CHECK(vc(c2) == 2);
  CHECK(vc_star(c2) == 3);
  CHECK(radon_number(c2).value == 3);
  CHECK(is_maximum(c2));
  CHECK(as_set(c2) == probe_cells_2d(a2));

  // Hyperplane S has exactly the vertices of S on its '+' side.
  const auto vertices = simplex_vertices(2);
  for (std::size_t s = 0; s < a2.size(); ++s) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      const auto sign = sign_vector_at(a2, vertices[j]);
      REQUIRE(sign.has_value());
      CHECK(sign->test(s) == (((s >> j) & 1U) != 0));
    }
  }
}

TEST_CASE("random generic arrangements are maximum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto a = gen_random_generic_arrangement(2, n, seed);
      CHECK(is_generic(a));
      CHECK(a == gen_random_generic_arrangement(2, n, seed));
      const auto c = gen_arrangement_class(a);
      CHECK(c.size() == oracle::binomial_sum(n, 2));
      if (n >= 2) CHECK(as_set(c) == probe_cells_2d(a));
    }
  }
  CHECK(gen_arrangement_class(gen_random_generic_arrangement(2, 6, 99)).size() == 22);
  CHECK(gen_arrangement_class(gen_random_generic_arrangement(3, 5, 1)).size() == oracle::binomial_sum(5, 3));
}

TEST_CASE("generators") {
  CHECK(gen_cube(4).size() == 16);
  CHECK(gen_dented_cube(4).size() == 31);
  CHECK(gen_singletons(5).size() == 5);
  CHECK(gen_example_d1().size() == 9);
  CHECK(gen_ball(Concept::from_string("0000"), 1).size() == 5);
  CHECK_THROWS_AS(gen_cube(0), PreconditionError);
  CHECK_THROWS_AS(gen_cube(21), PreconditionError);
  CHECK_THROWS_AS(gen_dented_cube(0), PreconditionError);
  CHECK_THROWS_AS(gen_singletons(0), PreconditionError);
}
