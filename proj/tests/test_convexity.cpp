#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shatter/convexity.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"

using namespace shatter;

namespace {

std::vector<Concept> concepts(std::initializer_list<std::string_view> rows) {
  std::vector<Concept> out;
  for (auto r : rows) out.push_back(Concept::from_string(r));
  return out;
}

oracle::Rows strings(const std::vector<Concept>& p) {
  oracle::Rows out;
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

std::set<std::string> as_set(const ConceptClass& c) {
  const auto r = c.to_strings();
  return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("half-spaces") {
  const auto h = halfspace(gen_cube(3), 0, false);
  CHECK(h.members.to_strings() == std::vector<std::string>{"000", "001", "010", "011"});
  CHECK(halfspace(gen_dented_cube(2), 2, true).members.size() == 3);
  CHECK_THROWS_AS(halfspace(gen_cube(2), 2, true), PreconditionError);
}

TEST_CASE("agreement and hulls") {
  const auto fig = gen_square_and_edge();
  const auto p = concepts({"000", "110"});
  CHECK(agreement(p) == PartialAssignment{{2, false}});
  const auto h = convex_hull(fig, p);
  CHECK(h.members.to_strings() == std::vector<std::string>{"000", "010", "100", "110"});
  CHECK(convex_hull(fig, {}).members.empty());
  CHECK(convex_hull(fig, concepts({"001"})).members.size() == 1);
  CHECK_THROWS_AS(convex_hull(fig, concepts({"111"})), PreconditionError);
}

TEST_CASE("hull formula matches the intersection of half-spaces") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = oracle::random_class(rng, n, 20);
    std::vector<Concept> p;
    for (const auto& x : c) {
      if (rng() % 3 == 0) p.push_back(x);
    }
    CAPTURE(c.to_strings());
    CHECK(as_set(convex_hull(c, p).members) == oracle::hull(c.to_strings(), strings(p), n));
  }
}

TEST_CASE("radon independence") {
  const auto singletons = gen_singletons(4);
  CHECK(is_radon_independent(singletons, singletons.concepts()));
  const auto cube = gen_cube(2);
  CHECK_FALSE(is_radon_independent(cube, cube.concepts()));
  CHECK(is_radon_independent(cube, concepts({"00", "11"})));
  CHECK(is_radon_independent(cube, concepts({"01"})));
  CHECK(is_radon_independent(cube, {}));
  CHECK_THROWS_AS(is_radon_independent(cube, concepts({"00", "00"})), PreconditionError);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = oracle::random_class(rng, n, 16);
    std::vector<Concept> p;
    for (const auto& x : c) {
      if (rng() % 3 == 0 && p.size() < 7) p.push_back(x);
    }
    CAPTURE(c.to_strings());
    CAPTURE(strings(p));
    CHECK(is_radon_independent(c, p) == oracle::independent(c.to_strings(), strings(p), n));
  }
}

TEST_CASE("radon number of the standard families") {
  CHECK(radon_number(gen_cube(2)).value == 2);
  CHECK(radon_number(gen_cube(3)).value == 3);
  CHECK(radon_number(gen_dented_cube(3)).value == 4);
  CHECK(radon_number(gen_example_d1()).value == 3);
  CHECK(radon_number(gen_singletons(10)).value == 10);
  CHECK(radon_number(ConceptClass::from_strings({"0110"})).value == 1);

  const auto r = radon_number(gen_dented_cube(2));
  CHECK(r.exact);
  CHECK(r.witness.concepts.size() == 3);
  CHECK(is_radon_independent(gen_dented_cube(2), r.witness.concepts));
}

TEST_CASE("radon limit reports a lower bound") {
  const auto r = radon_number(gen_singletons(8), 3);
  CHECK(r.value == 3);
  CHECK_FALSE(r.exact);
  const auto full = radon_number(gen_singletons(3), 3);
  CHECK(full.value == 3);
  CHECK(full.exact);
}

TEST_CASE("radon number matches exhaustive search") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = oracle::random_class(rng, n, 10);
    CAPTURE(c.to_strings());
    const auto r = radon_number(c);
    CHECK(r.value == oracle::radon(c.to_strings(), n));
    CHECK(r.witness.concepts.size() == r.value);
    CHECK(oracle::independent(c.to_strings(), strings(r.witness.concepts), n));
  }
}

TEST_CASE("separating coordinates") {
  const auto dented2 = gen_dented_cube(2);
  CHECK(separating_coordinate(dented2, concepts({"011"}), concepts({"101", "110"})) == 0);
  CHECK(separating_coordinate(gen_cube(3), concepts({"000", "001"}), concepts({"110"})) == 0);
  CHECK(separating_coordinate(gen_cube(2), concepts({"00", "11"}), concepts({"01"})) == std::nullopt);

  // Disjoint hulls without a separating coordinate.
  const auto dented3 = gen_dented_cube(3);
  const auto i = concepts({"1101", "1110"});
  const auto j = concepts({"1011", "0111"});
  CHECK(separating_coordinate(dented3, i, j) == std::nullopt);
  CHECK(oracle::independent(dented3.to_strings(), {"1101", "1110", "1011", "0111"}, 4));

  CHECK_THROWS_AS(separating_coordinate(dented2, concepts({"011"}), concepts({"011"})), PreconditionError);
}

TEST_CASE("witness from shattering") {
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto w = radon_witness_from_shattering(gen_cube(d));
    CHECK(w.concepts.size() == static_cast<std::size_t>(ilog2(2 * d + 2)));
    CHECK(w.certified_size == w.concepts.size());
  }
  CHECK(radon_witness_from_shattering(gen_cube(3)).concepts.size() == 3);
  CHECK(radon_witness_from_shattering(gen_cube(7)).concepts.size() == 4);
  CHECK_THROWS_AS(radon_witness_from_shattering(ConceptClass::from_strings({"01"})), PreconditionError);
}

TEST_CASE("witness for maximum classes") {
  CHECK(radon_witness_maximum(gen_dented_cube(2)).sorted_strings() ==
        std::vector<std::string>{"011", "101", "110"});
  for (std::size_t d = 1; d <= 5; ++d) CHECK(radon_witness_maximum(gen_dented_cube(d)).concepts.size() == d + 1);
  CHECK(radon_witness_maximum(gen_example_d1()).concepts.size() == 2);
  CHECK_THROWS_AS(radon_witness_maximum(gen_cube(3)), PreconditionError);
  CHECK_THROWS_AS(radon_witness_maximum(gen_square_and_edge()), PreconditionError);
}

TEST_CASE("ilog2") {
  CHECK(ilog2(0) == -1);
  CHECK(ilog2(1) == 0);
  CHECK(ilog2(8) == 3);
  CHECK(ilog2(15) == 3);
}
