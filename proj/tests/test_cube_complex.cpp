#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "shatter/cube_complex.hpp"
#include "shatter/generators.hpp"

using namespace shatter;

TEST_CASE("square and edge complex") {
  const auto q = enumerate_cubes(gen_square_and_edge());
  CHECK(q.counts() == std::vector<std::size_t>{5, 5, 1});
  CHECK(q.dimension() == 2);
  CHECK(q.cube_count() == 11);
  REQUIRE(q.maximal.size() == 2);
  CHECK(q.maximal[0].free == CoordSet{2});
  CHECK(q.maximal[0].fixed == (PartialAssignment{{0, false}, {1, false}}));
  CHECK(q.maximal[1].free == CoordSet{0, 1});
  CHECK(q.maximal[1].fixed == PartialAssignment{{2, false}});
  CHECK(complex_dimension(gen_square_and_edge()) == 2);
}

TEST_CASE("isolated vertices") {
  const auto q = enumerate_cubes(gen_singletons(3));
  CHECK(q.counts() == std::vector<std::size_t>{3});
  CHECK(q.maximal.size() == 3);
  CHECK(strongly_shattered_sets(gen_singletons(3)) == std::vector<CoordSet>{{}});
}

TEST_CASE("full cube") {
  const auto q = enumerate_cubes(gen_cube(3));
  CHECK(q.counts() == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(q.maximal.size() == 1);
}

TEST_CASE("subcube relation") {
  const Cube edge{{2}, PartialAssignment{{0, false}, {1, false}}};
  const Cube vertex{{}, PartialAssignment{{0, false}, {1, false}, {2, true}}};
  CHECK(vertex.is_subcube_of(edge));
  CHECK_FALSE(edge.is_subcube_of(vertex));
  CHECK(edge.is_subcube_of(edge));
}

TEST_CASE("export format") {
  const auto text = export_complex(enumerate_cubes(ConceptClass::from_strings({"00", "01"})));
  CHECK(text == "n 2 dim 1\nY={} f={1:0,2:0}\nY={} f={1:0,2:1}\nY={2} f={1:0}\n");
}

TEST_CASE("cube enumeration matches brute force") {
  std::mt19937_64 rng(17);
  std::size_t extremal_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto c = oracle::random_class(rng, n, 20);
    CAPTURE(c.to_strings());
    const auto expected = oracle::cubes(c.to_strings(), n);
    const auto q = enumerate_cubes(c);
    CHECK(q.counts() == expected.by_dimension);
    CHECK(q.maximal.size() == expected.maximal);
    CHECK(strongly_shattered_sets(c).size() == expected.strongly_shattered.size());
    const bool extremal = oracle::extremal(c.to_strings(), n);
    CHECK((strongly_shattered_sets(c) == shattered_sets(c)) == extremal);
    if (extremal) {
      ++extremal_seen;
      CHECK(q.dimension() == vc(c));
    }
  }
  CHECK(extremal_seen > 10);
}
