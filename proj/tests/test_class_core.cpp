#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "shatter/bit_vector.hpp"
#include "shatter/concept_class.hpp"
#include "shatter/errors.hpp"
#include "shatter/generators.hpp"
#include "shatter/relabel.hpp"

using namespace shatter;

TEST_CASE("bit vector round trips and ordering") {
  const auto v = BitVector::from_string("0010110");
  CHECK(v.size() == 7);
  CHECK(v.to_string() == "0010110");
  CHECK(v.count() == 3);
  CHECK(v.test(2));
  CHECK_FALSE(v.test(0));
  CHECK(BitVector::from_integer(1, 3).to_string() == "001");
  CHECK(BitVector::from_integer(6, 3).to_integer() == 6);
  CHECK(BitVector::from_string("011") < BitVector::from_string("100"));
  CHECK_THROWS_AS(BitVector::from_string("01x"), std::invalid_argument);

  // Long vectors cross word boundaries and still order like strings.
  std::mt19937_64 rng(5);
  std::vector<std::string> strings;
  for (int i = 0; i < 50; ++i) {
    std::string s;
    for (int j = 0; j < 130; ++j) s += (rng() & 1U) ? '1' : '0';
    strings.push_back(s);
  }
  std::vector<BitVector> vectors;
  for (const auto& s : strings) vectors.push_back(BitVector::from_string(s));
  std::sort(strings.begin(), strings.end());
  std::sort(vectors.begin(), vectors.end());
  for (std::size_t i = 0; i < strings.size(); ++i) CHECK(vectors[i].to_string() == strings[i]);
}

TEST_CASE("construction rejects duplicates and mismatched lengths") {
  CHECK_THROWS_AS(ConceptClass::from_strings({"01", "01"}), PreconditionError);
  CHECK_THROWS_AS(ConceptClass::from_strings({"01", "011"}), PreconditionError);
  CHECK(ConceptClass::deduplicated(2, {Concept::from_string("01"), Concept::from_string("01")}).size() == 1);
  const auto c = ConceptClass::from_strings({"11", "00", "10"});
  CHECK(c.to_strings() == std::vector<std::string>{"00", "10", "11"});
  CHECK(c.contains(Concept::from_string("10")));
  CHECK(!c.contains(Concept::from_string("01")));
  CHECK(c.index_of(Concept::from_string("11")) == 2);
}

TEST_CASE("shatters") {
  CHECK(shatters(gen_cube(3), {0, 1, 2}));
  CHECK_FALSE(shatters(gen_singletons(4), {0, 1}));
  CHECK(shatters(gen_square_and_edge(), {0, 1}));
  CHECK(shatters(gen_singletons(4), {}));
  CHECK_THROWS_AS(shatters(gen_cube(2), {5}), PreconditionError);
}

TEST_CASE("vc of the standard families") {
  CHECK(vc(gen_cube(3)) == 3);
  CHECK(vc(gen_dented_cube(3)) == 3);
  CHECK(gen_dented_cube(3).domain_size() == 4);
  CHECK(vc(gen_singletons(10)) == 1);
  CHECK(vc(ConceptClass::from_strings({"0101"})) == 0);
  CHECK_THROWS_AS(vc(ConceptClass(3)), PreconditionError);
}

TEST_CASE("shattered sets") {
  const auto s = shattered_sets(gen_square_and_edge());
  CHECK(s == std::vector<CoordSet>{{}, {0}, {1}, {2}, {0, 1}});
  CHECK(shattered_sets(ConceptClass::from_strings({"101"})) == std::vector<CoordSet>{{}});
  CHECK(shattered_sets(gen_cube(2)).size() == 4);
  // Singletons over [4]: the empty set and the four singletons.
  CHECK(shattered_sets(gen_singletons(4)).size() == 5);
}

TEST_CASE("maximum and extremal") {
  CHECK(is_maximum(gen_example_d1()));
  CHECK_FALSE(is_maximum(gen_square_and_edge()));
  CHECK(is_maximum(gen_cube(3)));
  CHECK(is_extremal(gen_square_and_edge()));
  CHECK_FALSE(is_extremal(gen_singletons(4)));
  for (std::size_t d = 1; d <= 5; ++d) {
    CHECK(is_maximum(gen_dented_cube(d)));
    CHECK(is_extremal(gen_dented_cube(d)));
  }
}

TEST_CASE("dual class") {
  const auto d = dual(gen_cube(2));
  CHECK(d.domain_size() == 4);
  CHECK(d.size() == 2);
  CHECK(vc_star(gen_cube(3)) == 1);
  CHECK(vc_star(gen_dented_cube(3)) == 2);
  CHECK(vc_star(gen_example_d1()) == 3);
  // Repeated columns collapse.
  CHECK(dual(ConceptClass::from_strings({"00", "11"})).size() == 1);
}

TEST_CASE("restriction, traces and forbidden traces") {
  const auto cube = gen_cube(3);
  const auto half = restrict_to(cube, PartialAssignment{{0, false}});
  CHECK(half.to_strings() == std::vector<std::string>{"000", "001", "010", "011"});
  CHECK(restrict_to(gen_dented_cube(2), PartialAssignment::constant({0, 1, 2}, true)).empty());

  CHECK(minimal_non_shattered_sets(gen_cube(3)).empty());
  CHECK(minimal_non_shattered_sets(gen_dented_cube(2)) == std::vector<CoordSet>{{0, 1, 2}});
  CHECK(forbidden_trace(gen_dented_cube(2), {0, 1, 2}) == PartialAssignment::constant({0, 1, 2}, true));
  CHECK(forbidden_trace(gen_dented_cube(3), {0, 1, 2, 3}) == PartialAssignment::constant({0, 1, 2, 3}, true));

  const auto ex = gen_example_d1();
  const auto t = forbidden_trace(ex, {0, 1});
  CHECK(restrict_to(ex, t).empty());
  CHECK(traces(ex, {0, 1}).size() == 3);
  CHECK_THROWS_AS(forbidden_trace(gen_singletons(4), {0, 1}), PreconditionError);
}

TEST_CASE("maximum classes: every (vc+1)-set is minimal non-shattered") {
  for (const auto& c : {gen_example_d1(), gen_dented_cube(3), gen_ball(Concept::from_string("01101"), 2)}) {
    const auto d = vc(c);
    const auto m = minimal_non_shattered_sets(c);
    CHECK(m.size() == sauer_bound(c.domain_size(), d + 1) - sauer_bound(c.domain_size(), d));
    for (const auto& x : m) CHECK(x.size() == d + 1);
  }
}

TEST_CASE("class file parsing") {
  const auto c = parse_class("# a comment\n\n 011 \n101\n");
  CHECK(c.to_strings() == std::vector<std::string>{"011", "101"});

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_class(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("01\n011\n") == 2);
  CHECK(line_of("01\n# x\n0a\n") == 3);
  CHECK(line_of("01\n10\n01\n") == 3);
  CHECK_THROWS_AS(parse_class("# only comments\n"), ParseError);

  std::ostringstream out;
  write_class(out, gen_square_and_edge(), "square and edge");
  CHECK(parse_class(out.str()) == gen_square_and_edge());
}

TEST_CASE("metrics agree with brute force on random classes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto c = oracle::random_class(rng, n, 24);
    const auto r = oracle::rows(c);
    CAPTURE(c.to_strings());
    CHECK(vc(c) == oracle::vc(r, n));
    CHECK(shattered_sets(c).size() == oracle::shatter_count(r, n));
    CHECK(vc_star(c) == oracle::vc_star(r, n));
    CHECK(is_extremal(c) == oracle::extremal(r, n));
    CHECK(is_maximum(c) == oracle::maximum(r, n));
    CHECK(c.size() <= shattered_sets(c).size());
    for (const auto& m : minimal_non_shattered_sets(c)) {
      CHECK_FALSE(oracle::shatters(r, m));
      for (std::size_t drop = 0; drop < m.size(); ++drop) {
        auto sub = m;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(oracle::shatters(r, sub));
      }
    }
  }
}

TEST_CASE("relabeling preserves the class structure") {
  std::mt19937_64 rng(3);
  const auto c = gen_example_d1();
  for (int i = 0; i < 5; ++i) {
    const auto r = random_relabeling(8, rng);
    const auto image = apply(r, c);
    CHECK(image.size() == c.size());
    CHECK(vc(image) == 1);
    CHECK(canonical_form(image) == canonical_form(c));
  }
  CHECK(isomorphic(gen_dented_cube(2), ConceptClass::from_strings({"001", "010", "100", "000", "011", "101", "110"})));
  CHECK_FALSE(isomorphic(gen_dented_cube(2), gen_cube(3)));
}

TEST_CASE("dual VC under relabeling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto c = oracle::random_class(rng, 1 + rng() % 6, 20);
    auto r = random_relabeling(c.domain_size(), rng);
    r.flip = Concept(c.domain_size());
    const auto image = apply(r, c);
    CHECK(vc_star(image) == vc_star(c));
    CHECK(vc(image) == vc(c));
  }
  // A flip complements one dual concept, which can change vc*.
  const auto c = ConceptClass::from_strings({"101"});
  const auto flipped = ConceptClass::from_strings({"111"});
  CHECK(vc_star(c) == oracle::vc_star(c.to_strings(), 3));
  CHECK(vc_star(c) == 1);
  CHECK(vc_star(flipped) == 0);
  CHECK(vc(c) == vc(flipped));
}
