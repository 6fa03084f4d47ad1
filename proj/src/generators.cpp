#include "shatter/generators.hpp"

#include <string>

#include "combinations.hpp"
#include "shatter/errors.hpp"

namespace shatter {

ConceptClass gen_cube(std::size_t d) {
  if (d < 1 || d > 20) throw PreconditionError("cube: d must be in [1, 20]");
  std::vector<Concept> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) out.push_back(Concept::from_integer(v, d));
  return ConceptClass(d, std::move(out));
}

ConceptClass gen_dented_cube(std::size_t d) {
  if (d < 1 || d > 19) throw PreconditionError("dented cube: d must be in [1, 19]");
  std::vector<Concept> out;
  const std::uint64_t all = (std::uint64_t{1} << (d + 1)) - 1;
  for (std::uint64_t v = 0; v < all; ++v) out.push_back(Concept::from_integer(v, d + 1));
  return ConceptClass(d + 1, std::move(out));
}

ConceptClass gen_singletons(std::size_t n) {
  if (n < 1) throw PreconditionError("singletons: n must be at least 1");
  std::vector<Concept> out;
  for (std::size_t i = 0; i < n; ++i) {
    Concept c(n);
    c.set(i);
    out.push_back(std::move(c));
  }
  return ConceptClass(n, std::move(out));
}

ConceptClass gen_example_d1() {
  return ConceptClass::from_strings({"01010101", "11010101", "10010101", "01110101", "01100101", "01011101",
                                     "01011001", "01010111", "01010110"});
}

std::vector<Concept> example_d1_far_concepts() {
  return {Concept::from_string("10010101"), Concept::from_string("01100101"), Concept::from_string("01011001"),
          Concept::from_string("01010110")};
}

ConceptClass gen_square_and_edge() { return ConceptClass::from_strings({"000", "010", "110", "100", "001"}); }

ConceptClass gen_ball(const Concept& centre, std::size_t radius) {
  const std::size_t n = centre.size();
  std::vector<Concept> out;
  for (std::size_t k = 0; k <= std::min(radius, n); ++k) {
    detail::for_each_combination(n, k, [&](const CoordSet& flips) {
      Concept c = centre;
      for (auto x : flips) c.flip(x);
      out.push_back(std::move(c));
      return true;
    });
  }
  return ConceptClass(n, std::move(out));
}

}  // namespace shatter
