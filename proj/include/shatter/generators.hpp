#pragma once

#include <cstddef>

#include "shatter/concept_class.hpp"

namespace shatter {

/// {0,1}^d. Requires 1 <= d <= 20.
ConceptClass gen_cube(std::size_t d);

/// {0,1}^{d+1} without the all-ones concept; maximum with vc = d.
/// Requires 1 <= d <= 19.
ConceptClass gen_dented_cube(std::size_t d);

/// The n indicator concepts of single points.
ConceptClass gen_singletons(std::size_t n);

/// The nine-concept maximum class over [8] with vc = 1 and vc* = r = 3.
ConceptClass gen_example_d1();

/// The four concepts of gen_example_d1() that sit two flips away from
/// the centre; any three of them are dually shattered.
std::vector<Concept> example_d1_far_concepts();

/// {000, 010, 110, 100, 001}: a filled square on {1,2} and a pendant edge
/// on coordinate 3.
ConceptClass gen_square_and_edge();

/// Hamming ball of radius r around `centre`; maximum of vc = r when r < n.
ConceptClass gen_ball(const Concept& centre, std::size_t radius);

}  // namespace shatter
