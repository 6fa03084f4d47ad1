#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "shatter/concept_class.hpp"

namespace shatter {

/// A coordinate permutation composed with a bitwise flip: bit i of the input
/// is xored with flip[i] and moved to position permutation[i].
struct Relabeling {
  std::vector<std::size_t> permutation;
  Concept flip;

  static Relabeling identity(std::size_t n);
};

Concept apply(const Relabeling& r, const Concept& c);
ConceptClass apply(const Relabeling& r, const ConceptClass& c);

Relabeling random_relabeling(std::size_t n, std::mt19937_64& rng);

/// Smallest image (as a sorted concept list) under all permutations and
/// flips. Exponential in n; rejects n > 10.
ConceptClass canonical_form(const ConceptClass& c);

bool isomorphic(const ConceptClass& a, const ConceptClass& b);

}  // namespace shatter
