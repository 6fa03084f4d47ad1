#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shatter/concept_class.hpp"

namespace shatter {

/// A member of the convexity space F_C: an intersection of half-spaces
/// C_{x,y}. Equality is extensional; `provenance` records an (X, t) that
/// generates the set when one is known.
struct ConvexSet {
  ConceptClass members;
  std::optional<PartialAssignment> provenance;

  bool operator==(const ConvexSet& other) const { return members == other.members; }
};

/// An ordered list of distinct, Radon-independent concepts.
struct RadonWitness {
  std::vector<Concept> concepts;
  std::size_t certified_size = 0;

  /// Concept strings in lexicographic order.
  std::vector<std::string> sorted_strings() const;
};

struct RadonResult {
  std::size_t value = 0;
  /// False when the search stopped at the limit; value is then a lower bound.
  bool exact = true;
  RadonWitness witness;
};

/// C_{x,y} = {c ∈ C : c(x) = y}.
ConvexSet halfspace(const ConceptClass& c, std::size_t x, bool y);

/// Coordinates where all of `p` agree, with the common values. Requires a
/// nonempty `p`.
PartialAssignment agreement(std::span<const Concept> p);

/// conv(P): the agreement subcube C_{X,t} for nonempty P, and ∅ for empty P.
/// Throws PreconditionError when P is not a subset of C.
ConvexSet convex_hull(const ConceptClass& c, std::span<const Concept> p);

/// True iff every nontrivial bipartition of `p` has disjoint hulls. Throws on
/// duplicates or concepts outside C.
bool is_radon_independent(const ConceptClass& c, std::span<const Concept> p);

/// Largest Radon-independent subset, searched by growing independent sets
/// one concept at a time. `limit` defaults to n·|C|; reaching it yields a
/// result with exact == false.
RadonResult radon_number(const ConceptClass& c, std::optional<std::size_t> limit = std::nullopt);

/// Smallest x such that I is constant at x and J is constant at the other
/// value.
std::optional<std::size_t> separating_coordinate(const ConceptClass& c, std::span<const Concept> i,
                                                 std::span<const Concept> j);

/// ⌊log2(2d+2)⌋ concepts built from the first shattered set of size vc(C):
/// each coordinate of that set encodes one ordered bipartition (I, J) with
/// the first concept in I.
RadonWitness radon_witness_from_shattering(const ConceptClass& c);

/// vc(C)+1 concepts for a maximum class with 0 < vc < n: single-bit flips of
/// the forbidden trace on the first (vc+1)-set of coordinates.
RadonWitness radon_witness_maximum(const ConceptClass& c);

/// ⌊log2 v⌋, with ilog2(0) = -1.
int ilog2(std::uint64_t v);

}  // namespace shatter
