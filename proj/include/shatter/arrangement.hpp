#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shatter/concept_class.hpp"

namespace shatter {

using Rational = boost::multiprecision::cpp_rational;

/// H = {x : <normal, x> = offset}; the '+' side is <normal, x> > offset.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  bool operator==(const Hyperplane&) const = default;
};

/// Hyperplanes in R^d with exact rational coefficients and nonzero normals.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws PreconditionError on a zero normal or a normal of the wrong length.
  Arrangement(std::size_t dimension, std::vector<Hyperplane> hyperplanes);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  bool operator==(const Arrangement&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// "p/q" or "p"; throws ParseError (line 0) on malformed text or q = 0.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

// Arrangement file: "d n", then n lines of d+1 rationals a_1 .. a_d b.
Arrangement parse_arrangement(std::string_view text);
Arrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& a);

/// Whether the open cell with the given signs (bit i set = '+' for
/// hyperplane i) is nonempty. Decided exactly by Fourier–Motzkin elimination.
/// Throws PreconditionError when signs.size() != a.size().
bool sign_pattern_feasible(const Arrangement& a, const Concept& signs);

/// Sign vector of a point, or nullopt when the point lies on a hyperplane.
std::optional<Concept> sign_vector_at(const Arrangement& a, std::span<const Rational> point);

/// Every k ≤ d normals are linearly independent and no d+1 hyperplanes share
/// a point.
bool is_generic(const Arrangement& a);

/// All feasible sign patterns, '+' encoded as 1, over domain [a.size()].
ConceptClass gen_arrangement_class(const Arrangement& a);

/// n hyperplanes with integer coefficients in [-1000, 1000], redrawn until
/// generic. Throws ResourceLimit after `max_attempts` rejections.
Arrangement gen_random_generic_arrangement(std::size_t d, std::size_t n, std::uint64_t seed,
                                           std::size_t max_attempts = 1000);

/// x_i > 0 for i ≤ d and x_1 + ... + x_d < 1: the simplex itself is the
/// all-'+' cell and the all-'-' cell is the only infeasible pattern.
Arrangement gen_simplex_arrangement(std::size_t d);

/// 2^{d+1} hyperplanes, one per subset S of the vertices 0, e_1, ..., e_d
/// of the standard simplex, with exactly the vertices of S on the '+' side.
/// Separators are perturbed by seeded offsets until the arrangement is
/// generic. Hyperplane index = bitmask of S (bit j = vertex j).
Arrangement gen_shattered_points_arrangement(std::size_t d, std::uint64_t seed = 1);

/// Vertices 0, e_1, ..., e_d of the standard simplex in R^d.
std::vector<std::vector<Rational>> simplex_vertices(std::size_t d);

/// Three generic lines in the plane; 7 cells, missing pattern "001".
Arrangement gen_three_lines_arrangement();

}  // namespace shatter
