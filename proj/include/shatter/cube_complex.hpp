#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "shatter/concept_class.hpp"

namespace shatter {

/// A cube (Y, f): free coordinates Y and a fixed assignment f on [n] \ Y,
/// all of whose 2^|Y| completions lie in the class.
struct Cube {
  CoordSet free;
  PartialAssignment fixed;

  std::size_t dimension() const { return free.size(); }
  /// True iff this cube is a (not necessarily proper) subcube of `other`.
  bool is_subcube_of(const Cube& other) const;

  bool operator==(const Cube&) const = default;
  /// Dimension first, then free coordinates, then fixed bits.
  bool operator<(const Cube& other) const;
};

struct CubeComplex {
  ConceptClass base;
  /// by_dimension[k] holds the k-cubes in sorted order.
  std::vector<std::vector<Cube>> by_dimension;
  std::vector<Cube> maximal;

  std::size_t dimension() const { return by_dimension.empty() ? 0 : by_dimension.size() - 1; }
  std::size_t cube_count() const;
  std::vector<std::size_t> counts() const;
};

CubeComplex enumerate_cubes(const ConceptClass& c);

/// Coordinate sets Y carrying at least one cube.
std::vector<CoordSet> strongly_shattered_sets(const ConceptClass& c);

std::size_t complex_dimension(const ConceptClass& c);

/// Writes "n <n> dim <dim>" and then one "Y={..} f={..}" line per cube in
/// sorted order. Coordinates are 1-based. Throws std::runtime_error when the
/// stream fails.
void export_complex(const CubeComplex& q, std::ostream& out);
std::string export_complex(const CubeComplex& q);

}  // namespace shatter
