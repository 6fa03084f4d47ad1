#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shatter/bit_vector.hpp"

namespace shatter {

/// One labeling of the domain [n]; coordinate i is bit i (0-based internally,
/// printed 1-based).
using Concept = BitVector;

/// A set of coordinates, kept sorted and duplicate-free.
using CoordSet = std::vector<std::size_t>;

/// Prescribed bits on a subset X of the coordinates: the pair (X, t).
class PartialAssignment {
 public:
  using Entry = std::pair<std::size_t, bool>;

  PartialAssignment() = default;
  /// Throws PreconditionError when a coordinate repeats.
  PartialAssignment(std::initializer_list<Entry> entries);
  explicit PartialAssignment(std::vector<Entry> entries);

  /// All of `coords` set to the same `value`.
  static PartialAssignment constant(const CoordSet& coords, bool value);
  /// `coords` set to the bits of `member` at those coordinates.
  static PartialAssignment trace_of(const Concept& member, const CoordSet& coords);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  CoordSet coords() const;
  std::optional<bool> value(std::size_t coord) const;

  /// Largest coordinate + 1, or 0 for the empty assignment.
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  bool matches(const Concept& c) const;

  /// "{1:0,3:1}" with 1-based coordinates.
  std::string to_string() const;

  bool operator==(const PartialAssignment&) const = default;
  auto operator<=>(const PartialAssignment&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// A duplicate-free set of equal-length concepts over [n], stored in
/// lexicographic order. Immutable once built.
class ConceptClass {
 public:
  ConceptClass() = default;
  explicit ConceptClass(std::size_t domain_size) : n_{domain_size} {}

  /// Throws PreconditionError on a duplicate or a concept of the wrong length.
  ConceptClass(std::size_t domain_size, std::vector<Concept> concepts);

  /// Same as above but silently collapses duplicates.
  static ConceptClass deduplicated(std::size_t domain_size, std::vector<Concept> concepts);

  /// Convenience for literals: {"000", "010", ...}. Domain size is taken from
  /// the first string; `domain_size` is used when the list is empty.
  static ConceptClass from_strings(std::span<const std::string_view> rows, std::size_t domain_size = 0);
  static ConceptClass from_strings(std::initializer_list<std::string_view> rows, std::size_t domain_size = 0);

  std::size_t domain_size() const { return n_; }
  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  bool is_full_cube() const;

  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  bool contains(const Concept& c) const;
  std::optional<std::size_t> index_of(const Concept& c) const;

  std::vector<std::string> to_strings() const;

  bool operator==(const ConceptClass&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Concept> concepts_;
};

/// Throws PreconditionError("<op>: empty class") when `c` is empty.
void require_nonempty(const ConceptClass& c, std::string_view op);

/// Σ_{i≤d} (n choose i), saturating at UINT64_MAX.
std::uint64_t sauer_bound(std::size_t n, std::size_t d);

/// True iff C restricted to A attains all 2^|A| patterns. The empty set is
/// shattered by every nonempty class. Throws PreconditionError when a
/// coordinate is out of range.
bool shatters(const ConceptClass& c, const CoordSet& a);

std::size_t vc(const ConceptClass& c);

/// The lexicographically smallest shattered set of size k, if any.
std::optional<CoordSet> first_shattered_set(const ConceptClass& c, std::size_t k);

/// Every shattered coordinate set, ordered by size and then lexicographically.
std::vector<CoordSet> shattered_sets(const ConceptClass& c);

/// Non-shattered sets all of whose proper subsets are shattered.
std::vector<CoordSet> minimal_non_shattered_sets(const ConceptClass& c);

bool is_maximum(const ConceptClass& c);
bool is_extremal(const ConceptClass& c);

/// Dual class over the domain C (indexed in C's lexicographic order). Equal
/// columns collapse into one dual concept.
ConceptClass dual(const ConceptClass& c);
std::size_t vc_star(const ConceptClass& c);

/// {c ∈ C : c agrees with `a`}. The only operation that may return an empty
/// class.
ConceptClass restrict_to(const ConceptClass& c, const PartialAssignment& a);

/// All distinct traces of C on `coords`, as assignments, in lexicographic
/// order of the trace bits.
std::vector<PartialAssignment> traces(const ConceptClass& c, const CoordSet& coords);

/// The unique assignment on X realized by no concept, for extremal C and
/// minimal non-shattered X. Throws PreconditionError when those do not hold
/// and InvariantViolation when the missing trace is not unique.
PartialAssignment forbidden_trace(const ConceptClass& c, const CoordSet& x);

// Class file format: one 0/1 string per line, '#' comments and blank lines
// skipped, all rows equal length, duplicates rejected.
ConceptClass parse_class(std::string_view text);
ConceptClass read_class(std::istream& in);
void write_class(std::ostream& out, const ConceptClass& c, std::string_view comment = {});

/// "{1,2}" with 1-based coordinates.
std::string format_coords(const CoordSet& s);

}  // namespace shatter
