#include "shatter/concept_class.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "combinations.hpp"
#include "shatter/errors.hpp"

namespace shatter {

// ---------------------------------------------------------------------------
// PartialAssignment

PartialAssignment::PartialAssignment(std::initializer_list<Entry> entries)
    : PartialAssignment(std::vector<Entry>(entries)) {}

PartialAssignment::PartialAssignment(std::vector<Entry> entries) : entries_{std::move(entries)} {
  std::sort(entries_.begin(), entries_.end());
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const Entry& a, const Entry& b) { return a.first == b.first; });
  if (dup != entries_.end()) {
    throw PreconditionError("partial assignment repeats coordinate " + std::to_string(dup->first + 1));
  }
}

PartialAssignment PartialAssignment::constant(const CoordSet& coords, bool value) {
  std::vector<Entry> e;
  e.reserve(coords.size());
  for (auto x : coords) e.emplace_back(x, value);
  return PartialAssignment(std::move(e));
}

PartialAssignment PartialAssignment::trace_of(const Concept& member, const CoordSet& coords) {
  std::vector<Entry> e;
  e.reserve(coords.size());
  for (auto x : coords) e.emplace_back(x, member.test(x));
  return PartialAssignment(std::move(e));
}

CoordSet PartialAssignment::coords() const {
  CoordSet out;
  out.reserve(entries_.size());
  for (const auto& [x, _] : entries_) out.push_back(x);
  return out;
}

std::optional<bool> PartialAssignment::value(std::size_t coord) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{coord, false});
  if (it == entries_.end() || it->first != coord) return std::nullopt;
  return it->second;
}

bool PartialAssignment::matches(const Concept& c) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return c.test(e.first) == e.second; });
}

std::string PartialAssignment::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i].first + 1);
    out += entries_[i].second ? ":1" : ":0";
  }
  out += '}';
  return out;
}

// ---------------------------------------------------------------------------
// ConceptClass

namespace {

void check_lengths(std::size_t n, const std::vector<Concept>& concepts) {
  for (const auto& c : concepts) {
    if (c.size() != n) {
      throw PreconditionError("concept " + c.to_string() + " has length " + std::to_string(c.size()) +
                              ", domain size is " + std::to_string(n));
    }
  }
}

}  // namespace

ConceptClass::ConceptClass(std::size_t domain_size, std::vector<Concept> concepts)
    : n_{domain_size}, concepts_{std::move(concepts)} {
  check_lengths(n_, concepts_);
  std::sort(concepts_.begin(), concepts_.end());
  auto dup = std::adjacent_find(concepts_.begin(), concepts_.end());
  if (dup != concepts_.end()) throw PreconditionError("duplicate concept " + dup->to_string());
}

ConceptClass ConceptClass::deduplicated(std::size_t domain_size, std::vector<Concept> concepts) {
  check_lengths(domain_size, concepts);
  std::sort(concepts.begin(), concepts.end());
  concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());
  ConceptClass out(domain_size);
  out.concepts_ = std::move(concepts);
  return out;
}

ConceptClass ConceptClass::from_strings(std::span<const std::string_view> rows, std::size_t domain_size) {
  std::vector<Concept> concepts;
  concepts.reserve(rows.size());
  for (auto r : rows) concepts.push_back(Concept::from_string(r));
  const std::size_t n = rows.empty() ? domain_size : rows.front().size();
  return ConceptClass(n, std::move(concepts));
}

ConceptClass ConceptClass::from_strings(std::initializer_list<std::string_view> rows, std::size_t domain_size) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()), domain_size);
}

bool ConceptClass::is_full_cube() const {
  return n_ < 64 && concepts_.size() == (std::size_t{1} << n_);
}

bool ConceptClass::contains(const Concept& c) const {
  return std::binary_search(concepts_.begin(), concepts_.end(), c);
}

std::optional<std::size_t> ConceptClass::index_of(const Concept& c) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c);
  if (it == concepts_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::vector<std::string> ConceptClass::to_strings() const {
  std::vector<std::string> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.to_string());
  return out;
}

void require_nonempty(const ConceptClass& c, std::string_view op) {
  if (c.empty()) throw PreconditionError(std::string(op) + ": empty class");
}

std::uint64_t sauer_bound(std::size_t n, std::size_t d) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // (n choose i)
  for (std::size_t i = 0; i <= std::min(d, n); ++i) {
    if (i > 0) {
      // binom * (n - i + 1) / i stays exact; bail out before overflow.
      const unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - i + 1) / i;
      if (next > kMax) return kMax;
      binom = static_cast<std::uint64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Shattering

namespace {

void check_coords(const ConceptClass& c, const CoordSet& a, std::string_view op) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= c.domain_size()) {
      throw PreconditionError(std::string(op) + ": coordinate " + std::to_string(a[i] + 1) +
                              " outside domain of size " + std::to_string(c.domain_size()));
    }
    if (i > 0 && a[i] <= a[i - 1]) {
      throw PreconditionError(std::string(op) + ": coordinate set must be sorted and distinct");
    }
  }
}

// Assumes coordinates are valid.
bool shatters_unchecked(const ConceptClass& c, const CoordSet& a) {
  const std::size_t k = a.size();
  if (c.empty()) return false;
  if (k >= 63 || (std::uint64_t{1} << k) > c.size()) return false;
  const std::uint64_t patterns = std::uint64_t{1} << k;
  std::vector<std::uint64_t> seen((patterns + 63) / 64, 0);
  std::uint64_t distinct = 0;
  for (const auto& member : c) {
    std::uint64_t p = 0;
    for (std::size_t j = 0; j < k; ++j) {
      p |= static_cast<std::uint64_t>(member.test(a[j])) << j;
    }
    auto& word = seen[p / 64];
    const std::uint64_t bit = std::uint64_t{1} << (p % 64);
    if (!(word & bit)) {
      word |= bit;
      if (++distinct == patterns) return true;
    }
  }
  return false;
}

struct Lattice {
  std::vector<CoordSet> shattered;
  std::vector<CoordSet> minimal_non_shattered;
};

// Level-by-level growth of the shattered family. A (k+1)-set is examined only
// when every k-subset is shattered, which is exactly the candidate set for
// minimal non-shattered sets.
Lattice explore(const ConceptClass& c) {
  Lattice out;
  if (c.empty()) return out;
  const std::size_t n = c.domain_size();
  std::vector<CoordSet> level{CoordSet{}};
  while (!level.empty()) {
    out.shattered.insert(out.shattered.end(), level.begin(), level.end());
    std::vector<CoordSet> next;
    for (const auto& s : level) {
      const std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t j = start; j < n; ++j) {
        CoordSet t = s;
        t.push_back(j);
        bool candidate = true;
        // Subsets that drop one element of s (dropping j gives s itself).
        for (std::size_t drop = 0; drop < s.size() && candidate; ++drop) {
          CoordSet sub;
          sub.reserve(s.size());
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (i != drop) sub.push_back(t[i]);
          }
          candidate = std::binary_search(level.begin(), level.end(), sub);
        }
        if (!candidate) continue;
        if (shatters_unchecked(c, t)) {
          next.push_back(std::move(t));
        } else {
          out.minimal_non_shattered.push_back(std::move(t));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

bool shatters(const ConceptClass& c, const CoordSet& a) {
  check_coords(c, a, "shatters");
  return shatters_unchecked(c, a);
}

std::size_t vc(const ConceptClass& c) {
  require_nonempty(c, "vc");
  std::size_t best = 0;
  // Downward closure: once no k-set is shattered, no larger set is.
  for (std::size_t k = 1; k <= c.domain_size() && k < 63 && (std::uint64_t{1} << k) <= c.size(); ++k) {
    bool found = false;
    detail::for_each_combination(c.domain_size(), k, [&](const CoordSet& a) {
      found = shatters_unchecked(c, a);
      return !found;
    });
    if (!found) break;
    best = k;
  }
  return best;
}

std::optional<CoordSet> first_shattered_set(const ConceptClass& c, std::size_t k) {
  std::optional<CoordSet> out;
  if (c.empty() || k > c.domain_size()) return out;
  detail::for_each_combination(c.domain_size(), k, [&](const CoordSet& a) {
    if (shatters_unchecked(c, a)) {
      out = a;
      return false;
    }
    return true;
  });
  return out;
}

std::vector<CoordSet> shattered_sets(const ConceptClass& c) { return explore(c).shattered; }

std::vector<CoordSet> minimal_non_shattered_sets(const ConceptClass& c) {
  require_nonempty(c, "minimal_non_shattered_sets");
  return explore(c).minimal_non_shattered;
}

bool is_maximum(const ConceptClass& c) {
  require_nonempty(c, "is_maximum");
  return c.size() == sauer_bound(c.domain_size(), vc(c));
}

bool is_extremal(const ConceptClass& c) {
  require_nonempty(c, "is_extremal");
  return c.size() == explore(c).shattered.size();
}

ConceptClass dual(const ConceptClass& c) {
  require_nonempty(c, "dual");
  if (c.domain_size() == 0) throw PreconditionError("dual: class over the empty domain has no dual concepts");
  std::vector<Concept> columns;
  columns.reserve(c.domain_size());
  for (std::size_t x = 0; x < c.domain_size(); ++x) {
    Concept column(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].test(x)) column.set(i);
    }
    columns.push_back(std::move(column));
  }
  return ConceptClass::deduplicated(c.size(), std::move(columns));
}

std::size_t vc_star(const ConceptClass& c) { return vc(dual(c)); }

ConceptClass restrict_to(const ConceptClass& c, const PartialAssignment& a) {
  if (a.extent() > c.domain_size()) {
    throw PreconditionError("restrict: coordinate " + std::to_string(a.extent()) + " outside domain of size " +
                            std::to_string(c.domain_size()));
  }
  std::vector<Concept> kept;
  std::copy_if(c.begin(), c.end(), std::back_inserter(kept), [&](const Concept& x) { return a.matches(x); });
  return ConceptClass::deduplicated(c.domain_size(), std::move(kept));
}

std::vector<PartialAssignment> traces(const ConceptClass& c, const CoordSet& coords) {
  check_coords(c, coords, "traces");
  std::vector<Concept> patterns;
  patterns.reserve(c.size());
  for (const auto& member : c) {
    Concept p(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) p.set(j, member.test(coords[j]));
    patterns.push_back(std::move(p));
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  std::vector<PartialAssignment> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) {
    std::vector<PartialAssignment::Entry> e;
    for (std::size_t j = 0; j < coords.size(); ++j) e.emplace_back(coords[j], p.test(j));
    out.emplace_back(std::move(e));
  }
  return out;
}

PartialAssignment forbidden_trace(const ConceptClass& c, const CoordSet& x) {
  require_nonempty(c, "forbidden_trace");
  check_coords(c, x, "forbidden_trace");
  if (!is_extremal(c)) throw PreconditionError("forbidden_trace: class is not extremal");
  if (x.size() >= 63) throw PreconditionError("forbidden_trace: coordinate set too large");
  if (shatters_unchecked(c, x)) throw PreconditionError("forbidden_trace: " + format_coords(x) + " is shattered");
  for (std::size_t drop = 0; drop < x.size(); ++drop) {
    CoordSet sub = x;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!shatters_unchecked(c, sub)) {
      throw PreconditionError("forbidden_trace: " + format_coords(x) + " is not minimal non-shattered");
    }
  }
  const std::uint64_t patterns = std::uint64_t{1} << x.size();
  std::vector<bool> seen(patterns, false);
  for (const auto& member : c) {
    std::uint64_t p = 0;
    for (std::size_t j = 0; j < x.size(); ++j) p |= static_cast<std::uint64_t>(member.test(x[j])) << j;
    seen[p] = true;
  }
  std::optional<std::uint64_t> missing;
  for (std::uint64_t p = 0; p < patterns; ++p) {
    if (seen[p]) continue;
    if (missing) {
      throw InvariantViolation("forbidden_trace: more than one missing trace on " + format_coords(x) +
                               " although the class is extremal");
    }
    missing = p;
  }
  std::vector<PartialAssignment::Entry> e;
  for (std::size_t j = 0; j < x.size(); ++j) e.emplace_back(x[j], ((*missing >> j) & 1U) != 0);
  return PartialAssignment(std::move(e));
}

// ---------------------------------------------------------------------------
// Class files

ConceptClass parse_class(std::string_view text) {
  std::vector<Concept> concepts;
  std::unordered_map<Concept, std::size_t, BitVectorHash> first_line;
  std::optional<std::size_t> width;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (line.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(line_no, "expected a 0/1 string, got '" + std::string(line) + "'");
    }
    if (!width) {
      width = line.size();
    } else if (line.size() != *width) {
      throw ParseError(line_no, "concept has length " + std::to_string(line.size()) + ", expected " +
                                    std::to_string(*width));
    }
    Concept c = Concept::from_string(line);
    auto [it, inserted] = first_line.emplace(c, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate concept " + std::string(line) + " (first on line " +
                                    std::to_string(it->second) + ")");
    }
    concepts.push_back(std::move(c));
    if (end == text.size()) break;
  }
  if (concepts.empty()) throw ParseError(0, "class file contains no concepts");
  return ConceptClass(*width, std::move(concepts));
}

ConceptClass read_class(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_class(text);
}

void write_class(std::ostream& out, const ConceptClass& c, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& member : c) out << member.to_string() << '\n';
}

std::string format_coords(const CoordSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  out += '}';
  return out;
}

}  // namespace shatter
