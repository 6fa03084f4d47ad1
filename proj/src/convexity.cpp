#include "shatter/convexity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "shatter/errors.hpp"

namespace shatter {

using Word = BitVector::Word;

int ilog2(std::uint64_t v) { return v == 0 ? -1 : static_cast<int>(std::bit_width(v)) - 1; }

std::vector<std::string> RadonWitness::sorted_strings() const {
  std::vector<std::string> out;
  out.reserve(concepts.size());
  for (const auto& c : concepts) out.push_back(c.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

ConvexSet halfspace(const ConceptClass& c, std::size_t x, bool y) {
  if (x >= c.domain_size()) {
    throw PreconditionError("halfspace: coordinate " + std::to_string(x + 1) + " outside domain of size " +
                            std::to_string(c.domain_size()));
  }
  PartialAssignment a{{x, y}};
  return ConvexSet{restrict_to(c, a), a};
}

PartialAssignment agreement(std::span<const Concept> p) {
  if (p.empty()) throw PreconditionError("agreement: empty concept list");
  std::vector<PartialAssignment::Entry> e;
  const auto& first = p.front();
  for (std::size_t x = 0; x < first.size(); ++x) {
    const bool v = first.test(x);
    if (std::all_of(p.begin() + 1, p.end(), [&](const Concept& c) { return c.test(x) == v; })) {
      e.emplace_back(x, v);
    }
  }
  return PartialAssignment(std::move(e));
}

namespace {

void require_members(const ConceptClass& c, std::span<const Concept> p, std::string_view op) {
  for (const auto& x : p) {
    if (!c.contains(x)) throw PreconditionError(std::string(op) + ": concept " + x.to_string() + " not in class");
  }
}

std::vector<std::size_t> distinct_indices(const ConceptClass& c, std::span<const Concept> p, std::string_view op) {
  std::vector<std::size_t> idx;
  idx.reserve(p.size());
  for (const auto& x : p) {
    auto i = c.index_of(x);
    if (!i) throw PreconditionError(std::string(op) + ": concept " + x.to_string() + " not in class");
    idx.push_back(*i);
  }
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError(std::string(op) + ": repeated concept");
  }
  return idx;
}

// Word-level view of a class for the independence kernel. Hull of a subset
// is its agreement subcube, so two hulls meet iff their agreement
// assignments are consistent and the union is realized by some concept.
class HullKernel {
 public:
  explicit HullKernel(const ConceptClass& c)
      : n_{c.domain_size()}, words_{BitVector::word_count(c.domain_size())}, count_{c.size()} {
    rows_.reserve(count_ * words_);
    for (const auto& x : c) rows_.insert(rows_.end(), x.words().begin(), x.words().end());
    domain_.assign(words_, ~Word{0});
    if (words_ > 0 && n_ % 64 != 0) domain_.back() = ~Word{0} << (64 - n_ % 64);
    if (n_ <= kTableMaxDomain) build_table();
  }

  // Indices may be in any order.
  bool independent(std::span<const std::size_t> set) {
    const std::size_t k = set.size();
    if (k <= 1) return true;
    if (k >= 30) throw ResourceLimit("radon independence test on more than 29 concepts");
    const std::size_t subsets = std::size_t{1} << k;
    ones_.resize(subsets * words_);
    zeros_.resize(subsets * words_);
    std::copy(domain_.begin(), domain_.end(), ones_.begin());
    std::copy(domain_.begin(), domain_.end(), zeros_.begin());
    for (std::size_t m = 1; m < subsets; ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      const std::size_t prev = m & (m - 1);
      const Word* row = &rows_[set[low] * words_];
      for (std::size_t w = 0; w < words_; ++w) {
        ones_[m * words_ + w] = ones_[prev * words_ + w] & row[w];
        zeros_[m * words_ + w] = zeros_[prev * words_ + w] & ~row[w] & domain_[w];
      }
    }
    const std::size_t full = subsets - 1;
    scratch_x_.resize(words_);
    scratch_t_.resize(words_);
    // The first element always sits in I, so each unordered partition is seen once.
    for (std::size_t m = 1; m < full; m += 2) {
      const std::size_t j = full ^ m;
      bool separated = false;
      for (std::size_t w = 0; w < words_; ++w) {
        const Word oi = ones_[m * words_ + w], zi = zeros_[m * words_ + w];
        const Word oj = ones_[j * words_ + w], zj = zeros_[j * words_ + w];
        if ((oi & zj) | (zi & oj)) {
          separated = true;
          break;
        }
        scratch_x_[w] = oi | zi | oj | zj;
        scratch_t_[w] = oi | oj;
      }
      if (separated) continue;
      if (realized(scratch_x_.data(), scratch_t_.data())) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kTableMaxDomain = 10;

  void build_table() {
    const std::size_t cube = std::size_t{1} << n_;
    table_.assign((cube * cube + 63) / 64, 0);
    for (std::size_t r = 0; r < count_; ++r) {
      const std::size_t row = n_ == 0 ? 0 : static_cast<std::size_t>(rows_[r] >> (64 - n_));
      for (std::size_t x = 0; x < cube; ++x) {
        const std::size_t idx = (x << n_) | (row & x);
        table_[idx / 64] |= Word{1} << (idx % 64);
      }
    }
  }

  bool realized(const Word* x, const Word* t) const {
    if (!table_.empty()) {
      const std::size_t xi = n_ == 0 ? 0 : static_cast<std::size_t>(x[0] >> (64 - n_));
      const std::size_t ti = n_ == 0 ? 0 : static_cast<std::size_t>(t[0] >> (64 - n_));
      const std::size_t idx = (xi << n_) | ti;
      return (table_[idx / 64] >> (idx % 64)) & 1U;
    }
    for (std::size_t r = 0; r < count_; ++r) {
      const Word* row = &rows_[r * words_];
      bool ok = true;
      for (std::size_t w = 0; w < words_ && ok; ++w) ok = (row[w] & x[w]) == t[w];
      if (ok) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t words_;
  std::size_t count_;
  std::vector<Word> rows_;
  std::vector<Word> domain_;
  std::vector<Word> table_;
  std::vector<Word> ones_, zeros_, scratch_x_, scratch_t_;
};

// Sets of one size stored flat, rows sorted lexicographically.
struct Level {
  std::size_t width = 0;
  std::vector<std::uint32_t> flat;

  std::size_t count() const { return width == 0 ? 0 : flat.size() / width; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {flat.data() + i * width, width}; }

  bool contains(std::span<const std::uint32_t> key) const {
    std::size_t lo = 0, hi = count();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto r = row(mid);
      if (std::lexicographical_compare(r.begin(), r.end(), key.begin(), key.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < count() && std::equal(key.begin(), key.end(), row(lo).begin());
  }
};

}  // namespace

ConvexSet convex_hull(const ConceptClass& c, std::span<const Concept> p) {
  require_members(c, p, "convex_hull");
  if (p.empty()) return ConvexSet{ConceptClass(c.domain_size()), std::nullopt};
  auto a = agreement(p);
  return ConvexSet{restrict_to(c, a), a};
}

bool is_radon_independent(const ConceptClass& c, std::span<const Concept> p) {
  auto idx = distinct_indices(c, p, "is_radon_independent");
  if (idx.size() <= 1) return true;
  HullKernel kernel(c);
  return kernel.independent(idx);
}

RadonResult radon_number(const ConceptClass& c, std::optional<std::size_t> limit) {
  require_nonempty(c, "radon_number");
  const std::size_t cap = limit.value_or(std::max<std::size_t>(1, c.domain_size() * c.size()));
  if (cap == 0) throw PreconditionError("radon_number: limit must be at least 1");

  HullKernel kernel(c);
  Level level{1, {}};
  level.flat.reserve(c.size());
  for (std::uint32_t i = 0; i < c.size(); ++i) level.flat.push_back(i);

  RadonResult result;
  result.value = 1;
  std::vector<std::size_t> candidate;
  std::vector<std::uint32_t> key;
  while (result.value < cap) {
    Level next{level.width + 1, {}};
    for (std::size_t r = 0; r < level.count(); ++r) {
      auto base = level.row(r);
      for (std::uint32_t j = base.back() + 1; j < c.size(); ++j) {
        // Heredity: every subset of an independent set is independent, so all
        // width-sized subsets of the extension must already be in `level`.
        bool viable = true;
        for (std::size_t drop = 0; drop < base.size() && viable; ++drop) {
          key.clear();
          for (std::size_t i = 0; i < base.size(); ++i) {
            if (i != drop) key.push_back(base[i]);
          }
          key.push_back(j);
          viable = level.contains(key);
        }
        if (!viable) continue;
        candidate.assign(base.begin(), base.end());
        candidate.push_back(j);
        if (kernel.independent(candidate)) {
          next.flat.insert(next.flat.end(), base.begin(), base.end());
          next.flat.push_back(j);
        }
      }
    }
    if (next.count() == 0) break;
    level = std::move(next);
    ++result.value;
  }
  result.exact = result.value < cap || result.value == c.size();
  for (auto i : level.row(0)) result.witness.concepts.push_back(c[i]);
  result.witness.certified_size = result.witness.concepts.size();
  return result;
}

std::optional<std::size_t> separating_coordinate(const ConceptClass& c, std::span<const Concept> i,
                                                 std::span<const Concept> j) {
  if (i.empty() || j.empty()) throw PreconditionError("separating_coordinate: I and J must be nonempty");
  require_members(c, i, "separating_coordinate");
  require_members(c, j, "separating_coordinate");
  for (const auto& x : i) {
    if (std::find(j.begin(), j.end(), x) != j.end()) {
      throw PreconditionError("separating_coordinate: I and J share concept " + x.to_string());
    }
  }
  const auto ai = agreement(i);
  const auto aj = agreement(j);
  for (const auto& [x, v] : ai.entries()) {
    if (auto w = aj.value(x); w && *w != v) return x;
  }
  return std::nullopt;
}

namespace {

RadonWitness certify(const ConceptClass& c, std::vector<Concept> concepts, std::string_view op) {
  if (!is_radon_independent(c, concepts)) {
    throw InvariantViolation(std::string(op) + ": constructed concepts are not Radon independent");
  }
  RadonWitness w{std::move(concepts), 0};
  w.certified_size = w.concepts.size();
  return w;
}

}  // namespace

RadonWitness radon_witness_from_shattering(const ConceptClass& c) {
  require_nonempty(c, "radon_witness_from_shattering");
  const std::size_t d = vc(c);
  if (d < 1) throw PreconditionError("radon_witness_from_shattering: requires vc >= 1");
  const auto shattered = first_shattered_set(c, d);
  if (!shattered) throw InvariantViolation("radon_witness_from_shattering: no shattered set of size vc");

  const std::size_t k = static_cast<std::size_t>(ilog2(2 * d + 2));
  const std::size_t partitions = (std::size_t{1} << (k - 1)) - 1;  // ≤ d
  // Partition p (1-based) puts concept i ≥ 1 into J when bit i-1 of p is set;
  // concept 0 is always in I. Coordinate shattered[p-1] carries it.
  std::vector<Concept> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<PartialAssignment::Entry> trace;
    for (std::size_t p = 1; p <= partitions; ++p) {
      const bool in_j = i > 0 && ((p >> (i - 1)) & 1U);
      trace.emplace_back((*shattered)[p - 1], in_j);
    }
    auto matching = restrict_to(c, PartialAssignment(std::move(trace)));
    if (matching.empty()) throw InvariantViolation("radon_witness_from_shattering: trace not realized");
    out.push_back(matching[0]);
  }
  return certify(c, std::move(out), "radon_witness_from_shattering");
}

RadonWitness radon_witness_maximum(const ConceptClass& c) {
  require_nonempty(c, "radon_witness_maximum");
  if (c.is_full_cube()) throw PreconditionError("radon_witness_maximum: class is the full cube");
  if (!is_maximum(c)) throw PreconditionError("radon_witness_maximum: class is not maximum");
  const std::size_t d = vc(c);
  if (d == 0 || d >= c.domain_size()) throw PreconditionError("radon_witness_maximum: requires 0 < vc < n");

  CoordSet x(d + 1);
  for (std::size_t i = 0; i <= d; ++i) x[i] = i;
  const auto forbidden = forbidden_trace(c, x);

  std::vector<Concept> out;
  for (std::size_t flip = 0; flip <= d; ++flip) {
    std::vector<PartialAssignment::Entry> trace = forbidden.entries();
    trace[flip].second = !trace[flip].second;
    auto matching = restrict_to(c, PartialAssignment(std::move(trace)));
    if (matching.empty()) throw InvariantViolation("radon_witness_maximum: flipped trace not realized");
    out.push_back(matching[0]);
  }
  return certify(c, std::move(out), "radon_witness_maximum");
}

}  // namespace shatter
