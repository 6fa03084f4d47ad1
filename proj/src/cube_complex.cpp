#include "shatter/cube_complex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "combinations.hpp"

namespace shatter {

bool Cube::is_subcube_of(const Cube& other) const {
  if (!std::includes(other.free.begin(), other.free.end(), free.begin(), free.end())) return false;
  // other's fixed part must be f restricted to [n] \ other.free.
  return std::all_of(other.fixed.entries().begin(), other.fixed.entries().end(),
                     [&](const PartialAssignment::Entry& e) { return fixed.value(e.first) == e.second; });
}

bool Cube::operator<(const Cube& other) const {
  if (free.size() != other.free.size()) return free.size() < other.free.size();
  if (free != other.free) return free < other.free;
  return fixed.entries() < other.fixed.entries();
}

std::size_t CubeComplex::cube_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dimension) total += level.size();
  return total;
}

std::vector<std::size_t> CubeComplex::counts() const {
  std::vector<std::size_t> out;
  out.reserve(by_dimension.size());
  for (const auto& level : by_dimension) out.push_back(level.size());
  return out;
}

namespace {

// Cubes with free set exactly y: group concepts by their values off y.
void cubes_on(const ConceptClass& c, const CoordSet& y, std::vector<Cube>& out) {
  const std::size_t want = std::size_t{1} << y.size();
  std::vector<Concept> keys;
  keys.reserve(c.size());
  for (const auto& member : c) {
    Concept key = member;
    for (auto x : y) key.set(x, false);
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  std::vector<PartialAssignment::Entry> fixed;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if (j - i == want) {
      fixed.clear();
      for (std::size_t x = 0, k = 0; x < c.domain_size(); ++x) {
        if (k < y.size() && y[k] == x) {
          ++k;
          continue;
        }
        fixed.emplace_back(x, keys[i].test(x));
      }
      out.push_back(Cube{y, PartialAssignment(fixed)});
    }
    i = j;
  }
}

}  // namespace

CubeComplex enumerate_cubes(const ConceptClass& c) {
  require_nonempty(c, "enumerate_cubes");
  CubeComplex q;
  q.base = c;
  // A cube on Y strongly shatters, hence shatters, Y: |Y| ≤ vc(C).
  const std::size_t top = vc(c);
  for (std::size_t k = 0; k <= top; ++k) {
    std::vector<Cube> level;
    detail::for_each_combination(c.domain_size(), k, [&](const CoordSet& y) {
      cubes_on(c, y, level);
      return true;
    });
    if (level.empty()) break;
    std::sort(level.begin(), level.end());
    q.by_dimension.push_back(std::move(level));
  }

  for (std::size_t k = 0; k < q.by_dimension.size(); ++k) {
    for (const auto& cube : q.by_dimension[k]) {
      bool is_maximal = true;
      if (k + 1 < q.by_dimension.size()) {
        const auto& above = q.by_dimension[k + 1];
        for (const auto& [x, bit] : cube.fixed.entries()) {
          Cube bigger;
          bigger.free = cube.free;
          bigger.free.insert(std::lower_bound(bigger.free.begin(), bigger.free.end(), x), x);
          std::vector<PartialAssignment::Entry> rest;
          for (const auto& e : cube.fixed.entries()) {
            if (e.first != x) rest.push_back(e);
          }
          bigger.fixed = PartialAssignment(std::move(rest));
          if (std::binary_search(above.begin(), above.end(), bigger)) {
            is_maximal = false;
            break;
          }
        }
      }
      if (is_maximal) q.maximal.push_back(cube);
    }
  }
  return q;
}

std::vector<CoordSet> strongly_shattered_sets(const ConceptClass& c) {
  std::vector<CoordSet> out;
  if (c.empty()) return out;
  const auto q = enumerate_cubes(c);
  for (const auto& level : q.by_dimension) {
    for (const auto& cube : level) {
      if (out.empty() || out.back() != cube.free) out.push_back(cube.free);
    }
  }
  return out;
}

std::size_t complex_dimension(const ConceptClass& c) { return enumerate_cubes(c).dimension(); }

void export_complex(const CubeComplex& q, std::ostream& out) {
  out << "n " << q.base.domain_size() << " dim " << q.dimension() << '\n';
  for (const auto& level : q.by_dimension) {
    for (const auto& cube : level) {
      out << "Y=" << format_coords(cube.free) << " f=" << cube.fixed.to_string() << '\n';
    }
  }
  if (!out) throw std::runtime_error("export_complex: write failed");
}

std::string export_complex(const CubeComplex& q) {
  std::ostringstream s;
  export_complex(q, s);
  return s.str();
}

}  // namespace shatter
