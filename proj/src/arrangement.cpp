#include "shatter/arrangement.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>

#include "combinations.hpp"
#include "shatter/errors.hpp"

namespace shatter {

Arrangement::Arrangement(std::size_t dimension, std::vector<Hyperplane> hyperplanes)
    : dimension_{dimension}, hyperplanes_{std::move(hyperplanes)} {
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.normal.size() != dimension_) {
      throw PreconditionError("hyperplane " + std::to_string(i + 1) + " has " + std::to_string(h.normal.size()) +
                              " coefficients, expected " + std::to_string(dimension_));
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& r) { return r == 0; })) {
      throw PreconditionError("hyperplane " + std::to_string(i + 1) + " has a zero normal");
    }
  }
}

// ---------------------------------------------------------------------------
// Text formats

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  const boost::multiprecision::cpp_int p{std::string(num)};
  const boost::multiprecision::cpp_int q{std::string(den)};
  if (q == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string format_rational(const Rational& r) {
  const auto q = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (q != 1) out += "/" + q.str();
  return out;
}

Arrangement parse_arrangement(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> line_numbers;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream fields(raw);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(fields), std::istream_iterator<std::string>()};
    lines.push_back(std::move(tokens));
    line_numbers.push_back(no);
  }
  if (lines.empty()) throw ParseError(0, "arrangement file is empty");
  if (lines[0].size() != 2) throw ParseError(line_numbers[0], "header must be 'd n'");
  std::size_t d = 0, n = 0;
  try {
    d = std::stoul(lines[0][0]);
    n = std::stoul(lines[0][1]);
  } catch (const std::exception&) {
    throw ParseError(line_numbers[0], "header must be two non-negative integers");
  }
  if (d == 0) throw ParseError(line_numbers[0], "dimension must be at least 1");
  if (lines.size() - 1 != n) {
    throw ParseError(line_numbers[0], "header announces " + std::to_string(n) + " hyperplanes, file has " +
                                          std::to_string(lines.size() - 1));
  }
  std::vector<Hyperplane> hs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != d + 1) {
      throw ParseError(line_numbers[i], "expected " + std::to_string(d + 1) + " rationals, got " +
                                            std::to_string(lines[i].size()));
    }
    Hyperplane h;
    try {
      for (std::size_t j = 0; j < d; ++j) h.normal.push_back(parse_rational(lines[i][j]));
      h.offset = parse_rational(lines[i][d]);
    } catch (const ParseError& e) {
      throw ParseError(line_numbers[i], e.what());
    }
    hs.push_back(std::move(h));
  }
  try {
    return Arrangement(d, std::move(hs));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

Arrangement read_arrangement(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_arrangement(text);
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
  out << a.dimension() << ' ' << a.size() << '\n';
  for (const auto& h : a.hyperplanes()) {
    for (const auto& r : h.normal) out << format_rational(r) << ' ';
    out << format_rational(h.offset) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Strict feasibility

namespace {

// coeffs · x > rhs
struct Strict {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Scales so the first nonzero coefficient has magnitude 1. Returns false for
// an all-zero row.
bool normalize(Strict& s) {
  auto it = std::find_if(s.coeffs.begin(), s.coeffs.end(), [](const Rational& r) { return r != 0; });
  if (it == s.coeffs.end()) return false;
  const Rational scale = abs(*it);
  for (auto& c : s.coeffs) c /= scale;
  s.rhs /= scale;
  return true;
}

// Keeps only the tightest bound per direction. Returns false when a constant
// row is violated.
bool simplify(std::vector<Strict>& rows) {
  std::vector<Strict> kept;
  kept.reserve(rows.size());
  for (auto& r : rows) {
    if (!normalize(r)) {
      if (!(0 > r.rhs)) return false;
      continue;
    }
    kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end(), [](const Strict& a, const Strict& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs > b.rhs;
  });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Strict& a, const Strict& b) { return a.coeffs == b.coeffs; }),
             kept.end());
  rows = std::move(kept);
  return true;
}

bool strictly_feasible(std::vector<Strict> rows, std::size_t vars) {
  if (!simplify(rows)) return false;
  for (std::size_t v = vars; v-- > 0;) {
    std::vector<Strict> pos, neg, next;
    for (auto& r : rows) {
      if (r.coeffs[v] > 0) {
        pos.push_back(std::move(r));
      } else if (r.coeffs[v] < 0) {
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    // x_v is unbounded on one side: those rows can always be met.
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational wp = -q.coeffs[v];
        const Rational wq = p.coeffs[v];
        Strict combined;
        combined.coeffs.resize(vars);
        for (std::size_t i = 0; i < vars; ++i) combined.coeffs[i] = wp * p.coeffs[i] + wq * q.coeffs[i];
        combined.coeffs[v] = 0;
        combined.rhs = wp * p.rhs + wq * q.rhs;
        next.push_back(std::move(combined));
      }
    }
    rows = std::move(next);
    if (!simplify(rows)) return false;
  }
  return rows.empty();
}

std::vector<Strict> system_for(const Arrangement& a, const Concept& signs, std::size_t count) {
  std::vector<Strict> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& h = a[i];
    Strict s{h.normal, h.offset};
    if (!signs.test(i)) {
      for (auto& c : s.coeffs) c = -c;
      s.rhs = -s.rhs;
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

void enumerate_cells(const Arrangement& a, Concept& prefix, std::size_t depth, std::vector<Concept>& out) {
  if (depth == a.size()) {
    out.push_back(prefix);
    return;
  }
  for (bool sign : {false, true}) {
    prefix.set(depth, sign);
    // An infeasible prefix cannot be completed.
    if (strictly_feasible(system_for(a, prefix, depth + 1), a.dimension())) {
      enumerate_cells(a, prefix, depth + 1, out);
    }
  }
  prefix.set(depth, false);
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

bool sign_pattern_feasible(const Arrangement& a, const Concept& signs) {
  if (signs.size() != a.size()) {
    throw PreconditionError("sign pattern has length " + std::to_string(signs.size()) + ", arrangement has " +
                            std::to_string(a.size()) + " hyperplanes");
  }
  return strictly_feasible(system_for(a, signs, a.size()), a.dimension());
}

std::optional<Concept> sign_vector_at(const Arrangement& a, std::span<const Rational> point) {
  if (point.size() != a.dimension()) throw PreconditionError("sign_vector_at: point has wrong dimension");
  Concept out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational value = 0;
    for (std::size_t j = 0; j < point.size(); ++j) value += a[i].normal[j] * point[j];
    if (value == a[i].offset) return std::nullopt;
    out.set(i, value > a[i].offset);
  }
  return out;
}

bool is_generic(const Arrangement& a) {
  const std::size_t d = a.dimension();
  const std::size_t n = a.size();
  // Independence of every min(n, d)-subset covers all smaller subsets.
  const std::size_t k = std::min(n, d);
  bool ok = detail::for_each_combination(n, k, [&](const CoordSet& s) {
    std::vector<std::vector<Rational>> m;
    for (auto i : s) m.push_back(a[i].normal);
    return rank(std::move(m)) == k;
  });
  if (!ok || n < d + 1) return ok;
  return detail::for_each_combination(n, d + 1, [&](const CoordSet& s) {
    std::vector<std::vector<Rational>> m;
    for (auto i : s) {
      auto row = a[i].normal;
      row.push_back(a[i].offset);
      m.push_back(std::move(row));
    }
    return rank(std::move(m)) == d + 1;
  });
}

ConceptClass gen_arrangement_class(const Arrangement& a) {
  std::vector<Concept> cells;
  Concept prefix(a.size());
  enumerate_cells(a, prefix, 0, cells);
  return ConceptClass(a.size(), std::move(cells));
}

// ---------------------------------------------------------------------------
// Generators

Arrangement gen_random_generic_arrangement(std::size_t d, std::size_t n, std::uint64_t seed,
                                           std::size_t max_attempts) {
  if (d < 1 || n < 1) throw PreconditionError("random arrangement needs d >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
      Hyperplane h;
      do {
        h.normal.clear();
        for (std::size_t j = 0; j < d; ++j) h.normal.emplace_back(coeff(rng));
      } while (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& r) { return r == 0; }));
      h.offset = coeff(rng);
      hs.push_back(std::move(h));
    }
    Arrangement a(d, std::move(hs));
    if (is_generic(a)) return a;
  }
  throw ResourceLimit("no generic arrangement after " + std::to_string(max_attempts) + " attempts");
}

Arrangement gen_simplex_arrangement(std::size_t d) {
  if (d < 1) throw PreconditionError("simplex arrangement needs d >= 1");
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < d; ++i) {
    Hyperplane h{std::vector<Rational>(d, Rational(0)), Rational(0)};
    h.normal[i] = 1;
    hs.push_back(std::move(h));
  }
  hs.push_back(Hyperplane{std::vector<Rational>(d, Rational(-1)), Rational(-1)});
  return Arrangement(d, std::move(hs));
}

std::vector<std::vector<Rational>> simplex_vertices(std::size_t d) {
  std::vector<std::vector<Rational>> out(d + 1, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 1; j <= d; ++j) out[j][j - 1] = 1;
  return out;
}

Arrangement gen_shattered_points_arrangement(std::size_t d, std::uint64_t seed) {
  if (d < 1 || d > 3) throw PreconditionError("shattered-points arrangement supports 1 <= d <= 3");
  const std::size_t subsets = std::size_t{1} << (d + 1);
  const auto vertices = simplex_vertices(d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> noise(-1000, 1000);
  constexpr std::size_t kAttempts = 64;

  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    // |noise · p| + |noise| ≤ 2000 at a vertex; the base margin is 1/3.
    const Rational eps(1, 8000 * static_cast<long long>(attempt + 1));
    std::vector<Hyperplane> hs;
    for (std::size_t s = 0; s < subsets; ++s) {
      // Σ_{j∈S} λ_j(x) - 1/3 > 0 with barycentric λ_0 = 1 - Σx, λ_j = x_j.
      Hyperplane h{std::vector<Rational>(d, Rational(0)), Rational(1, 3)};
      if (s & 1U) {
        for (auto& c : h.normal) c -= 1;
        h.offset -= 1;
      }
      for (std::size_t j = 1; j <= d; ++j) {
        if ((s >> j) & 1U) h.normal[j - 1] += 1;
      }
      for (auto& c : h.normal) c += eps * noise(rng);
      h.offset += eps * noise(rng);
      hs.push_back(std::move(h));
    }
    bool nonzero = std::all_of(hs.begin(), hs.end(), [](const Hyperplane& h) {
      return std::any_of(h.normal.begin(), h.normal.end(), [](const Rational& r) { return r != 0; });
    });
    if (!nonzero) continue;
    Arrangement a(d, std::move(hs));
    bool separates = true;
    for (std::size_t j = 0; j <= d && separates; ++j) {
      auto sv = sign_vector_at(a, vertices[j]);
      if (!sv) {
        separates = false;
        break;
      }
      for (std::size_t s = 0; s < subsets; ++s) separates = separates && (sv->test(s) == (((s >> j) & 1U) != 0));
    }
    if (separates && is_generic(a)) return a;
  }
  throw ResourceLimit("shattered-points perturbation did not produce a generic arrangement");
}

Arrangement gen_three_lines_arrangement() {
  auto line = [](Rational a1, Rational a2, Rational b) { return Hyperplane{{a1, a2}, b}; };
  return Arrangement(2, {line(-1, 1, 0), line(Rational(5, 4), 1, Rational(3, 4)), line(0, 1, Rational(13, 10))});
}

}  // namespace shatter
