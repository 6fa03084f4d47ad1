#include "shatter/relabel.hpp"

#include <algorithm>
#include <numeric>

#include "shatter/errors.hpp"

namespace shatter {

Relabeling Relabeling::identity(std::size_t n) {
  Relabeling r{std::vector<std::size_t>(n), Concept(n)};
  std::iota(r.permutation.begin(), r.permutation.end(), std::size_t{0});
  return r;
}

Concept apply(const Relabeling& r, const Concept& c) {
  if (c.size() != r.permutation.size()) throw PreconditionError("relabeling length mismatch");
  Concept out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.set(r.permutation[i], c.test(i) != r.flip.test(i));
  return out;
}

ConceptClass apply(const Relabeling& r, const ConceptClass& c) {
  std::vector<Concept> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(apply(r, x));
  return ConceptClass(c.domain_size(), std::move(out));
}

Relabeling random_relabeling(std::size_t n, std::mt19937_64& rng) {
  Relabeling r = Relabeling::identity(n);
  std::shuffle(r.permutation.begin(), r.permutation.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) r.flip.set(i, coin(rng));
  return r;
}

ConceptClass canonical_form(const ConceptClass& c) {
  const std::size_t n = c.domain_size();
  if (n > 10) throw PreconditionError("canonical_form: domain size above 10");
  if (c.empty()) return c;

  std::vector<std::uint64_t> rows;
  rows.reserve(c.size());
  for (const auto& x : c) rows.push_back(x.to_integer());

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> permuted(rows.size());
  std::vector<std::uint64_t> image(rows.size());
  do {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::uint64_t v = 0;
      for (std::size_t b = 0; b < n; ++b) {
        // Integer bit (n-1-b) is coordinate b.
        if ((rows[i] >> (n - 1 - b)) & 1U) v |= std::uint64_t{1} << (n - 1 - perm[b]);
      }
      permuted[i] = v;
    }
    // The minimal image contains the zero concept, so the flip must map some
    // concept to zero.
    for (auto mask : permuted) {
      // Image minimum is always 0; compare the runner-up before sorting.
      std::uint64_t second = ~std::uint64_t{0};
      for (std::size_t i = 0; i < permuted.size(); ++i) {
        image[i] = permuted[i] ^ mask;
        if (image[i] != 0) second = std::min(second, image[i]);
      }
      if (best.size() > 1 && second > best[1]) continue;
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Concept> out;
  out.reserve(best.size());
  for (auto v : best) out.push_back(Concept::from_integer(v, n));
  return ConceptClass(n, std::move(out));
}

bool isomorphic(const ConceptClass& a, const ConceptClass& b) {
  if (a.domain_size() != b.domain_size() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace shatter
