#pragma once

#include <cstddef>
#include <vector>

namespace shatter::detail {

/// Calls fn(combo) for every k-subset of {0..n-1} in lexicographic order
/// until fn returns false. Returns false when stopped early.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(combo))) return false;
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace shatter::detail
