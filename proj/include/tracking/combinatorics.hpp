#pragma once

#include <cstddef>
#include <vector>

namespace tracking {

/// Advances idx (a strictly increasing index vector into [0, n)) to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] != i + n - r) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Visits every r-subset of [0, n) for r = 0..n in ascending size,
/// lexicographic within a size. The callback receives the index vector and
/// returns false to stop early; for_each_subset_ascending then returns false.
template <typename Fn>
bool for_each_subset_ascending(std::size_t n, Fn&& fn) {
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (!fn(idx)) return false;
      if (size == 0 || !next_combination(idx, n)) break;
    }
  }
  return true;
}

}  // namespace tracking
