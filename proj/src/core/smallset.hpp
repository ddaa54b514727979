// Index sets over the ground set [n] = {1,..,n}, stored as bitmasks
// (element i <-> bit i-1), plus the graded-lexicographic subset order
// used throughout for canonical indexing.
#pragma once

#include <cstdint>
#include <vector>

namespace gsd {

using Mask = std::uint32_t;

inline bool mask_has(Mask m, int elem) { return (m >> (elem - 1)) & 1u; }
inline Mask mask_of(int elem) { return Mask{1} << (elem - 1); }
inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline int mask_size(Mask m) { return __builtin_popcount(m); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = __builtin_ctz(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

// All subsets of `universe`, graded-lex: by cardinality, then
// lexicographic on the ascending element tuples.
inline std::vector<Mask> subsets_graded(Mask universe) {
  const std::vector<int> elems = mask_elements(universe);
  const int k = static_cast<int>(elems.size());
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << k);
  for (int size = 0; size <= k; ++size) {
    std::vector<int> idx(size);
    for (int t = 0; t < size; ++t) idx[t] = t;
    while (true) {
      Mask m = 0;
      for (int t = 0; t < size; ++t) m |= mask_of(elems[idx[t]]);
      out.push_back(m);
      if (size == 0) break;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int t = pos + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return out;
}

// Relabel a mask on [n] to [n-1] after removing element u (elements > u
// shift down by one).
inline Mask mask_drop_element(Mask m, int u) {
  Mask low = m & (mask_of(u) - 1);
  Mask high = m >> u;
  return low | (high << (u - 1));
}

}  // namespace gsd
