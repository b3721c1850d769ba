#ifndef TENSORLAB_COMBINATORICS_HPP
#define TENSORLAB_COMBINATORICS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace tensorlab {

/// Sorted list of 0-based indices.
using IndexSet = std::vector<std::size_t>;
/// Subset of [n] for n <= 32, bit a set iff index a is a member.
using Mask = std::uint32_t;

inline IndexSet mask_to_indices(Mask m) {
  IndexSet out;
  for (std::size_t a = 0; m != 0; ++a, m >>= 1)
    if (m & 1u) out.push_back(a);
  return out;
}

inline Mask indices_to_mask(const IndexSet& s) {
  Mask m = 0;
  for (auto a : s) m |= Mask{1} << a;
  return m;
}

inline Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// (popcount, lexicographic on sorted index lists) order.
inline bool popcount_lex_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // The smaller list is the one holding the least element of the symmetric difference.
  const Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

/// Calls f(indices) for every k-subset of [n] in lexicographic order; stops
/// early when f returns false. Returns false iff stopped early.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const IndexSet&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f(indices) for every non-decreasing k-tuple over [n] (multisets) in
/// lexicographic order, with the first entry restricted to [first_lo, first_hi).
/// Stops early when f returns false.
template <class F>
bool for_each_multiset(std::size_t n, std::size_t k, F&& f, std::size_t first_lo = 0,
                       std::size_t first_hi = std::numeric_limits<std::size_t>::max()) {
  first_hi = std::min(first_hi, n);
  if (first_lo >= first_hi) return true;
  if (k == 0) return f(IndexSet{});
  IndexSet idx(k, first_lo);
  while (true) {
    if (!f(static_cast<const IndexSet&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - 1) --i;
    if (i == 0) return true;
    if (i == 1 && idx[0] + 1 >= first_hi) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
  }
}

/// Number of k-multisets over n symbols, saturating at max.
inline std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n + k - 1, k) computed incrementally; each prefix product is an integer.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace tensorlab

#endif  // TENSORLAB_COMBINATORICS_HPP
