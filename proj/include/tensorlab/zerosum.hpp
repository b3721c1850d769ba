#ifndef TENSORLAB_ZEROSUM_HPP
#define TENSORLAB_ZEROSUM_HPP

#include <algorithm>
#include <bit>
#include <vector>

#include "tensorlab/tensor.hpp"

namespace tensorlab {

inline constexpr std::size_t kMaxZeroSumVectors = 24;

/// Family of disjoint nonempty blocks covering [n] (0-based).
struct Partition {
  std::size_t ground = 0;
  std::vector<IndexSet> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Every nonempty Γ with zero sum, sorted by (popcount, lex), as masks.
/// Walks subsets in Gray-code order, one tensor update per step.
template <ExactScalar S>
std::vector<Mask> zero_sum_masks(const ProductVectorSet<S>& s) {
  const std::size_t n = s.size();
  if (n > kMaxZeroSumVectors)
    throw Error(Errc::TooManyVectors, "zero-sum enumeration is limited to " + std::to_string(kMaxZeroSumVectors) +
                                          " vectors, got " + std::to_string(n));
  std::vector<Vector<S>> expanded;
  expanded.reserve(n);
  for (const auto& x : s) expanded.push_back(expand_product(x).entries());

  std::vector<Mask> out;
  Vector<S> acc = Vector<S>::Zero(expanded.front().size());
  Mask gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto bit = static_cast<unsigned>(std::countr_zero(i));
    const Mask flip = Mask{1} << bit;
    if (gray & flip)
      acc -= expanded[bit];
    else
      acc += expanded[bit];
    gray ^= flip;
    if (is_zero(acc)) out.push_back(gray);
  }
  std::sort(out.begin(), out.end(), popcount_lex_less);
  return out;
}

template <ExactScalar S>
std::vector<IndexSet> zero_sum_subsets(const ProductVectorSet<S>& s) {
  std::vector<IndexSet> out;
  for (Mask m : zero_sum_masks(s)) out.push_back(mask_to_indices(m));
  return out;
}

namespace detail {

template <ExactScalar S>
void require_zero_total(const ProductVectorSet<S>& s) {
  if (!sum_set(s).is_zero()) throw Error(Errc::NonzeroTotalSum, "the vectors do not sum to zero");
}

}  // namespace detail

/// Greedy split into irreducible zero-sum blocks: each block is the
/// (popcount, lex)-smallest zero-sum subset of the indices not yet used.
template <ExactScalar S>
Partition minimal_zero_partition(const ProductVectorSet<S>& s) {
  detail::require_zero_total(s);
  const auto zeros = zero_sum_masks(s);
  Partition p{s.size(), {}};
  Mask remaining = full_mask(s.size());
  while (remaining != 0) {
    auto it = std::find_if(zeros.begin(), zeros.end(), [&](Mask z) { return (z & ~remaining) == 0; });
    // The remaining indices always sum to zero, so `it` cannot be end().
    p.blocks.push_back(mask_to_indices(*it));
    remaining &= ~*it;
  }
  return p;
}

/// True iff no nonempty strict subset sums to zero. Both the full form and
/// the half-size form (1 <= |Γ| <= floor(n/2)) are computed and must agree.
template <ExactScalar S>
bool is_irreducible(const ProductVectorSet<S>& s) {
  detail::require_zero_total(s);
  const std::size_t n = s.size();
  const Mask full = full_mask(n);
  bool strict_zero = false;
  bool small_zero = false;
  for (Mask z : zero_sum_masks(s)) {
    if (z == full) continue;
    strict_zero = true;
    if (static_cast<std::size_t>(std::popcount(z)) <= n / 2) small_zero = true;
  }
  if (strict_zero != small_zero)
    throw Error(Errc::ContradictionDetected, "complementation failed: strict and half-size irreducibility differ");
  return !strict_zero;
}

}  // namespace tensorlab

#endif  // TENSORLAB_ZEROSUM_HPP
