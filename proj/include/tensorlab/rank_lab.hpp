#ifndef TENSORLAB_RANK_LAB_HPP
#define TENSORLAB_RANK_LAB_HPP

/// \file rank_lab.hpp
/// Brute-force tensor-rank oracles over small prime fields, plus the
/// two-term product criterion and the two-dimensional subspace classifier.
///
/// Decompositions are handled as multisets of canonical product vectors, so
/// "unique up to permutation and rescaling" is a structural comparison.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensorlab/kruskal.hpp"
#include "tensorlab/tensor.hpp"

namespace tensorlab {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

enum class RankMethod { flattening_bound_met, exhaustive };

template <ExactScalar S>
struct RankResult {
  std::size_t rank = 0;
  std::optional<std::vector<ProductVector<S>>> witness;
  RankMethod method = RankMethod::flattening_bound_met;
  std::size_t lower_bound = 0;  // largest unfolding rank
};

template <ExactScalar S>
struct UniquenessCheck {
  bool unique = false;
  std::size_t count = 0;                                     // number of distinct multisets
  std::vector<std::vector<ProductVector<S>>> decompositions;  // up to kMaxReportedDecompositions
};

inline constexpr std::size_t kMaxReportedDecompositions = 8;

/// Trivial upper bound on rank: the column count of the cheapest unfolding.
inline std::size_t trivial_rank_bound(const ModeSignature& sig) {
  std::size_t best = sig.size();
  for (std::size_t j = 0; j < sig.modes(); ++j) best = std::min(best, sig.size() / sig.dim(j));
  return best;
}

/// Number of canonical product vectors: (p^{d_1} - 1) Π_{j>1} (p^{d_j} - 1)/(p - 1).
inline std::uint64_t product_vector_count(unsigned p, const ModeSignature& sig) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < sig.modes(); ++j) {
    std::uint64_t pd = 1;
    for (std::size_t i = 0; i < sig.dim(j); ++i) {
      if (pd > (std::uint64_t{1} << 40)) return UINT64_MAX;
      pd *= p;
    }
    const std::uint64_t factor = j == 0 ? pd - 1 : (pd - 1) / (p - 1);
    if (total > UINT64_MAX / factor) return UINT64_MAX;
    total *= factor;
  }
  return total;
}

namespace detail {

/// Nonzero vectors of F^d in lexicographic order; with `leading_one`, only
/// those whose first nonzero coordinate is 1.
template <FiniteScalar S>
std::vector<Vector<S>> enumerate_factor_vectors(std::size_t d, bool leading_one) {
  constexpr unsigned p = field_traits<S>::order;
  std::vector<Vector<S>> out;
  std::vector<unsigned> digits(d, 0);
  while (true) {
    // Advance the odometer (last coordinate fastest) and stop after wrap-around.
    std::size_t i = d;
    while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
    const auto lead = std::find_if(digits.begin(), digits.end(), [](unsigned x) { return x != 0; });
    if (leading_one && *lead != 1) continue;
    Vector<S> v(static_cast<Index>(d));
    for (std::size_t k = 0; k < d; ++k) v(static_cast<Index>(k)) = field_traits<S>::element(digits[k]);
    out.push_back(std::move(v));
  }
  return out;
}

template <FiniteScalar S>
std::string entries_key(const Vector<S>& v) {
  std::string key(static_cast<std::size_t>(v.size()), '\0');
  for (Index i = 0; i < v.size(); ++i) key[static_cast<std::size_t>(i)] = static_cast<char>(v(i).value());
  return key;
}

}  // namespace detail

/// Every canonical product vector of the signature, once each, in canonical
/// lexicographic order.
template <ExactScalar S>
std::vector<ProductVector<S>> enumerate_product_vectors(const ModeSignature& sig, std::uint64_t budget = kDefaultBudget) {
  if constexpr (!field_traits<S>::is_finite) {
    throw Error(Errc::RationalsNotEnumerable, "product vectors over Q cannot be enumerated");
  } else {
    const auto count = product_vector_count(field_traits<S>::order, sig);
    if (count > budget)
      throw Error(Errc::BudgetExceeded,
                  std::to_string(count) + " product vectors exceed the budget of " + std::to_string(budget));
    std::vector<std::vector<Vector<S>>> choices;
    for (std::size_t j = 0; j < sig.modes(); ++j) choices.push_back(detail::enumerate_factor_vectors<S>(sig.dim(j), j > 0));

    std::vector<ProductVector<S>> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> pick(sig.modes(), 0);
    while (true) {
      std::vector<Vector<S>> factors;
      factors.reserve(sig.modes());
      for (std::size_t j = 0; j < sig.modes(); ++j) factors.push_back(choices[j][pick[j]]);
      out.emplace_back(std::move(factors));
      std::size_t j = sig.modes();
      while (j > 0 && pick[j - 1] + 1 == choices[j - 1].size()) pick[--j] = 0;
      if (j == 0) break;
      ++pick[j - 1];
    }
    return out;
  }
}

/// Exhaustive rank search over one signature. Holds the enumerated product
/// vectors, a dense-tensor lookup table, and a cache of computed ranks.
template <ExactScalar S>
class RankOracle {
 public:
  explicit RankOracle(ModeSignature sig, std::uint64_t budget = kDefaultBudget)
      : sig_(std::move(sig)), budget_(budget), products_(enumerate_product_vectors<S>(sig_, budget)) {
    static_assert(field_traits<S>::is_finite, "rank oracles need a finite field");
    expanded_.reserve(products_.size());
    for (std::size_t i = 0; i < products_.size(); ++i) {
      expanded_.push_back(expand_product(products_[i]).entries());
      lookup_.emplace(detail::entries_key(expanded_.back()), i);
    }
  }

  const ModeSignature& signature() const noexcept { return sig_; }
  const std::vector<ProductVector<S>>& products() const noexcept { return products_; }

  /// Exact rank with a witness. Throws RankExceedsBound if rank > max_rank.
  RankResult<S> rank(const DenseTensor<S>& t, std::optional<std::size_t> max_rank = std::nullopt) {
    check_signature(t);
    const std::size_t bound = max_rank.value_or(trivial_rank_bound(sig_));
    RankResult<S> res;
    res.lower_bound = flattening_rank(t);
    if (t.is_zero()) {
      res.witness.emplace();
      return res;
    }
    if (res.lower_bound > bound) throw exceeds(res.lower_bound, bound);
    for (std::size_t r = std::max<std::size_t>(res.lower_bound, 1); r <= bound; ++r) {
      std::optional<std::vector<std::size_t>> found;
      search(t, r, [&](const std::vector<std::size_t>& idx) {
        found = idx;
        return false;
      });
      if (found) {
        res.rank = r;
        res.method = r == res.lower_bound ? RankMethod::flattening_bound_met : RankMethod::exhaustive;
        res.witness.emplace();
        for (auto i : *found) res.witness->push_back(products_[i]);
        cache_.emplace(detail::entries_key(t.entries()), r);
        return res;
      }
    }
    throw exceeds(bound + 1, bound);
  }

  /// Rank only, memoized.
  std::size_t rank_value(const DenseTensor<S>& t) {
    auto key = detail::entries_key(t.entries());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto r = rank(t).rank;
    cache_.emplace(std::move(key), r);
    return r;
  }

  /// All r-multisets of product vectors summing to t (count), reporting at
  /// most `keep` of them in canonical order.
  UniquenessCheck<S> decompositions(const DenseTensor<S>& t, std::size_t r, std::size_t keep = kMaxReportedDecompositions) {
    check_signature(t);
    UniquenessCheck<S> out;
    if (r == 0) {
      out.count = t.is_zero() ? 1 : 0;
      if (out.count) out.decompositions.emplace_back();
    } else {
      search(t, r, [&](const std::vector<std::size_t>& idx) {
        ++out.count;
        if (out.decompositions.size() < keep) {
          std::vector<ProductVector<S>> d;
          for (auto i : idx) d.push_back(products_[i]);
          out.decompositions.push_back(std::move(d));
        }
        return true;
      });
    }
    out.unique = out.count == 1;
    return out;
  }

 private:
  void check_signature(const DenseTensor<S>& t) const {
    if (t.signature() != sig_) throw Error(Errc::SignatureMismatch, "tensor signature differs from the oracle's");
  }

  Error exceeds(std::size_t lower, std::size_t bound) const {
    return Error(Errc::RankExceedsBound,
                 "rank exceeds the bound " + std::to_string(bound) + "; best lower bound " + std::to_string(lower));
  }

  /// Visits sorted index multisets of size r summing to t, in lexicographic
  /// order. The first r - 1 entries are enumerated; the last one is the
  /// residual looked up in the product table. `visit` returns false to stop.
  template <class Visit>
  void search(const DenseTensor<S>& t, std::size_t r, Visit&& visit) {
    const auto candidates = multiset_count(products_.size(), r - 1);
    if (candidates > budget_)
      throw Error(Errc::BudgetExceeded, "rank-" + std::to_string(r) + " search needs " + std::to_string(candidates) +
                                            " candidates, budget is " + std::to_string(budget_));
    std::vector<std::size_t> chosen;
    chosen.reserve(r);
    dfs(t.entries(), r - 1, 0, chosen, visit);
  }

  template <class Visit>
  bool dfs(const Vector<S>& residual, std::size_t remaining, std::size_t start, std::vector<std::size_t>& chosen,
           Visit& visit) {
    if (remaining == 0) {
      auto it = lookup_.find(detail::entries_key(residual));
      if (it == lookup_.end() || it->second < start) return true;
      chosen.push_back(it->second);
      const bool go_on = visit(static_cast<const std::vector<std::size_t>&>(chosen));
      chosen.pop_back();
      return go_on;
    }
    for (std::size_t i = start; i < products_.size(); ++i) {
      chosen.push_back(i);
      const bool go_on = dfs(Vector<S>(residual - expanded_[i]), remaining - 1, i, chosen, visit);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  ModeSignature sig_;
  std::uint64_t budget_;
  std::vector<ProductVector<S>> products_;
  std::vector<Vector<S>> expanded_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::unordered_map<std::string, std::size_t> cache_;
};

/// Exact tensor rank. Over Q only ranks 0 and 1 are decidable (via
/// unfoldings); anything higher throws RationalsNotEnumerable.
template <ExactScalar S>
RankResult<S> tensor_rank(const DenseTensor<S>& t, std::optional<std::size_t> max_rank = std::nullopt,
                          std::uint64_t budget = kDefaultBudget) {
  if constexpr (field_traits<S>::is_finite) {
    RankOracle<S> oracle(t.signature(), budget);
    return oracle.rank(t, max_rank);
  } else {
    RankResult<S> res;
    res.lower_bound = flattening_rank(t);
    if (res.lower_bound == 0) {
      res.witness.emplace();
      return res;
    }
    if (auto x = as_product(t)) {
      if (max_rank && *max_rank < 1)
        throw Error(Errc::RankExceedsBound, "rank exceeds the bound; best lower bound 1");
      res.rank = 1;
      res.witness.emplace(1, *x);
      return res;
    }
    throw Error(Errc::RationalsNotEnumerable,
                "rank above 1 over Q is not decidable here; flattening lower bound " + std::to_string(res.lower_bound));
  }
}

template <ExactScalar S>
UniquenessCheck<S> unique_decomposition_check(const DenseTensor<S>& t, std::size_t r,
                                              std::uint64_t budget = kDefaultBudget) {
  if constexpr (field_traits<S>::is_finite) {
    RankOracle<S> oracle(t.signature(), budget);
    const auto actual = oracle.rank(t).rank;
    if (actual != r)
      throw Error(Errc::WrongRank, "tensor has rank " + std::to_string(actual) + ", not " + std::to_string(r));
    return oracle.decompositions(t, r);
  } else {
    const auto res = tensor_rank(t, std::nullopt, budget);
    if (res.rank != r)
      throw Error(Errc::WrongRank, "tensor has rank " + std::to_string(res.rank) + ", not " + std::to_string(r));
    return UniquenessCheck<S>{true, 1, {*res.witness}};
  }
}

// ---------------------------------------------------------------------------
// Two-term sums

enum class PairKind { product, entangled, zero };

template <ExactScalar S>
struct PairSum {
  PairKind kind = PairKind::zero;
  std::size_t nonparallel_modes = 0;
  std::optional<ProductVector<S>> factored;  // set iff kind == product
};

/// Modes j where x1_j and x2_j are not parallel.
template <ExactScalar S>
std::vector<std::size_t> nonparallel_modes(const ProductVector<S>& x1, const ProductVector<S>& x2) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < x1.modes(); ++j) {
    Matrix<S> m(x1.factor(j).size(), 2);
    m.col(0) = x1.factor(j);
    m.col(1) = x2.factor(j);
    if (matrix_rank(m) == 2) out.push_back(j);
  }
  return out;
}

/// Classifies a1 x1 + a2 x2. With at most one non-parallel mode j the sum is
/// (a1 x1_j + a2 β x2_j) ⊗ x1_{∖j} where x2_{∖j} = β x1_{∖j}.
template <ExactScalar S>
PairSum<S> is_product_sum_pair(const ProductVector<S>& x1, const ProductVector<S>& x2, const S& a1, const S& a2) {
  if (x1.signature() != x2.signature()) throw Error(Errc::SignatureMismatch, "product vectors differ in signature");
  PairSum<S> out;
  const auto np = nonparallel_modes(x1, x2);
  out.nonparallel_modes = np.size();

  if (a1.is_zero() || a2.is_zero()) {
    if (a1.is_zero() && a2.is_zero()) return out;
    out.kind = PairKind::product;
    out.factored = a1.is_zero() ? x2.scaled(a2) : x1.scaled(a1);
    return out;
  }
  if (np.size() >= 2) {
    out.kind = PairKind::entangled;
    return out;
  }

  const std::size_t jstar = np.empty() ? 0 : np.front();
  S beta(1);
  for (std::size_t k = 0; k < x1.modes(); ++k) {
    if (k == jstar) continue;
    const Index lead = leading_index(x1.factor(k));
    beta = beta * (x2.factor(k)(lead) / x1.factor(k)(lead));
  }
  Vector<S> combined = a1 * x1.factor(jstar) + (a2 * beta) * x2.factor(jstar);
  if (is_zero(combined)) return out;
  auto factors = x1.factors();
  factors[jstar] = std::move(combined);
  out.kind = PairKind::product;
  out.factored.emplace(std::move(factors));
  return out;
}

/// For independent x_a with Σ α_a x_a a product vector, the number of modes
/// where the x_a are not all parallel. Throws ContradictionDetected if that
/// number exceeds n - 1.
template <ExactScalar S>
std::size_t nonparallel_mode_bound_check(const ProductVectorSet<S>& s, const std::vector<S>& coeffs) {
  if (coeffs.size() != s.size()) throw Error(Errc::PreconditionFailed, "one coefficient per vector is required");
  for (const auto& c : coeffs)
    if (c.is_zero()) throw Error(Errc::PreconditionFailed, "coefficients must be nonzero");
  if (matrix_rank(expansion_matrix(s)) != static_cast<Index>(s.size()))
    throw Error(Errc::PreconditionFailed, "the product vectors are linearly dependent");
  auto combo = DenseTensor<S>::zeros(s.signature());
  for (std::size_t a = 0; a < s.size(); ++a) combo += coeffs[a] * expand_product(s[a]);
  if (!is_product(combo)) throw Error(Errc::PreconditionFailed, "the linear combination is not a product vector");

  std::size_t count = 0;
  for (auto d : span_dims(s))
    if (d > 1) ++count;
  if (count + 1 > s.size())
    throw Error(Errc::ContradictionDetected, std::to_string(count) + " non-parallel modes exceed n - 1");
  return count;
}

// ---------------------------------------------------------------------------
// Two-dimensional subspaces

template <ExactScalar S>
struct SubspaceCategory {
  int category = 4;
  std::vector<DenseTensor<S>> product_lines;  // one representative per product line
  std::size_t lines_checked = 0;
};

/// Category 1: every line is product; 2: exactly two; 3: exactly one; 4: none.
/// Over F_p all p + 1 lines {v1} ∪ {c v1 + v2} are tested. Over Q the span
/// must be given by two product vectors.
template <ExactScalar S>
SubspaceCategory<S> classify_2d_subspace(const DenseTensor<S>& v1, const DenseTensor<S>& v2) {
  if (v1.signature() != v2.signature()) throw Error(Errc::SignatureMismatch, "tensors differ in signature");
  Matrix<S> pair(static_cast<Index>(v1.size()), 2);
  pair.col(0) = v1.entries();
  pair.col(1) = v2.entries();
  if (matrix_rank(pair) != 2) throw Error(Errc::NotIndependent, "the two tensors are linearly dependent");

  SubspaceCategory<S> out;
  if constexpr (field_traits<S>::is_finite) {
    constexpr unsigned p = field_traits<S>::order;
    std::vector<DenseTensor<S>> lines{v1};
    for (unsigned c = 0; c < p; ++c) lines.push_back(field_traits<S>::element(c) * v1 + v2);
    out.lines_checked = lines.size();
    for (auto& line : lines)
      if (is_product(line)) out.product_lines.push_back(std::move(line));
    const std::size_t k = out.product_lines.size();
    if (k == p + 1)
      out.category = 1;
    else if (k <= 2)
      out.category = 4 - static_cast<int>(k);
    else
      throw Error(Errc::ContradictionDetected,
                  std::to_string(k) + " of " + std::to_string(p + 1) + " lines are product; expected 0, 1, 2 or all");
  } else {
    auto x1 = as_product(v1);
    auto x2 = as_product(v2);
    if (!x1 || !x2)
      throw Error(Errc::RationalsRequireProductSpan, "over Q the subspace must be spanned by two product vectors");
    const auto pairsum = is_product_sum_pair(*x1, *x2, S(1), S(1));
    out.lines_checked = 2;
    out.product_lines = {v1, v2};
    out.category = pairsum.nonparallel_modes <= 1 ? 1 : 2;
  }
  return out;
}

}  // namespace tensorlab

#endif  // TENSORLAB_RANK_LAB_HPP
