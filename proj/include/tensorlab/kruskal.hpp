#ifndef TENSORLAB_KRUSKAL_HPP
#define TENSORLAB_KRUSKAL_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tensorlab/tensor.hpp"

namespace tensorlab {

struct GeneralPositionWitness {
  std::size_t mode = 0;  // 0-based
  IndexSet subset;       // 0-based, |subset| = requested d_mode, deficient span
};

struct GeneralPositionReport {
  std::vector<std::size_t> requested;
  bool holds = true;
  std::optional<GeneralPositionWitness> witness;
};

struct UniquenessCertificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> kruskal_ranks;
  long long inequality_lhs = 0;  // 2n - 1
  long long inequality_rhs = 0;  // Σ (k_j - 1)
  bool certified = false;
  /// Empty when certified; otherwise "TooFewModes", "TooFewVectors" or "InequalityFails".
  std::string reason;
};

/// Outcome of the Γ-rank classifier. When applicable, `rank_is_target` tells
/// whether sum over Γ has rank exactly `target` (true iff |Γ| = target).
struct GammaRankPrediction {
  bool applicable = false;
  std::size_t target = 0;
  std::size_t gamma_size = 0;
  bool rank_is_target = false;
  long long lhs = 0;  // n + r - 1
  long long rhs = 0;  // Σ (k_j - 1)
};

enum class BipartiteVerdict { nonzero_verified, premise_failed };

namespace detail {

template <ExactScalar S>
bool subset_independent(const std::vector<Vector<S>>& factors, const IndexSet& subset) {
  Matrix<S> m(factors.front().size(), static_cast<Index>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) m.col(static_cast<Index>(i)) = factors[subset[i]];
  return matrix_rank(m) == static_cast<Index>(subset.size());
}

/// First k-subset (lexicographic) whose mode factors are dependent.
template <ExactScalar S>
std::optional<IndexSet> first_dependent_subset(const std::vector<Vector<S>>& factors, std::size_t k) {
  std::optional<IndexSet> found;
  for_each_combination(factors.size(), k, [&](const IndexSet& idx) {
    if (subset_independent(factors, idx)) return true;
    found = idx;
    return false;
  });
  return found;
}

inline long long kruskal_sum(const std::vector<std::size_t>& d) {
  long long total = 0;
  for (auto dj : d) total += static_cast<long long>(dj) - 1;
  return total;
}

}  // namespace detail

/// Largest k such that every k of the mode-j factors are independent.
/// Searched downward from min(n, dims[j]).
template <ExactScalar S>
std::size_t kruskal_rank(const ProductVectorSet<S>& s, std::size_t j) {
  if (j >= s.modes()) throw Error(Errc::IndexOutOfRange, "mode " + std::to_string(j + 1) + " out of range");
  const auto factors = s.mode_factors(j);
  for (std::size_t k = std::min(s.size(), s.signature().dim(j)); k >= 1; --k)
    if (!detail::first_dependent_subset(factors, k)) return k;
  return 1;  // unreachable: factors are nonzero
}

template <ExactScalar S>
std::vector<std::size_t> kruskal_ranks(const ProductVectorSet<S>& s) {
  std::vector<std::size_t> k;
  for (std::size_t j = 0; j < s.modes(); ++j) k.push_back(kruskal_rank(s, j));
  return k;
}

template <ExactScalar S>
GeneralPositionReport check_general_position(const ProductVectorSet<S>& s, const std::vector<std::size_t>& d) {
  if (d.size() != s.modes())
    throw Error(Errc::BadDimensionRequest, "expected " + std::to_string(s.modes()) + " requested dimensions");
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] < 1 || d[j] > s.size() || d[j] > s.signature().dim(j))
      throw Error(Errc::BadDimensionRequest,
                  "d_" + std::to_string(j + 1) + " = " + std::to_string(d[j]) + " must lie in [1, min(n, dim)]",
                  "d[" + std::to_string(j) + "]");
  }
  GeneralPositionReport report{d, true, std::nullopt};
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (auto bad = detail::first_dependent_subset(s.mode_factors(j), d[j])) {
      report.holds = false;
      report.witness = GeneralPositionWitness{j, *bad};
      break;
    }
  }
  return report;
}

/// 2n - 1 <= Σ (d_j - 1).
inline bool kruskal_inequality(std::size_t n, const std::vector<std::size_t>& d) {
  return 2 * static_cast<long long>(n) - 1 <= detail::kruskal_sum(d);
}

template <ExactScalar S>
UniquenessCertificate certify_uniqueness(const ProductVectorSet<S>& s) {
  UniquenessCertificate c;
  c.n = s.size();
  c.m = s.modes();
  c.kruskal_ranks = kruskal_ranks(s);
  c.inequality_lhs = 2 * static_cast<long long>(c.n) - 1;
  c.inequality_rhs = detail::kruskal_sum(c.kruskal_ranks);
  if (c.n < 2)
    c.reason = "TooFewVectors";
  else if (c.m < 3)
    c.reason = "TooFewModes";
  else if (c.inequality_lhs > c.inequality_rhs)
    c.reason = "InequalityFails";
  c.certified = c.reason.empty();
  return c;
}

/// Γ-rank prediction for the kruskal-rank general position of s: applicable
/// when n + r - 1 <= Σ (k_j - 1).
template <ExactScalar S>
GammaRankPrediction classify_gamma_rank(const ProductVectorSet<S>& s, const IndexSet& gamma, std::size_t r) {
  for (auto a : gamma)
    if (a >= s.size()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(a + 1) + " out of range");
  if (r > s.size()) throw Error(Errc::InvalidArgument, "target rank exceeds n");
  const auto k = kruskal_ranks(s);
  GammaRankPrediction p;
  p.target = r;
  p.gamma_size = gamma.size();
  p.lhs = static_cast<long long>(s.size() + r) - 1;
  p.rhs = detail::kruskal_sum(k);
  // General position at d = k holds by definition of the Kruskal rank.
  p.applicable = check_general_position(s, k).holds && p.lhs <= p.rhs;
  p.rank_is_target = p.applicable && gamma.size() == r;
  return p;
}

/// Two-mode nonvanishing check: with span dims >= d and n + 1 <= d_1 + d_2,
/// the sum must be nonzero. Throws ContradictionDetected if it is not.
template <ExactScalar S>
BipartiteVerdict bipartite_nonzero_check(const ProductVectorSet<S>& s, const std::vector<std::size_t>& d) {
  if (s.modes() != 2)
    throw Error(Errc::WrongModeCount, "bipartite check needs exactly 2 modes, got " + std::to_string(s.modes()));
  if (d.size() != 2) throw Error(Errc::InvalidArgument, "expected two requested dimensions");
  const auto spans = span_dims(s);
  for (std::size_t j = 0; j < 2; ++j)
    if (spans[j] < d[j])
      throw Error(Errc::PreconditionFailed, "span dimension of mode " + std::to_string(j + 1) + " is below d");
  if (s.size() + 1 > d[0] + d[1]) return BipartiteVerdict::premise_failed;
  // Sylvester: rank(X_1 X_2^T) >= rank(X_1) + rank(X_2) - n >= 1.
  const Matrix<S> x1 = columns_matrix<S>(s.mode_factors(0));
  const Matrix<S> x2 = columns_matrix<S>(s.mode_factors(1));
  const Matrix<S> product = x1 * x2.transpose();
  if (sum_set(s).is_zero() || matrix_rank(product) == 0)
    throw Error(Errc::ContradictionDetected, "premise n+1 <= d_1+d_2 holds but the sum vanishes");
  return BipartiteVerdict::nonzero_verified;
}

}  // namespace tensorlab

#endif  // TENSORLAB_KRUSKAL_HPP
