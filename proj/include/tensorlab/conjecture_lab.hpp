#ifndef TENSORLAB_CONJECTURE_LAB_HPP
#define TENSORLAB_CONJECTURE_LAB_HPP

/// \file conjecture_lab.hpp
/// Instance verifiers for the zero-sum conjecture and its proved special
/// cases, the tight-example family, and the pairing reduction to Kruskal's
/// theorem.
///
/// A verifier never throws on a falsified statement: it returns a Verdict
/// with status `counterexample` so that exhaustive searches run to the end.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorlab/rank_lab.hpp"
#include "tensorlab/zerosum.hpp"

namespace tensorlab {

enum class Status { holds, not_applicable, counterexample };

std::string_view to_string(Status s) noexcept;

enum class Target { conj13, thm32, thm41, conj52 };

std::string_view to_string(Target t) noexcept;
Target parse_target(std::string_view text);

struct Premise {
  std::string name;
  bool held = false;

  friend bool operator==(const Premise&, const Premise&) = default;
};

struct Verdict {
  Status status = Status::not_applicable;
  Target target = Target::conj13;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Premise> premises;
  /// Human-readable form of the concluding inequality, e.g. "n >= m + 2: 4 >= 4".
  std::string conclusion;
  /// Zero-sum strict subset found (conj13 holds).
  std::optional<IndexSet> witness;
  /// Rank of the total sum, for the rank versions.
  std::optional<std::size_t> rank;

  bool premises_held() const {
    for (const auto& p : premises)
      if (!p.held) return false;
    return true;
  }
};

namespace detail {

inline bool all_at_least(const std::vector<std::size_t>& v, std::size_t k) {
  for (auto x : v)
    if (x < k) return false;
  return true;
}

inline std::string inequality_text(const char* form, long long lhs, const char* op, long long rhs) {
  return std::string(form) + ": " + std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

/// Rank queries that stay exact over Q for ranks 0 and 1 and fall back to
/// the brute-force oracle over F_p.
template <ExactScalar S>
class RankQuery {
 public:
  RankQuery(const ModeSignature& sig, std::uint64_t budget, RankOracle<S>* shared)
      : sig_(sig), budget_(budget), shared_(shared) {}

  bool rank_at_most(const DenseTensor<S>& t, std::size_t k) {
    if (t.is_zero()) return true;
    if (k == 0) return false;
    if (is_product(t)) return true;
    if (k == 1) return false;
    return exact(t) <= k;
  }

  std::size_t exact(const DenseTensor<S>& t) {
    if (t.is_zero()) return 0;
    if (is_product(t)) return 1;
    if constexpr (field_traits<S>::is_finite) {
      if (shared_) return shared_->rank_value(t);
      if (!owned_) owned_ = std::make_unique<RankOracle<S>>(sig_, budget_);
      return owned_->rank_value(t);
    } else {
      throw Error(Errc::RationalsNotEnumerable, "rank above 1 over Q needs an oracle; use a prime field");
    }
  }

 private:
  ModeSignature sig_;
  std::uint64_t budget_;
  RankOracle<S>* shared_;
  std::conditional_t<field_traits<S>::is_finite, std::unique_ptr<RankOracle<S>>, std::nullptr_t> owned_{};
};

}  // namespace detail

/// Zero-sum conjecture on one instance, with d_j := span dimension of mode j.
template <ExactScalar S>
Verdict verify_conjecture_instance(const ProductVectorSet<S>& s) {
  Verdict v;
  v.target = Target::conj13;
  v.n = s.size();
  v.m = s.modes();
  const auto d = span_dims(s);
  const long long lhs = static_cast<long long>(v.n) - 1;
  const long long rhs = detail::kruskal_sum(d);
  v.premises = {{"n >= 2", v.n >= 2}, {"sum is zero", sum_set(s).is_zero()}, {"n - 1 <= sum(d_j - 1)", lhs <= rhs}};
  v.conclusion = detail::inequality_text("n - 1 <= sum(d_j - 1)", lhs, "<=", rhs);
  if (!v.premises_held()) return v;
  const Mask full = full_mask(v.n);
  for (Mask z : zero_sum_masks(s)) {
    if (z == full) continue;
    v.witness = mask_to_indices(z);
    break;
  }
  v.status = v.witness ? Status::holds : Status::counterexample;
  return v;
}

/// Two-dimensional case: span dims >= 2 and an irreducible zero sum force n >= m + 2.
template <ExactScalar S>
Verdict verify_two_dim_case(const ProductVectorSet<S>& s) {
  Verdict v;
  v.target = Target::thm32;
  v.n = s.size();
  v.m = s.modes();
  const bool spans_ok = detail::all_at_least(span_dims(s), 2);
  const bool zero = sum_set(s).is_zero();
  const bool irreducible = zero && is_irreducible(s);
  v.premises = {{"span dims >= 2", spans_ok}, {"sum is zero", zero}, {"irreducible", irreducible}};
  const auto lhs = static_cast<long long>(v.n), rhs = static_cast<long long>(v.m) + 2;
  v.conclusion = detail::inequality_text("n >= m + 2", lhs, ">=", rhs);
  if (!v.premises_held()) return v;
  v.status = lhs >= rhs ? Status::holds : Status::counterexample;
  return v;
}

enum class RankVersion { kr_thm41, conj52 };

/// Rank versions. Condition 2: the total sum has rank r and every Γ with
/// r + 1 <= |Γ| <= n - 1 has rank >= r + 1. Then n + r >= m + 2 (kr_thm41,
/// needs span dims >= 2) or n + r - 2 >= Σ (d_j - 1) with d_j := span dims
/// (conj52, needs m >= 2).
template <ExactScalar S>
Verdict verify_rank_version(const ProductVectorSet<S>& s, std::size_t r, RankVersion mode,
                            std::uint64_t budget = kDefaultBudget, RankOracle<S>* oracle = nullptr) {
  const std::size_t n = s.size();
  if (n < 2 || r + 2 > n)
    throw Error(Errc::InvalidArgument, "rank versions need r in {0, ..., n - 2}", "r");
  Verdict v;
  v.target = mode == RankVersion::kr_thm41 ? Target::thm41 : Target::conj52;
  v.n = n;
  v.m = s.modes();
  const auto d = span_dims(s);
  if (mode == RankVersion::kr_thm41)
    v.premises.push_back({"span dims >= 2", detail::all_at_least(d, 2)});
  else
    v.premises.push_back({"m >= 2", v.m >= 2});

  detail::RankQuery<S> ranks(s.signature(), budget, oracle);
  const auto total = sum_set(s);
  const bool total_rank_ok = ranks.rank_at_most(total, r) && (r == 0 || !ranks.rank_at_most(total, r - 1));
  v.premises.push_back({"rank of sum = r", total_rank_ok});
  if (total_rank_ok) v.rank = r;

  bool subsets_ok = total_rank_ok;
  if (subsets_ok) {
    std::vector<DenseTensor<S>> expanded;
    for (const auto& x : s) expanded.push_back(expand_product(x));
    for (std::size_t size = r + 1; size + 1 <= n && subsets_ok; ++size) {
      for_each_combination(n, size, [&](const IndexSet& gamma) {
        auto t = DenseTensor<S>::zeros(s.signature());
        for (auto a : gamma) t += expanded[a];
        if (ranks.rank_at_most(t, r)) subsets_ok = false;
        return subsets_ok;
      });
    }
  }
  v.premises.push_back({"subset sums of size r+1..n-1 have rank >= r+1", subsets_ok});

  long long lhs = 0, rhs = 0;
  if (mode == RankVersion::kr_thm41) {
    lhs = static_cast<long long>(n + r);
    rhs = static_cast<long long>(v.m) + 2;
    v.conclusion = detail::inequality_text("n + r >= m + 2", lhs, ">=", rhs);
  } else {
    lhs = static_cast<long long>(n + r) - 2;
    rhs = detail::kruskal_sum(d);
    v.conclusion = detail::inequality_text("n + r - 2 >= sum(d_j - 1)", lhs, ">=", rhs);
  }
  if (!v.premises_held()) return v;
  v.status = lhs >= rhs ? Status::holds : Status::counterexample;
  return v;
}

/// The tight family: n vectors in n - 2 modes of dimension 2 with an
/// irreducible zero sum. Built from {e_0, e_1, -e_0 - e_1}; each step
/// prepends a mode, replacing the last vector x by -e_1 ⊗ x, (e_0 + e_1) ⊗ x
/// and tensoring the others with e_0.
template <ExactScalar S>
ProductVectorSet<S> tight_example(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "tight examples need n >= 3", "n");
  const Vector<S> e0 = basis_vector<S>(2, 0), e1 = basis_vector<S>(2, 1);
  std::vector<std::vector<Vector<S>>> factors = {{e0}, {e1}, {Vector<S>(-e0 - e1)}};
  for (std::size_t k = 3; k < n; ++k) {
    std::vector<std::vector<Vector<S>>> next;
    for (std::size_t a = 0; a + 1 < factors.size(); ++a) {
      auto f = factors[a];
      f.insert(f.begin(), e0);
      next.push_back(std::move(f));
    }
    auto last = factors.back();
    last.insert(last.begin(), Vector<S>(-e1));
    next.push_back(last);
    last.front() = e0 + e1;
    next.push_back(std::move(last));
    factors = std::move(next);
  }
  std::vector<ProductVector<S>> vectors;
  for (auto& f : factors) vectors.emplace_back(std::move(f));
  return ProductVectorSet<S>(std::move(vectors));
}

struct PairingResult {
  /// sigma[a] = b with x_a = y_b, when every block pairs one x with one -y.
  std::optional<std::vector<std::size_t>> sigma;
  /// Minimal zero partition of {x_1..x_n, -y_1..-y_n} (indices n..2n-1 are the -y).
  Partition partition;
};

/// Pairs the terms of two decompositions of the same tensor through the
/// minimal zero partition of {x_a} ∪ {-y_b}.
template <ExactScalar S>
PairingResult reduction_pairing(const ProductVectorSet<S>& xs, const ProductVectorSet<S>& ys) {
  if (xs.size() != ys.size() || xs.signature() != ys.signature())
    throw Error(Errc::SignatureMismatch, "both sets need the same size and signature");
  if (2 * xs.size() > kMaxZeroSumVectors) throw Error(Errc::TooManyVectors, "pairing is limited to n <= 12");
  if (sum_set(xs) != sum_set(ys)) throw Error(Errc::SumsDiffer, "the two sets have different sums");

  const std::size_t n = xs.size();
  std::vector<ProductVector<S>> combined = xs.vectors();
  for (const auto& y : ys) combined.push_back(-y);
  PairingResult out;
  out.partition = minimal_zero_partition(ProductVectorSet<S>(std::move(combined)));

  std::vector<std::size_t> sigma(n, n);
  for (const auto& block : out.partition.blocks) {
    if (block.size() != 2 || block[0] >= n || block[1] < n) return out;
    sigma[block[0]] = block[1] - n;
  }
  out.sigma = std::move(sigma);
  return out;
}

}  // namespace tensorlab

#endif  // TENSORLAB_CONJECTURE_LAB_HPP
