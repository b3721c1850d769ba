#ifndef TENSORLAB_SEARCH_HPP
#define TENSORLAB_SEARCH_HPP

/// \file search.hpp
/// Exhaustive counterexample search over multisets of product vectors.
///
/// Candidates are sorted index multisets over the canonical product-vector
/// list of each signature, so every multiset is visited once. With
/// `relabel_symmetry` the smallest element is pinned to the first product
/// vector: per-mode basis changes act transitively on product vectors and
/// every verifier is invariant under them. Work is sharded by the first
/// index and merged in shard order, so reports do not depend on the number
/// of workers.

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "tensorlab/conjecture_lab.hpp"

namespace tensorlab {

struct SearchSpace {
  FieldSpec field = FieldSpec::prime(2);
  /// Either explicit dims (one signature) or `mode_dim` repeated m times for
  /// m in [m_min, m_max].
  std::optional<std::vector<std::size_t>> dims;
  std::size_t mode_dim = 2;
  std::size_t m_min = 1;
  std::size_t m_max = 1;
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  bool relabel_symmetry = false;

  std::vector<ModeSignature> signatures() const {
    std::vector<ModeSignature> out;
    if (dims) {
      out.emplace_back(*dims);
      return out;
    }
    for (std::size_t m = m_min; m <= m_max; ++m) out.emplace_back(std::vector<std::size_t>(m, mode_dim));
    return out;
  }
};

struct SearchCell {
  std::vector<std::size_t> dims;
  std::size_t n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t holds = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t counterexamples = 0;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 1000;

template <ExactScalar S>
struct SearchReport {
  Target target = Target::conj13;
  SearchSpace space;
  std::uint64_t scanned = 0;
  std::uint64_t holds = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t counterexample_count = 0;
  /// First kMaxStoredCounterexamples counterexamples, in enumeration order.
  std::vector<std::pair<ProductVectorSet<S>, Verdict>> counterexamples;
  /// First instance (in enumeration order) whose verdict is `holds`.
  std::optional<std::pair<ProductVectorSet<S>, Verdict>> sample_holds;
  std::vector<SearchCell> cells;
};

/// Runs the verifier for `target`. For the rank versions r is the rank of
/// the total sum; instances with r > n - 2 are not applicable.
template <ExactScalar S>
Verdict verify_target(const ProductVectorSet<S>& s, Target target, std::optional<std::size_t> r = std::nullopt,
                      std::uint64_t budget = kDefaultBudget, RankOracle<S>* oracle = nullptr) {
  switch (target) {
    case Target::conj13: return verify_conjecture_instance(s);
    case Target::thm32: return verify_two_dim_case(s);
    case Target::thm41:
    case Target::conj52: {
      const auto mode = target == Target::thm41 ? RankVersion::kr_thm41 : RankVersion::conj52;
      if (!r) {
        detail::RankQuery<S> ranks(s.signature(), budget, oracle);
        r = ranks.exact(sum_set(s));
      }
      if (s.size() < 2 || *r + 2 > s.size()) {
        Verdict v;
        v.target = target;
        v.n = s.size();
        v.m = s.modes();
        v.rank = r;
        v.premises = {{"r <= n - 2", false}};
        return v;
      }
      return verify_rank_version(s, *r, mode, budget, oracle);
    }
  }
  throw Error(Errc::InvalidArgument, "unknown target");
}

namespace detail {

template <ExactScalar S>
struct ShardResult {
  std::uint64_t scanned = 0, holds = 0, not_applicable = 0, counterexample_count = 0;
  std::vector<std::pair<ProductVectorSet<S>, Verdict>> counterexamples;
  std::optional<std::pair<ProductVectorSet<S>, Verdict>> sample_holds;
};

}  // namespace detail

template <ExactScalar S>
SearchReport<S> search_counterexamples(const SearchSpace& space, Target target, std::size_t workers = 1,
                                       std::uint64_t budget = kDefaultBudget) {
  if constexpr (!field_traits<S>::is_finite) {
    throw Error(Errc::RationalsNotEnumerable, "searches need a prime field");
  } else {
    if (space.field != field_traits<S>::spec()) throw Error(Errc::InvalidArgument, "search space field mismatch");
    SearchReport<S> report;
    report.target = target;
    report.space = space;

    struct Shard {
      std::size_t sig;
      std::size_t n;
      std::size_t first;
    };
    std::vector<ModeSignature> sigs;
    std::vector<std::vector<ProductVector<S>>> products;
    std::vector<Shard> shards;
    std::uint64_t total = 0;
    if (space.n_min <= space.n_max && (space.dims || space.m_min <= space.m_max)) {
      sigs = space.signatures();
      for (std::size_t si = 0; si < sigs.size(); ++si) {
        products.push_back(enumerate_product_vectors<S>(sigs[si], budget));
        const std::size_t count = products.back().size();
        for (std::size_t n = std::max<std::size_t>(space.n_min, 1); n <= space.n_max; ++n) {
          report.cells.push_back({sigs[si].dims(), n});
          const std::uint64_t cands =
              space.relabel_symmetry ? multiset_count(count, n - 1) : multiset_count(count, n);
          total = cands > UINT64_MAX - total ? UINT64_MAX : total + cands;
          const std::size_t first_hi = space.relabel_symmetry ? 1 : count;
          for (std::size_t f = 0; f < first_hi; ++f) shards.push_back({si, n, f});
        }
      }
    }
    if (total > budget)
      throw Error(Errc::BudgetExceeded,
                  "search space has " + std::to_string(total) + " candidates, budget is " + std::to_string(budget));

    std::vector<detail::ShardResult<S>> results(shards.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      std::map<std::size_t, std::unique_ptr<RankOracle<S>>> oracles;
      const bool needs_rank = target == Target::thm41 || target == Target::conj52;
      for (std::size_t k = next++; k < shards.size(); k = next++) {
        const Shard& sh = shards[k];
        const auto& pool = products[sh.sig];
        RankOracle<S>* oracle = nullptr;
        if (needs_rank) {
          auto& slot = oracles[sh.sig];
          if (!slot) slot = std::make_unique<RankOracle<S>>(sigs[sh.sig], budget);
          oracle = slot.get();
        }
        auto& res = results[k];
        for_each_multiset(
            pool.size(), sh.n,
            [&](const IndexSet& idx) {
              std::vector<ProductVector<S>> vs;
              vs.reserve(idx.size());
              for (auto i : idx) vs.push_back(pool[i]);
              ProductVectorSet<S> inst(std::move(vs));
              Verdict v = verify_target(inst, target, std::nullopt, budget, oracle);
              ++res.scanned;
              switch (v.status) {
                case Status::holds:
                  ++res.holds;
                  if (!res.sample_holds) res.sample_holds.emplace(inst, std::move(v));
                  break;
                case Status::not_applicable: ++res.not_applicable; break;
                case Status::counterexample:
                  ++res.counterexample_count;
                  if (res.counterexamples.size() < kMaxStoredCounterexamples)
                    res.counterexamples.emplace_back(std::move(inst), std::move(v));
                  break;
              }
              return true;
            },
            sh.first, sh.first + 1);
      }
    };

    workers = std::max<std::size_t>(workers, 1);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    std::size_t cell = 0;
    for (std::size_t k = 0; k < shards.size(); ++k) {
      while (report.cells[cell].dims != sigs[shards[k].sig].dims() || report.cells[cell].n != shards[k].n) ++cell;
      auto& res = results[k];
      auto& c = report.cells[cell];
      c.scanned += res.scanned;
      c.holds += res.holds;
      c.not_applicable += res.not_applicable;
      c.counterexamples += res.counterexample_count;
      report.scanned += res.scanned;
      report.holds += res.holds;
      report.not_applicable += res.not_applicable;
      report.counterexample_count += res.counterexample_count;
      for (auto& ce : res.counterexamples)
        if (report.counterexamples.size() < kMaxStoredCounterexamples) report.counterexamples.push_back(std::move(ce));
      if (!report.sample_holds && res.sample_holds) report.sample_holds = std::move(res.sample_holds);
    }
    return report;
  }
}

}  // namespace tensorlab

#endif  // TENSORLAB_SEARCH_HPP
