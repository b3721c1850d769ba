#include "tensorlab/chain.hpp"

#include <random>
#include <string>
#include <unordered_map>

#include "tensorlab/errors.hpp"

namespace tensorlab {

namespace {

using Wide = std::uint64_t;

Wide block_mask(const IndexSet& b) {
  Wide m = 0;
  for (auto a : b) m |= Wide{1} << a;
  return m;
}

Wide ground_mask(std::size_t n) { return n >= 64 ? ~Wide{0} : (Wide{1} << n) - 1; }

IndexSet wide_to_indices(Wide m) {
  IndexSet out;
  for (std::size_t a = 0; m != 0; ++a, m >>= 1)
    if (m & 1u) out.push_back(a);
  return out;
}

void validate_family(const std::vector<IndexSet>& family, std::size_t n, const char* name) {
  if (family.empty()) throw Error(Errc::NotAPartition, std::string("family ") + name + " is empty", name);
  if (family.size() > kMaxChainFamily)
    throw Error(Errc::InvalidArgument, std::string("family ") + name + " has too many blocks", name);
  Wide seen = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    if (family[i].empty()) throw Error(Errc::NotAPartition, "empty block", where);
    for (auto a : family[i]) {
      if (a >= n) throw Error(Errc::NotAPartition, "index " + std::to_string(a + 1) + " outside [n]", where);
      const Wide bit = Wide{1} << a;
      if (seen & bit) throw Error(Errc::NotAPartition, "blocks overlap at index " + std::to_string(a + 1), where);
      seen |= bit;
    }
  }
  if (seen != ground_mask(n)) throw Error(Errc::NotAPartition, std::string("family ") + name + " does not cover [n]", name);
}

std::vector<Wide> family_unions(const std::vector<Wide>& blocks) {
  std::vector<Wide> unions(std::size_t{1} << blocks.size(), 0);
  for (std::size_t theta = 1; theta < unions.size(); ++theta) {
    const auto low = static_cast<std::size_t>(std::countr_zero(theta));
    unions[theta] = unions[theta & (theta - 1)] | blocks[low];
  }
  return unions;
}

}  // namespace

void validate_chain_problem(const ChainProblem& cp) {
  if (cp.ground == 0 || cp.ground > kMaxChainGround)
    throw Error(Errc::InvalidArgument, "ground set size must lie in [1, 64]", "n");
  validate_family(cp.s_blocks, cp.ground, "S");
  validate_family(cp.t_blocks, cp.ground, "T");
}

std::optional<LemmaViolation> check_lemma_conditions(const ChainProblem& cp) {
  validate_chain_problem(cp);
  std::vector<Wide> s, t;
  for (const auto& b : cp.s_blocks) s.push_back(block_mask(b));
  for (const auto& b : cp.t_blocks) t.push_back(block_mask(b));
  const auto s_unions = family_unions(s);
  const auto t_unions = family_unions(t);

  // Blocks are disjoint and nonempty, so each union has a unique sub-family.
  std::unordered_map<Wide, std::size_t> t_index;
  for (std::size_t theta = 0; theta < t_unions.size(); ++theta) t_index.emplace(t_unions[theta], theta);

  const Wide full = ground_mask(cp.ground);
  for (std::size_t theta = 1; theta < s_unions.size(); ++theta) {
    const Wide u = s_unions[theta];
    if (u == full) continue;
    auto it = t_index.find(u);
    if (it == t_index.end()) continue;
    return LemmaViolation{wide_to_indices(theta), wide_to_indices(it->second), wide_to_indices(u)};
  }
  return std::nullopt;
}

Chain build_chain(const ChainProblem& cp) {
  if (check_lemma_conditions(cp))
    throw Error(Errc::ConditionsViolated, "the two families share a proper nonempty sub-union");

  struct Candidate {
    Origin origin;
    std::size_t index;
    Wide mask;
    std::size_t min_element;
  };
  std::vector<Candidate> all;
  for (std::size_t i = 0; i < cp.s_blocks.size(); ++i) {
    const Wide m = block_mask(cp.s_blocks[i]);
    all.push_back({Origin::S, i, m, static_cast<std::size_t>(std::countr_zero(m))});
  }
  for (std::size_t i = 0; i < cp.t_blocks.size(); ++i) {
    const Wide m = block_mask(cp.t_blocks[i]);
    all.push_back({Origin::T, i, m, static_cast<std::size_t>(std::countr_zero(m))});
  }
  std::vector<bool> used(all.size(), false);

  Chain chain;
  auto take = [&](std::size_t k) {
    used[k] = true;
    chain.sequence.push_back({all[k].origin, all[k].index, wide_to_indices(all[k].mask)});
  };

  Wide covered = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k].origin == Origin::S && (all[k].mask & 1u)) {
      take(k);
      covered = all[k].mask;
      break;
    }
  }

  while (true) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (used[k] || (all[k].mask & covered) == 0) continue;
      // `all` lists S before T, so strict comparison keeps S on ties.
      if (!best || all[k].min_element < all[*best].min_element) best = k;
    }
    if (!best) break;
    take(*best);
    covered |= all[*best].mask;
  }

  if (covered != ground_mask(cp.ground) || chain.sequence.size() < 2)
    throw Error(Errc::Stalled, "no eligible block remains but [n] is not covered");
  return chain;
}

bool chain_invariants_hold(const ChainProblem& cp, const Chain& chain) {
  if (chain.sequence.size() < 2) return false;
  Wide covered = 0;
  for (std::size_t p = 0; p < chain.sequence.size(); ++p) {
    const auto& tb = chain.sequence[p];
    const auto& family = tb.origin == Origin::S ? cp.s_blocks : cp.t_blocks;
    if (tb.index >= family.size() || family[tb.index] != tb.block) return false;
    const Wide m = block_mask(tb.block);
    if (p > 0 && (covered & m) == 0) return false;
    covered |= m;
  }
  return covered == ground_mask(cp.ground);
}

ChainProblem random_valid_chain_problem(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > kMaxChainFamily) throw Error(Errc::InvalidArgument, "random chain problems need 1 <= n <= 20", "n");
  std::mt19937_64 rng(seed);
  auto random_partition = [&](std::size_t blocks) {
    std::uniform_int_distribution<std::size_t> label(0, blocks - 1);
    std::vector<IndexSet> by_label(blocks);
    for (std::size_t a = 0; a < n; ++a) by_label[label(rng)].push_back(a);
    std::vector<IndexSet> out;
    for (auto& b : by_label)
      if (!b.empty()) out.push_back(std::move(b));
    return out;
  };
  std::uniform_int_distribution<std::size_t> count(1, n);
  while (true) {
    ChainProblem cp{n, random_partition(count(rng)), random_partition(count(rng))};
    if (!check_lemma_conditions(cp)) return cp;
  }
}

}  // namespace tensorlab
