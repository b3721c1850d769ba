#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace testing;

namespace {

ChainProblem problem(std::size_t n, std::vector<IndexSet> s, std::vector<IndexSet> t) {
  for (auto* family : {&s, &t})
    for (auto& b : *family)
      for (auto& a : b) --a;
  return {n, std::move(s), std::move(t)};
}

std::vector<IndexSet> blocks_one_based(const Chain& c) {
  std::vector<IndexSet> out;
  for (const auto& tb : c.sequence) {
    out.push_back(tb.block);
    for (auto& a : out.back()) ++a;
  }
  return out;
}

/// Proper nonempty sets that are a union of S blocks and of T blocks, by
/// listing every sub-family union of each side.
std::set<IndexSet> shared_unions(const ChainProblem& cp) {
  auto unions = [&](const std::vector<IndexSet>& family) {
    std::set<IndexSet> out;
    for (std::uint32_t theta = 1; theta < (1u << family.size()); ++theta) {
      std::set<std::size_t> u;
      for (std::size_t i = 0; i < family.size(); ++i)
        if (theta >> i & 1u) u.insert(family[i].begin(), family[i].end());
      if (u.size() < cp.ground) out.insert(IndexSet(u.begin(), u.end()));
    }
    return out;
  };
  const auto s = unions(cp.s_blocks), t = unions(cp.t_blocks);
  std::set<IndexSet> out;
  for (const auto& u : s)
    if (t.count(u)) out.insert(u);
  return out;
}

/// Cover and overlapping-prefix conditions checked with std::set.
bool reference_chain_ok(const ChainProblem& cp, const Chain& c) {
  std::set<std::size_t> covered;
  for (std::size_t p = 0; p < c.sequence.size(); ++p) {
    const auto& b = c.sequence[p].block;
    bool meets = false;
    for (auto a : b) meets = meets || covered.count(a);
    if (p > 0 && !meets) return false;
    covered.insert(b.begin(), b.end());
  }
  return c.sequence.size() >= 2 && covered.size() == cp.ground;
}

}  // namespace

TEST_CASE("lemma conditions examples") {
  CHECK(!check_lemma_conditions(problem(4, {{1, 2}, {3, 4}}, {{1}, {2, 3}, {4}})));
  const auto v = check_lemma_conditions(problem(2, {{1}, {2}}, {{1}, {2}}));
  REQUIRE(v);
  CHECK(v->gamma == IndexSet{0});
  try {
    check_lemma_conditions(problem(3, {{1, 2}, {2, 3}}, {{1, 2, 3}}));
    FAIL("expected NotAPartition");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAPartition);
  }
}

TEST_CASE("chain construction traces") {
  const auto a = build_chain(problem(4, {{1, 2}, {3, 4}}, {{1}, {2, 3}, {4}}));
  CHECK(blocks_one_based(a) == std::vector<IndexSet>{{1, 2}, {1}, {2, 3}, {3, 4}, {4}});
  CHECK(a.sequence[0].origin == Origin::S);
  CHECK(a.sequence[1].origin == Origin::T);
  CHECK(a.sequence[3].origin == Origin::S);

  const auto b = build_chain(problem(2, {{1, 2}}, {{1}, {2}}));
  CHECK(blocks_one_based(b) == std::vector<IndexSet>{{1, 2}, {1}, {2}});

  try {
    build_chain(problem(2, {{1}, {2}}, {{1}, {2}}));
    FAIL("expected ConditionsViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConditionsViolated);
  }
}

TEST_CASE("lemma conditions agree with explicit sub-family unions") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::uniform_int_distribution<std::size_t> k(1, n);
    auto partition = [&](std::size_t blocks) {
      std::uniform_int_distribution<std::size_t> label(0, blocks - 1);
      std::vector<IndexSet> by(blocks), out;
      for (std::size_t a = 0; a < n; ++a) by[label(rng)].push_back(a);
      for (auto& b : by)
        if (!b.empty()) out.push_back(b);
      return out;
    };
    const ChainProblem cp{n, partition(k(rng)), partition(k(rng))};
    const auto shared = shared_unions(cp);
    const auto v = check_lemma_conditions(cp);
    CHECK(v.has_value() == !shared.empty());
    if (v) CHECK(shared.count(v->gamma) == 1);
  }
}

TEST_CASE("seeded valid problems always produce a valid chain") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto cp = random_valid_chain_problem(n, seed);
    CHECK(shared_unions(cp).empty());
    const auto c = build_chain(cp);
    CHECK(chain_invariants_hold(cp, c));
    CHECK(reference_chain_ok(cp, c));
  }
}

TEST_CASE("seeded generation is reproducible") {
  const auto a = random_valid_chain_problem(9, 42);
  const auto b = random_valid_chain_problem(9, 42);
  CHECK(a.s_blocks == b.s_blocks);
  CHECK(a.t_blocks == b.t_blocks);
}
