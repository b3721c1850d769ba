#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace testing;

namespace {

const IntVec e0{1, 0}, e1{0, 1}, e01{1, 1};

std::vector<IndexSet> one_based(const std::vector<IndexSet>& sets) {
  auto out = sets;
  for (auto& s : out)
    for (auto& a : s) ++a;
  return out;
}

}  // namespace

TEST_CASE("zero-sum subset examples") {
  CHECK(one_based(zero_sum_subsets(pset<Rational>({{e0, e1}, {{-1, 0}, e1}}))) == std::vector<IndexSet>{{1, 2}});
  CHECK(one_based(zero_sum_subsets(tight_example<Rational>(4))) == std::vector<IndexSet>{{1, 2, 3, 4}});
  CHECK(zero_sum_subsets(pset<Rational>({{e0, e0}, {e1, e1}})).empty());
}

TEST_CASE("zero-sum masks match direct summation") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto inst = random_instance(rng, n, {2, 2}, 0, 1, 2);
    auto expected = ref_zero_masks(inst, 2);
    auto got = zero_sum_masks(pset<Fp<2>>(inst));
    std::sort(expected.begin(), expected.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expected);
    CHECK(std::is_sorted(got.begin(), got.end(), popcount_lex_less));
  }
}

TEST_CASE("zero-sum enumeration refuses oversized sets") {
  std::vector<IntFactors> many(25, IntFactors{e0});
  try {
    zero_sum_masks(pset<Fp<2>>(many));
    FAIL("expected TooManyVectors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyVectors);
  }
}

TEST_CASE("minimal zero partition examples") {
  const auto s = pset<Rational>({{e0, e0}, {{-1, 0}, e0}, {e1, e01}, {{0, -1}, e01}});
  CHECK(one_based(minimal_zero_partition(s).blocks) == std::vector<IndexSet>{{1, 2}, {3, 4}});
  CHECK(one_based(minimal_zero_partition(tight_example<Rational>(5)).blocks) ==
        std::vector<IndexSet>{{1, 2, 3, 4, 5}});
  try {
    minimal_zero_partition(pset<Rational>({{e0, e0}}));
    FAIL("expected NonzeroTotalSum");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonzeroTotalSum);
  }
}

TEST_CASE("partition blocks are disjoint irreducible zero sums covering the set") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 4000 && tested < 100; ++trial) {
    auto inst = random_instance(rng, 5, {2, 2}, 0, 1, 2);
    // Close the set up to a zero sum when the residual happens to be a product.
    const auto s0 = pset<Fp<2>>(inst);
    const auto total = sum_set(s0);
    if (!total.is_zero()) {
      auto x = as_product(total);
      if (!x) continue;
      IntFactors f;
      for (const auto& v : x->factors()) {
        IntVec iv;
        for (Index i = 0; i < v.size(); ++i) iv.push_back(v(i).value());
        f.push_back(iv);
      }
      inst.push_back(f);
    }
    const auto s = pset<Fp<2>>(inst);
    const auto part = minimal_zero_partition(s);
    std::vector<int> seen(inst.size(), 0);
    for (const auto& b : part.blocks) {
      for (auto a : b) ++seen[a];
      CHECK(all_zero(ref_sum(inst, b, 2, 4)));
      std::vector<IntFactors> sub;
      for (auto a : b) sub.push_back(inst[a]);
      CHECK(ref_zero_masks(sub, 2).size() == 1);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    ++tested;
  }
  CHECK(tested == 100);
}

TEST_CASE("irreducibility") {
  for (std::size_t n = 3; n <= 8; ++n) CHECK(is_irreducible(tight_example<Rational>(n)));
  CHECK(!is_irreducible(pset<Rational>({{e0, e0}, {{-1, 0}, e0}, {e1, e1}, {{0, -1}, e1}})));
  CHECK(is_irreducible(pset<Rational>({{e0, e0}, {{-1, 0}, e0}})));
  try {
    is_irreducible(pset<Rational>({{e0, e0}}));
    FAIL("expected NonzeroTotalSum");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonzeroTotalSum);
  }
}
