#include <doctest.h>

#include "test_support.hpp"

using namespace testing;

namespace {

const IntVec e0{1, 0}, e1{0, 1}, e01{1, 1};

}  // namespace

TEST_CASE("tight example construction") {
  CHECK(tight_example<Rational>(3) == pset<Rational>({{e0}, {e1}, {{-1, -1}}}));
  const auto t4 = tight_example<Rational>(4);
  const auto expected = pset<Rational>({{e0, e0}, {e0, e1}, {e1, e01}, {{-1, -1}, e01}});
  CHECK(t4 == expected);
  CHECK(sum_set(t4).is_zero());
  const auto t8 = tight_example<Rational>(8);
  CHECK(t8.size() == 8);
  CHECK(t8.modes() == 6);
  CHECK(is_irreducible(t8));
  CHECK_THROWS_AS(tight_example<Rational>(2), Error);
}

TEST_CASE("tight examples have no vanishing strict subset by direct summation") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto s = tight_example<Fp<5>>(n);
    std::vector<IntFactors> ints;
    for (const auto& x : s) {
      IntFactors f;
      for (const auto& v : x.factors()) {
        IntVec iv;
        for (Index i = 0; i < v.size(); ++i) iv.push_back(v(i).value());
        f.push_back(iv);
      }
      ints.push_back(f);
    }
    const auto zeros = ref_zero_masks(ints, 5);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == (1u << n) - 1);
  }
}

TEST_CASE("conjecture verifier examples") {
  const auto pairs = pset<Rational>({{e0, e0, e0}, {{-1, 0}, e0, e0}, {e1, e1, e1}, {{0, -1}, e1, e1}});
  const auto v = verify_conjecture_instance(pairs);
  CHECK(v.status == Status::holds);
  REQUIRE(v.witness);
  CHECK(*v.witness == IndexSet{0, 1});

  for (std::size_t n = 3; n <= 6; ++n) {
    const auto t = verify_conjecture_instance(tight_example<Rational>(n));
    CHECK(t.status == Status::not_applicable);
    CHECK(!t.premises[2].held);
  }
  const auto nz = verify_conjecture_instance(pset<Rational>({{e0, e0}, {e1, e1}}));
  CHECK(nz.status == Status::not_applicable);
  CHECK(!nz.premises[1].held);
}

TEST_CASE("two-dimensional case verifier") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto v = verify_two_dim_case(tight_example<Rational>(n));
    CHECK(v.status == Status::holds);
    CHECK(v.n == v.m + 2);
  }
  const auto parallel = pset<Rational>({{e0, e0}, {e0, {-1, 0}}});
  CHECK(verify_two_dim_case(parallel).status == Status::not_applicable);
}

TEST_CASE("no F_2 instance with m = 2, n = 3 passes both two-dimensional premises") {
  const auto all = enumerate_product_vectors<Fp<2>>(ModeSignature({2, 2}));
  std::size_t scanned = 0;
  for_each_multiset(all.size(), 3, [&](const IndexSet& idx) {
    std::vector<ProductVector<Fp<2>>> vs;
    for (auto i : idx) vs.push_back(all[i]);
    CHECK(verify_two_dim_case(ProductVectorSet<Fp<2>>(vs)).status == Status::not_applicable);
    ++scanned;
    return true;
  });
  CHECK(scanned == 165);
}

TEST_CASE("rank versions") {
  const auto t4 = tight_example<Rational>(4);
  const auto v = verify_rank_version(t4, 0, RankVersion::kr_thm41);
  CHECK(v.status == Status::holds);
  CHECK(v.conclusion == "n + r >= m + 2: 4 >= 4");
  CHECK(verify_rank_version(t4, 0, RankVersion::conj52).status == Status::holds);
  CHECK_THROWS_AS(verify_rank_version(t4, 3, RankVersion::kr_thm41), Error);

  // A wrong claimed rank is a failed premise, not a counterexample.
  CHECK(verify_rank_version(t4, 1, RankVersion::kr_thm41).status == Status::not_applicable);
}

TEST_CASE("smallest F_2 rank-one instance found by search holds") {
  // Scan growing spaces in enumeration order for the first instance whose
  // total sum has rank one and which meets every premise.
  std::optional<std::pair<ProductVectorSet<Fp<2>>, Verdict>> found;
  for (const std::vector<std::size_t> dims : {std::vector<std::size_t>{2, 2}, std::vector<std::size_t>{2, 2, 2}}) {
    RankOracle<Fp<2>> oracle{ModeSignature(dims)};
    const auto& all = oracle.products();
    for (std::size_t n = 3; n <= 5 && !found; ++n)
      for_each_multiset(all.size(), n, [&](const IndexSet& idx) {
        std::vector<ProductVector<Fp<2>>> vs;
        for (auto i : idx) vs.push_back(all[i]);
        ProductVectorSet<Fp<2>> inst(std::move(vs));
        auto v = verify_target(inst, Target::thm41, std::nullopt, kDefaultBudget, &oracle);
        if (v.rank == std::optional<std::size_t>(1) && v.premises_held()) found.emplace(std::move(inst), std::move(v));
        return !found;
      });
    if (found) break;
  }
  REQUIRE(found);
  const auto& [inst, verdict] = *found;
  CHECK(verdict.status == Status::holds);
  MESSAGE("smallest instance: n = " << inst.size() << ", m = " << inst.modes());

  // Hand check with the breadth-first rank table or 2x2 determinants.
  const auto rank_of = [&](const DenseTensor<Fp<2>>& t) -> int {
    if (inst.modes() == 3) return f2_222_rank_table()[to_mask(t)];
    std::vector<IntVec> rows(2, IntVec(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) rows[i][j] = t.entries()(i * 2 + j).value();
    return static_cast<int>(ref_rank_mod(rows, 2));
  };
  CHECK(rank_of(sum_set(inst)) == 1);
  const std::size_t n = inst.size();
  for (std::size_t k = 2; k < n; ++k)
    for_each_combination(n, k, [&](const IndexSet& gamma) {
      CHECK(rank_of(sum_set(inst, gamma)) >= 2);
      return true;
    });
}

TEST_CASE("reduction pairing") {
  const auto ghz = pset<Fp<2>>({{e0, e0, e0}, {e1, e1, e1}});
  const auto same = reduction_pairing(ghz, ghz);
  REQUIRE(same.sigma);
  CHECK(*same.sigma == std::vector<std::size_t>{0, 1});

  const auto xs = pset<Fp<2>>({{e0, e0}, {e1, e1}});
  const auto ys = pset<Fp<2>>({{e01, e0}, {e1, e01}});
  const auto obstruction = reduction_pairing(xs, ys);
  CHECK(!obstruction.sigma);
  bool big = false;
  for (const auto& b : obstruction.partition.blocks) big = big || b.size() >= 4;
  CHECK(big);

  try {
    reduction_pairing(xs, pset<Fp<2>>({{e0, e0}, {e0, e1}}));
    FAIL("expected SumsDiffer");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SumsDiffer);
  }
}

TEST_CASE("pairing a certified set with its oracle decomposition") {
  const auto s = pset<Fp<3>>({{e0, e0, e0}, {e1, e1, e1}});
  REQUIRE(certify_uniqueness(s).certified);
  const auto res = tensor_rank(sum_set(s));
  REQUIRE(res.witness);
  const auto found = reduction_pairing(s, ProductVectorSet<Fp<3>>(*res.witness));
  REQUIRE(found.sigma);
  for (std::size_t a = 0; a < s.size(); ++a) CHECK(s[a] == (*res.witness)[(*found.sigma)[a]]);
}
