#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace testing;

namespace {

const IntVec e0{1, 0}, e1{0, 1}, e01{1, 1};

DenseTensor<Fp<2>> from_mask(std::uint8_t m) {
  Vector<Fp<2>> v(8);
  for (Index i = 0; i < 8; ++i) v(i) = Fp<2>(m >> i & 1u);
  return DenseTensor<Fp<2>>(ModeSignature({2, 2, 2}), v);
}

}  // namespace

TEST_CASE("product vector enumeration counts") {
  CHECK(enumerate_product_vectors<Fp<2>>(ModeSignature({2})).size() == 3);
  CHECK(enumerate_product_vectors<Fp<2>>(ModeSignature({2, 2})).size() == 9);
  CHECK(enumerate_product_vectors<Fp<3>>(ModeSignature({2, 2})).size() == 32);
  CHECK(product_vector_count(3, ModeSignature({2, 2})) == 32);
  CHECK(product_vector_count(2, ModeSignature({2, 2, 2})) == 27);
  try {
    enumerate_product_vectors<Rational>(ModeSignature({2}));
    FAIL("expected RationalsNotEnumerable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RationalsNotEnumerable);
  }
  try {
    enumerate_product_vectors<Fp<7>>(ModeSignature({4, 4}), 100);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("enumerated product vectors expand to distinct rank-one tensors") {
  const auto all = enumerate_product_vectors<Fp<3>>(ModeSignature({2, 3}));
  std::set<IntVec> seen;
  for (const auto& x : all) {
    const auto t = expand_product(x);
    IntVec key;
    for (Index i = 0; i < t.entries().size(); ++i) key.push_back(t.entries()(i).value());
    seen.insert(key);
  }
  CHECK(seen.size() == all.size());
  CHECK(all.size() == (9 - 1) * (27 - 1) / 2);
}

TEST_CASE("tensor rank examples") {
  CHECK(tensor_rank(DenseTensor<Fp<2>>::zeros(ModeSignature({2, 2, 2}))).rank == 0);
  CHECK(tensor_rank(expand_product(pv<Fp<3>>({e01, {1, 2}, e1}))).rank == 1);
  const auto ghz = sum_set(pset<Fp<2>>({{e0, e0, e0}, {e1, e1, e1}}));
  const auto r = tensor_rank(ghz);
  CHECK(r.rank == 2);
  CHECK(r.lower_bound == 2);
  REQUIRE(r.witness);
  auto acc = DenseTensor<Fp<2>>::zeros(ghz.signature());
  for (const auto& x : *r.witness) acc += expand_product(x);
  CHECK(acc == ghz);
  try {
    tensor_rank(ghz, 1);
    FAIL("expected RankExceedsBound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankExceedsBound);
  }
}

TEST_CASE("rank oracle matches breadth-first ranks of all F_2 2x2x2 tensors") {
  const auto table = f2_222_rank_table();
  RankOracle<Fp<2>> oracle(ModeSignature({2, 2, 2}));
  for (unsigned m = 0; m < 256; ++m) {
    const auto t = from_mask(static_cast<std::uint8_t>(m));
    const auto res = oracle.rank(t);
    CHECK(static_cast<int>(res.rank) == table[m]);
    REQUIRE(res.witness);
    auto acc = DenseTensor<Fp<2>>::zeros(t.signature());
    for (const auto& x : *res.witness) acc += expand_product(x);
    CHECK(acc == t);
  }
}

TEST_CASE("rank over Q is decided for ranks zero and one only") {
  CHECK(tensor_rank(expand_product(pv<Rational>({{1, 2}, {3, 4}}))).rank == 1);
  CHECK(tensor_rank(DenseTensor<Rational>::zeros(ModeSignature({2, 2}))).rank == 0);
  try {
    tensor_rank(sum_set(pset<Rational>({{e0, e0}, {e1, e1}})));
    FAIL("expected RationalsNotEnumerable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RationalsNotEnumerable);
  }
}

TEST_CASE("uniqueness checks") {
  const auto ghz = sum_set(pset<Fp<2>>({{e0, e0, e0}, {e1, e1, e1}}));
  const auto u = unique_decomposition_check(ghz, 2);
  CHECK(u.unique);
  CHECK(u.count == 1);

  const auto identity = sum_set(pset<Fp<2>>({{e0, e0}, {e1, e1}}));
  const auto v = unique_decomposition_check(identity, 2);
  CHECK(!v.unique);
  CHECK(v.count >= 2);
  const auto alt = sum_set(pset<Fp<2>>({{e01, e0}, {e1, e01}}));
  CHECK(alt == identity);

  const auto prod = expand_product(pv<Fp<3>>({e01, e1}));
  CHECK(unique_decomposition_check(prod, 1).unique);
  try {
    unique_decomposition_check(prod, 2);
    FAIL("expected WrongRank");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongRank);
  }
}

TEST_CASE("two-term sums") {
  const auto x = pv<Fp<2>>({e0, e0}), y = pv<Fp<2>>({e1, e0}), z = pv<Fp<2>>({e1, e1});
  const auto p = is_product_sum_pair(x, y, Fp<2>(1), Fp<2>(1));
  CHECK(p.kind == PairKind::product);
  REQUIRE(p.factored);
  CHECK(*p.factored == pv<Fp<2>>({e01, e0}));
  CHECK(is_product_sum_pair(x, z, Fp<2>(1), Fp<2>(1)).kind == PairKind::entangled);
  const auto q = pv<Rational>({{1, 2}, {3, 1}});
  CHECK(is_product_sum_pair(q, q, Rational(1), Rational(-1)).kind == PairKind::zero);
}

TEST_CASE("two-term classification matches breadth-first ranks over F_2 2x2x2") {
  const auto table = f2_222_rank_table();
  const auto all = enumerate_product_vectors<Fp<2>>(ModeSignature({2, 2, 2}));
  REQUIRE(all.size() == 27);
  for (const auto& x1 : all)
    for (const auto& x2 : all) {
      const auto res = is_product_sum_pair(x1, x2, Fp<2>(1), Fp<2>(1));
      const int rank = table[to_mask(expand_product(x1)) ^ to_mask(expand_product(x2))];
      CHECK((res.kind == PairKind::zero) == (rank == 0));
      CHECK((res.kind == PairKind::product) == (rank == 1));
      CHECK((res.kind == PairKind::entangled) == (rank == 2));
      if (x1 == x2) continue;
      CHECK((res.nonparallel_modes <= 1) == (rank <= 1));
    }
}

TEST_CASE("non-parallel mode bound") {
  CHECK(nonparallel_mode_bound_check(pset<Rational>({{e0, e1}}), {Rational(1)}) == 0);
  CHECK(nonparallel_mode_bound_check(pset<Rational>({{e0, e0}, {e1, e0}}), {Rational(1), Rational(1)}) == 1);
  try {
    nonparallel_mode_bound_check(pset<Rational>({{e0, e0}, {e1, e1}}), {Rational(1), Rational(1)});
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("two-dimensional subspace categories") {
  const auto t = [](const IntFactors& f) { return expand_product(pv<Fp<2>>(f)); };
  CHECK(classify_2d_subspace(t({e0, e0}), t({e0, e1})).category == 1);
  CHECK(classify_2d_subspace(t({e0, e0}), t({e1, e1})).category == 2);
  auto ghz = t({e0, e0});
  ghz += t({e1, e1});
  const auto c3 = classify_2d_subspace(ghz, t({e0, e1}));
  CHECK(c3.category == 3);
  CHECK(c3.lines_checked == 3);
  try {
    classify_2d_subspace(t({e0, e0}), t({e0, e0}));
    FAIL("expected NotIndependent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIndependent);
  }
  const auto q = [](const IntFactors& f) { return expand_product(pv<Rational>(f)); };
  CHECK(classify_2d_subspace(q({e0, e0}), q({e0, e1})).category == 1);
  CHECK(classify_2d_subspace(q({e0, e0}), q({e1, e1})).category == 2);
}

TEST_CASE("subspace categories match product-line counts from breadth-first ranks") {
  const auto table = f2_222_rank_table();
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = a + 1; b < 256; b += 7) {
      const auto c = classify_2d_subspace(from_mask(a), from_mask(b));
      int lines = (table[a] == 1) + (table[b] == 1) + (table[a ^ b] == 1);
      const int expected = lines == 3 ? 1 : 4 - lines;
      CHECK(c.category == expected);
    }
}
