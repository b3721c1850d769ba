#include <doctest.h>

#include "test_support.hpp"

using namespace testing;

TEST_CASE("prime field arithmetic agrees with integer residues") {
  for (long long a = -10; a <= 10; ++a)
    for (long long b = -10; b <= 10; ++b) {
      CHECK((Fp<7>(a) + Fp<7>(b)).value() == mod(a + b, 7));
      CHECK((Fp<7>(a) * Fp<7>(b)).value() == mod(a * b, 7));
      CHECK((Fp<7>(a) - Fp<7>(b)).value() == mod(a - b, 7));
      if (mod(b, 7) != 0) CHECK((Fp<7>(a) / Fp<7>(b) * Fp<7>(b)) == Fp<7>(a));
    }
  CHECK_THROWS_AS(Fp<3>(0).inverse(), Error);
}

TEST_CASE("rationals normalise and print as num/den") {
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational::parse("-6/3").to_string() == "-2/1");
  CHECK(Rational::parse("5").to_string() == "5/1");
  CHECK(Rational::parse("1/3") + Rational::parse("1/6") == Rational::parse("1/2"));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("field specs parse and reject unsupported primes") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("3") == FieldSpec::prime(3));
  try {
    FieldSpec::parse("4");
    FAIL("expected UnsupportedField");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedField);
  }
  CHECK(field_traits<Fp<5>>::parse("3/2") == Fp<5>(4));
}

TEST_CASE("matrix rank on small examples") {
  CHECK(matrix_rank(mat<Rational>({{1, 0}, {0, 1}})) == 2);
  CHECK(matrix_rank(mat<Fp<2>>({{1, 1}, {1, 1}})) == 1);
  CHECK(matrix_rank(mat<Rational>({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(mat<Fp<3>>({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("matrix rank matches reference elimination on random matrices") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<long long> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = size(rng), cols = size(rng);
    std::vector<IntVec> m(rows, IntVec(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    CHECK(static_cast<std::size_t>(matrix_rank(mat<Fp<2>>(m))) == ref_rank_mod(m, 2));
    CHECK(static_cast<std::size_t>(matrix_rank(mat<Fp<5>>(m))) == ref_rank_mod(m, 5));
    CHECK(static_cast<std::size_t>(matrix_rank(mat<Rational>(m))) == ref_rank_integer(m));
    CHECK(row_reduce(mat<Fp<3>>(m)).rank() == ref_rank_mod(m, 3));
  }
}

TEST_CASE("kernel basis examples") {
  const auto k = kernel_basis(mat<Fp<2>>({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec<Fp<2>>({1, 1}));
  CHECK(kernel_basis(mat<Rational>({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
  const auto z = kernel_basis(mat<Rational>({{0, 0}, {0, 0}}));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == vec<Rational>({1, 0}));
  CHECK(z[1] == vec<Rational>({0, 1}));
}

TEST_CASE("kernel basis is a basis of the null space") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<long long> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(rng), cols = size(rng);
    std::vector<IntVec> m(rows, IntVec(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    const auto a = mat<Rational>(m);
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == static_cast<std::size_t>(cols) - ref_rank_integer(m));
    for (const auto& v : basis) CHECK(is_zero(Matrix<Rational>(a * v)));
    if (!basis.empty()) CHECK(static_cast<std::size_t>(span_dimension<Rational>(basis)) == basis.size());
  }
}

TEST_CASE("annihilator examples") {
  const std::vector<Vector<Fp<2>>> e0{vec<Fp<2>>({1, 0})};
  CHECK(annihilator(e0) == mat<Fp<2>>({{0, 1}}));
  const std::vector<Vector<Fp<2>>> ones{vec<Fp<2>>({1, 1})};
  const auto pi = annihilator(ones);
  CHECK(pi == mat<Fp<2>>({{1, 1}}));
  CHECK(is_zero(Matrix<Fp<2>>(pi * ones[0])));
  const std::vector<Vector<Rational>> full{vec<Rational>({1, 0}), vec<Rational>({0, 1})};
  try {
    annihilator(full);
    FAIL("expected SpanIsFullSpace");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpanIsFullSpace);
  }
}

TEST_CASE("annihilator rows are independent and kill the span") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector<Fp<3>>> vs;
    std::vector<IntVec> rows;
    const std::size_t count = 1 + trial % 3;
    for (std::size_t a = 0; a < count; ++a) {
      rows.push_back(random_nonzero(rng, 4, 0, 2, 3));
      vs.push_back(vec<Fp<3>>(rows.back()));
    }
    const auto pi = annihilator(vs);
    CHECK(static_cast<std::size_t>(pi.rows()) == 4 - ref_rank_mod(rows, 3));
    CHECK(matrix_rank(pi) == pi.rows());
    for (const auto& v : vs) CHECK(is_zero(Matrix<Fp<3>>(pi * v)));
  }
}
