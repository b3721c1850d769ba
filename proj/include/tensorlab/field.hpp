#ifndef TENSORLAB_FIELD_HPP
#define TENSORLAB_FIELD_HPP

/// \file field.hpp
/// Exact scalar types usable as Eigen scalars.
///
/// Two families are provided: residues modulo a small prime (`Fp<P>`, with
/// P in {2, 3, 5, 7}) and arbitrary-precision rationals (`Rational`). Both
/// keep a canonical representative, so `operator==` is structural equality
/// of field elements. Runtime selection of a field goes through `FieldSpec`
/// and `visit_field`.

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "tensorlab/errors.hpp"

namespace tensorlab {

inline constexpr std::array<unsigned, 4> kSupportedPrimes = {2, 3, 5, 7};

constexpr bool is_supported_prime(unsigned p) noexcept {
  for (unsigned q : kSupportedPrimes)
    if (q == p) return true;
  return false;
}

/// Runtime description of a scalar field.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  unsigned p = 0;  // 0 for the rationals

  static FieldSpec rationals() noexcept { return {Kind::rationals, 0}; }
  static FieldSpec prime(unsigned p);

  /// Accepts "Q" or a decimal prime such as "2".
  static FieldSpec parse(std::string_view text);

  bool is_finite() const noexcept { return kind == Kind::prime_field; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// ---------------------------------------------------------------------------
// Prime fields

template <unsigned P>
class Fp {
  static_assert(is_supported_prime(P), "unsupported prime");

 public:
  static constexpr unsigned modulus = P;

  constexpr Fp() noexcept = default;
  // Implicit so that Eigen's Scalar(0) / Scalar(1) idioms and integer
  // literals in expressions work.
  constexpr Fp(long long v) noexcept  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint8_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr unsigned value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  constexpr Fp inverse() const {
    if (value_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(P));
    for (unsigned i = 1; i < P; ++i)
      if ((value_ * i) % P == 1) return Fp(static_cast<long long>(i));
    return Fp();  // unreachable for prime P
  }

  constexpr Fp operator-() const noexcept { return Fp(static_cast<long long>(P - value_)); }

  constexpr Fp& operator+=(Fp o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ + o.value_) % P);
    return *this;
  }
  constexpr Fp& operator-=(Fp o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ + P - o.value_) % P);
    return *this;
  }
  constexpr Fp& operator*=(Fp o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ * o.value_) % P);
    return *this;
  }
  constexpr Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend constexpr Fp operator/(Fp a, Fp b) { return a /= b; }

  friend constexpr bool operator==(Fp, Fp) noexcept = default;
  /// Orders by canonical residue in [0, P); used only for canonical listings.
  friend constexpr auto operator<=>(Fp, Fp) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << static_cast<unsigned>(x.value_); }

 private:
  std::uint8_t value_ = 0;
};

// ---------------------------------------------------------------------------
// Rationals

class Rational {
 public:
  using Value = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;

  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(Value v) : value_(std::move(v)) {}

  /// Parses "n", "-n", "n/d"; the result is reduced with positive denominator.
  static Rational parse(std::string_view text);

  const Value& value() const noexcept { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  Rational inverse() const;

  /// Always "num/den" with den > 0 and gcd(num, den) = 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(Value(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

 private:
  Value value_;
};

// ---------------------------------------------------------------------------
// Traits

template <class S>
struct field_traits;

template <unsigned P>
struct field_traits<Fp<P>> {
  static constexpr bool is_finite = true;
  static constexpr unsigned order = P;
  static FieldSpec spec() { return FieldSpec::prime(P); }
  /// The i-th field element in canonical order, i in [0, P).
  static constexpr Fp<P> element(unsigned i) noexcept { return Fp<P>(static_cast<long long>(i)); }
  static std::string to_string(Fp<P> x) { return std::to_string(x.value()); }
  static Fp<P> parse(std::string_view text);
};

template <>
struct field_traits<Rational> {
  static constexpr bool is_finite = false;
  static constexpr unsigned order = 0;
  static FieldSpec spec() { return FieldSpec::rationals(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
};

template <class S>
concept ExactScalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { field_traits<S>::spec() } -> std::same_as<FieldSpec>;
};

template <class S>
concept FiniteScalar = ExactScalar<S> && field_traits<S>::is_finite;

namespace detail {
long long parse_integer_literal(std::string_view text);
}  // namespace detail

template <unsigned P>
Fp<P> field_traits<Fp<P>>::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fp<P>(detail::parse_integer_literal(text));
  Fp<P> den(detail::parse_integer_literal(text.substr(slash + 1)));
  if (den.is_zero())
    throw Error(Errc::ParseError, "zero denominator in F_" + std::to_string(P) + " literal");
  return Fp<P>(detail::parse_integer_literal(text.substr(0, slash))) / den;
}

/// Calls `f(std::type_identity<S>{})` with the scalar type matching `spec`.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldSpec::Kind::rationals) return f(std::type_identity<Rational>{});
  switch (spec.p) {
    case 2: return f(std::type_identity<Fp<2>>{});
    case 3: return f(std::type_identity<Fp<3>>{});
    case 5: return f(std::type_identity<Fp<5>>{});
    case 7: return f(std::type_identity<Fp<7>>{});
    default: break;
  }
  throw Error(Errc::UnsupportedField, "unsupported prime " + std::to_string(spec.p));
}

}  // namespace tensorlab

// ---------------------------------------------------------------------------
// Eigen integration

namespace Eigen {

template <unsigned P>
struct NumTraits<tensorlab::Fp<P>> : GenericNumTraits<tensorlab::Fp<P>> {
  using Real = tensorlab::Fp<P>;
  using NonInteger = tensorlab::Fp<P>;
  using Literal = tensorlab::Fp<P>;
  using Nested = tensorlab::Fp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tensorlab::Rational> : GenericNumTraits<tensorlab::Rational> {
  using Real = tensorlab::Rational;
  using NonInteger = tensorlab::Rational;
  using Literal = tensorlab::Rational;
  using Nested = tensorlab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TENSORLAB_FIELD_HPP
