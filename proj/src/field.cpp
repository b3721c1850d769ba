#include "tensorlab/field.hpp"

#include <cctype>
#include <charconv>

namespace tensorlab {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_big(std::string_view s) {
  s = trim(s);
  if (!is_integer_literal(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

namespace detail {

long long parse_integer_literal(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, "integer out of range: '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

FieldSpec FieldSpec::prime(unsigned p) {
  if (!is_supported_prime(p))
    throw Error(Errc::UnsupportedField, "prime field F_" + std::to_string(p) + " is not supported (use 2, 3, 5 or 7)");
  return {Kind::prime_field, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "q" || text == "rationals") return rationals();
  if (!is_integer_literal(text)) throw Error(Errc::UnsupportedField, "unknown field '" + std::string(text) + "'");
  auto v = detail::parse_integer_literal(text);
  if (v < 0) throw Error(Errc::UnsupportedField, "unknown field '" + std::string(text) + "'");
  return prime(static_cast<unsigned>(v));
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? std::string("Q") : "F_" + std::to_string(p);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  value_ = Value(num) / Value(den);
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Value(parse_big(text)));
  BigInt num = parse_big(text.substr(0, slash));
  BigInt den = parse_big(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(Value(num) / Value(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational");
  return Rational(Value(Value(1) / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  return boost::multiprecision::numerator(value_).str() + "/" + boost::multiprecision::denominator(value_).str();
}

}  // namespace tensorlab
