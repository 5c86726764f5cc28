#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "auh/error.hpp"

namespace auh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) {
  if (v == 0) return 0.0;
  BigInt a = boost::multiprecision::abs(v);
  const auto top_bit = static_cast<int>(boost::multiprecision::msb(a));
  double r = 0.0;
  if (top_bit < 64) {
    r = static_cast<double>(static_cast<std::uint64_t>(a));
  } else {
    const int shift = top_bit - 63;
    r = std::ldexp(static_cast<double>(static_cast<std::uint64_t>(a >> shift)), shift);
  }
  return v < 0 ? -r : r;
}

/// num/den as a double without forming the reduced rational.
inline double quotient_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("division by zero");
  if (num == 0) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  BigInt a = boost::multiprecision::abs(num);
  BigInt b = boost::multiprecision::abs(den);
  constexpr unsigned kExactBits = 53;
  double r = 0.0;
  if (boost::multiprecision::msb(a) < kExactBits && boost::multiprecision::msb(b) < kExactBits) {
    r = to_double(a) / to_double(b);
  } else {
    // Scale so the integer quotient carries ~64 significant bits.
    const int exp = static_cast<int>(boost::multiprecision::msb(a)) - static_cast<int>(boost::multiprecision::msb(b));
    const int k = 64 - exp;
    BigInt q = k >= 0 ? BigInt((a << k) / b) : BigInt(a / (b << -k));
    r = std::ldexp(to_double(q), -k);
  }
  return negative ? -r : r;
}

inline double to_double(const Rational& v) {
  return quotient_to_double(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

inline double to_double(double v) { return v; }

template <class I>
  requires std::is_integral_v<I>
double to_double(I v) {
  return static_cast<double>(v);
}

/// log2 of a positive big integer, accurate for values beyond the double range.
inline double log2(const BigInt& v) {
  if (v <= 0) throw DomainError("log2 of a non-positive integer");
  const auto top_bit = static_cast<int>(boost::multiprecision::msb(v));
  if (top_bit < 1000) return std::log2(to_double(v));
  const int shift = top_bit - 60;
  return std::log2(to_double(BigInt(v >> shift))) + shift;
}

/// Always "num/den", so integers print as "2/1".
inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

// [+-]digits[.digits][(e|E)[+-]digits]
inline Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw ParseError("not a number: '" + original + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw ParseError("not a number: '" + original + "'");
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_negative = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw ParseError("not a number: '" + original + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("not a number: '" + original + "'");
      exponent = exponent * 10 + (s[i] - '0');
      if (exponent > 100000) throw ParseError("exponent out of range: '" + original + "'");
    }
    if (exp_negative) exponent = -exponent;
  }
  // A leading zero would make cpp_int read the digits as octal.
  const auto first = digits.find_first_not_of('0');
  const BigInt mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
  const long scale = exponent - frac_digits;
  Rational r = scale >= 0 ? Rational(mantissa * pow10(scale)) : Rational(mantissa, pow10(-scale));
  return negative ? Rational(-r) : r;
}

}  // namespace detail

/// Parses "p/q", integers, and decimal or scientific literals exactly.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return detail::parse_decimal(text);
  const Rational num = detail::parse_decimal(text.substr(0, slash));
  const Rational den = detail::parse_decimal(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
};

template <class I>
  requires std::is_integral_v<I>
struct scalar_traits<I> {
  static constexpr bool exact = true;
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

/// Exact equality for exact scalars, relative 1e-12 otherwise.
template <class T>
bool nearly_equal(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= 1e-12 * scale;
  }
}

/// a <= b, with 1e-12 slack for inexact scalars.
template <class T>
bool less_or_nearly_equal(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a <= b;
  } else {
    return a <= b || nearly_equal(a, b);
  }
}

}  // namespace auh
