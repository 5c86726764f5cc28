#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

/// f_1..f_count with f_1 = f_2 = 1.
inline std::vector<BigInt> fibonacci_sequence(std::size_t count) {
  std::vector<BigInt> f;
  f.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 2) {
      f.emplace_back(1);
    } else {
      f.push_back(f[i - 1] + f[i - 2]);
    }
  }
  return f;
}

inline BigInt fib(std::size_t n) {
  if (n == 0) throw DomainError("Fibonacci numbers are indexed from 1");
  BigInt a = 1;
  BigInt b = 1;
  for (std::size_t i = 2; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

/// Largest average length of an anti-uniform code on n symbols:
/// (f_{n+3} - 3) / f_{n+1}.
inline Rational l_max(std::size_t n) {
  if (n < 2) throw DomainError("l_max needs n >= 2");
  return Rational(fib(n + 3) - 3, fib(n + 1));
}

/// log f_{n+1} - (1/f_{n+1}) sum_{i=1}^{n-1} f_i log f_i, the entropy of the
/// Fibonacci distribution on n symbols. Summed with Kahan compensation since
/// the terms span many magnitudes for large n.
inline double h_max(std::size_t n) {
  if (n < 2) throw DomainError("h_max needs n >= 2");
  const auto f = fibonacci_sequence(n + 1);
  const BigInt& total = f[n];
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double term = quotient_to_double(f[i], total) * log2(f[i]);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return log2(total) - sum;
}

/// L log L - (L-1) log(L-1): the entropy ceiling of an infinite anti-uniform
/// source with average length L.
inline double h_max_infinite(double average_length) {
  if (!(average_length > 1.0)) {
    throw DomainError("h_max_infinite needs L > 1, got " + std::to_string(average_length));
  }
  const double L = average_length;
  return L * std::log2(L) - (L - 1.0) * std::log2(L - 1.0);
}

struct Asymptotics {
  double t = 0.0;          // (sqrt 5 - 1) / 2, positive root of x^2 + x - 1
  double l_max_inf = 0.0;  // t^-2
  double h_max_inf = 0.0;  // (1 + t^-2) log(1/t)
};

inline Asymptotics asymptotics() {
  Asymptotics a;
  a.t = (std::sqrt(5.0) - 1.0) / 2.0;
  a.l_max_inf = (3.0 + std::sqrt(5.0)) / 2.0;
  a.h_max_inf = (1.0 + a.l_max_inf) * -std::log2(a.t);
  return a;
}

}  // namespace auh
