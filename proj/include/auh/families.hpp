#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "auh/bounds.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

enum class FamilyKind { fibonacci, epsilon, dyadic, high_redundancy, geometric_tail, poisson_tail };

inline std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::fibonacci: return "fibonacci";
    case FamilyKind::epsilon: return "epsilon";
    case FamilyKind::dyadic: return "dyadic";
    case FamilyKind::high_redundancy: return "high_redundancy";
    case FamilyKind::geometric_tail: return "geometric_tail";
    case FamilyKind::poisson_tail: return "poisson_tail";
  }
  return "unknown";
}

inline FamilyKind parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::fibonacci, FamilyKind::epsilon, FamilyKind::dyadic, FamilyKind::high_redundancy,
                    FamilyKind::geometric_tail, FamilyKind::poisson_tail}) {
    if (to_string(kind) == name) return kind;
  }
  throw BadParam("unknown family '" + std::string(name) + "'");
}

/// A named distribution family. Parameters are keyed "eps", "q" and "lambda"
/// and held exactly; `inner` is the (n-1)-symbol source Q of the
/// high-redundancy construction, dyadic when absent.
struct FamilySpec {
  FamilyKind kind = FamilyKind::fibonacci;
  std::size_t n = 2;
  std::map<std::string, Rational> params;
  std::optional<std::vector<Rational>> inner;
};

namespace detail {

inline const Rational& require_param(const FamilySpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw BadParam(std::string(to_string(spec.kind)) + " family needs parameter '" + key + "'");
  }
  return it->second;
}

inline std::vector<Rational> fibonacci_values(std::size_t n) {
  const auto f = fibonacci_sequence(n + 1);
  const BigInt& total = f[n];
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = n - 1; k >= 1; --k) out.emplace_back(f[k - 1], total);  // f_{n-1} .. f_1
  out.emplace_back(f[1], total);                                                // f_2
  return out;
}

inline std::vector<Rational> dyadic_values(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = 1; k < n; ++k) out.emplace_back(BigInt(1), BigInt(1) << k);
  out.push_back(out.back());
  return out;
}

inline std::vector<Rational> epsilon_values(std::size_t n, const Rational& eps) {
  std::vector<Rational> out;
  out.reserve(n);
  out.push_back(1 - eps);
  for (std::size_t k = 1; k + 1 < n; ++k) out.push_back(eps / (BigInt(1) << k));
  out.push_back(eps / (BigInt(1) << (n - 2)));
  return out;
}

inline std::vector<double> poisson_tail_values(std::size_t n, double lambda) {
  // p_k proportional to P(X >= k), k = 1..n, for X ~ Poisson(lambda).
  const auto horizon = static_cast<std::size_t>(std::ceil(lambda + 40.0 * std::sqrt(lambda) + 50.0)) + n;
  std::vector<double> pmf(horizon + 1);
  for (std::size_t j = 0; j <= horizon; ++j) {
    const double jd = static_cast<double>(j);
    pmf[j] = std::exp(-lambda + jd * std::log(lambda) - std::lgamma(jd + 1.0));
  }
  std::vector<double> tail(horizon + 2, 0.0);
  for (std::size_t j = horizon + 1; j-- > 0;) tail[j] = tail[j + 1] + pmf[j];
  std::vector<double> out(tail.begin() + 1, tail.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  double total = 0.0;
  for (double v : out) total += v;
  for (auto& v : out) {
    if (!(v > 0.0)) throw BadParam("Poisson tail underflows at n = " + std::to_string(n));
    v /= total;
  }
  return out;
}

}  // namespace detail

/// Builds a member of a named family as a sorted, normalized distribution.
///
///  - fibonacci:        (f_{n-1}, ..., f_2, f_1, f_2) / f_{n+1}
///  - epsilon:          (1-e, e/2, e/4, ..., e/2^{n-2}, e/2^{n-2}),  e in (0, 2/3]
///  - dyadic:           (1/2, 1/4, ..., 1/2^{n-1}, 1/2^{n-1})
///  - high_redundancy:  (1-e, e Q_1, ..., e Q_{n-1}) with 1-e >= max(Q_1 e, (1-Q_1) e)
///  - geometric_tail:   (1-q) q^{i-1} for i < n, last symbol takes the tail mass q^{n-1}
///  - poisson_tail:     P(X >= k) for k = 1..n, renormalized
template <class T>
Distribution<T> make_family(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw BadParam("family size must be at least 2, got " + std::to_string(n));

  std::vector<Rational> exact;
  switch (spec.kind) {
    case FamilyKind::fibonacci:
      exact = detail::fibonacci_values(n);
      break;
    case FamilyKind::dyadic:
      exact = detail::dyadic_values(n);
      break;
    case FamilyKind::epsilon: {
      const Rational& eps = detail::require_param(spec, "eps");
      if (!(eps > 0) || eps > Rational(2, 3)) throw BadParam("eps must lie in (0, 2/3]");
      exact = detail::epsilon_values(n, eps);
      break;
    }
    case FamilyKind::high_redundancy: {
      if (n < 3) throw BadParam("high_redundancy needs n >= 3");
      const Rational& eps = detail::require_param(spec, "eps");
      if (!(eps > 0) || !(eps < 1)) throw BadParam("eps must lie in (0, 1)");
      const auto inner = Distribution<Rational>::from_values(spec.inner ? *spec.inner : detail::dyadic_values(n - 1));
      if (inner.size() != n - 1) throw BadParam("inner distribution must have n-1 symbols");
      const Rational& q1 = inner[0];
      if (1 - eps < q1 * eps || 1 - eps < (1 - q1) * eps) {
        throw BadParam("eps too large: need 1-eps >= max(q_1 eps, (1-q_1) eps)");
      }
      exact.push_back(1 - eps);
      for (const auto& q : inner.probs()) exact.push_back(q * eps);
      break;
    }
    case FamilyKind::geometric_tail: {
      const Rational& q = detail::require_param(spec, "q");
      if (!(q > 0) || !(q < 1)) throw BadParam("q must lie in (0, 1)");
      Rational power = 1;
      for (std::size_t i = 1; i < n; ++i) {
        exact.push_back((1 - q) * power);
        power *= q;
      }
      exact.push_back(power);
      break;
    }
    case FamilyKind::poisson_tail: {
      const Rational& lambda = detail::require_param(spec, "lambda");
      if (!(lambda > 0)) throw BadParam("lambda must be positive");
      const auto values = detail::poisson_tail_values(n, to_double(lambda));
      return Distribution<T>::from_values(std::vector<T>(values.begin(), values.end()));
    }
  }

  if constexpr (std::is_same_v<T, Rational>) {
    return Distribution<T>::from_values(std::move(exact));
  } else {
    std::vector<T> converted;
    converted.reserve(exact.size());
    for (const auto& v : exact) converted.push_back(static_cast<T>(to_double(v)));
    return Distribution<T>::from_values(std::move(converted));
  }
}

inline Distribution<Rational> fibonacci_dist(std::size_t n) {
  return make_family<Rational>(FamilySpec{FamilyKind::fibonacci, n, {}, std::nullopt});
}

}  // namespace auh
