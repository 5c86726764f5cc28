#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "auh/ascent.hpp"
#include "auh/bounds.hpp"
#include "auh/classify.hpp"
#include "auh/code_tree.hpp"
#include "auh/codec.hpp"
#include "auh/families.hpp"
#include "auh/grid.hpp"
#include "auh/metrics.hpp"
#include "auh/moves.hpp"
#include "auh/random.hpp"
#include "auh/search.hpp"

// Numerical checks of the extremal results, shared by the CLI `verify`
// command. Each check reports pass/fail with a case count and a detail line.

namespace auh {

struct VerifyOptions {
  std::size_t n_lo = 3;
  std::size_t n_hi = 5;
  std::optional<std::uint32_t> grid;  // default_resolution(n) when absent
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

inline void fail(CheckResult& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

inline CheckResult check_length_attainment() {
  CheckResult c{"length_bound.attainment", true, 0, "L(fibonacci_dist(n)) == l_max(n) exactly, n = 2..40"};
  for (std::size_t n = 2; n <= 40; ++n, ++c.cases) {
    const auto d = fibonacci_dist(n);
    const Rational L = average_length(d.probs(), length_profile(build_huffman(d)));
    if (L != l_max(n)) fail(c, "n=" + std::to_string(n) + ": L=" + to_string(L) + " != " + to_string(l_max(n)));
  }
  return c;
}

inline CheckResult check_entropy_attainment() {
  CheckResult c{"entropy_bound.attainment", true, 0, "|H(fibonacci_dist(n)) - h_max(n)| < 1e-10, n = 2..40"};
  for (std::size_t n = 2; n <= 40; ++n, ++c.cases) {
    const double diff = std::abs(entropy(fibonacci_dist(n)) - h_max(n));
    if (!(diff < 1e-10)) fail(c, "n=" + std::to_string(n) + ": |diff| = " + fmt(diff));
  }
  return c;
}

inline CheckResult check_grid(const VerifyOptions& o, Objective objective) {
  const bool length = objective == Objective::avg_length;
  CheckResult c{length ? "length_bound.extremality" : "entropy_bound.extremality", true, 0, ""};
  std::string summary;
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 2); n <= o.n_hi; ++n) {
    const GridSpec spec{n, o.grid ? *o.grid : default_resolution(n)};
    const auto r = brute_force_max(spec, objective, o.workers);
    c.cases += r.evaluated;
    const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(spec.resolution);
    summary += (summary.empty() ? "" : "; ") + where + " gap=" + (r.gap_exact ? to_string(*r.gap_exact) : fmt(r.gap));
    if (length) {
      if (*r.gap_exact < 0) fail(c, where + ": grid point above l_max, gap " + to_string(*r.gap_exact));
      if (*r.gap_exact > Rational(1, spec.resolution)) fail(c, where + ": best point farther than 1/m from l_max");
    } else {
      if (r.best_value > r.bound + 1e-12) {
        fail(c, where + ": grid point H=" + fmt(r.best_value) + " above h_max=" + fmt(r.bound));
      }
      if (r.gap > 5e-3) fail(c, where + ": best point farther than 5e-3 from h_max");
    }
  }
  if (c.passed) c.detail = summary;
  return c;
}

inline CheckResult check_additivity(const VerifyOptions& o) {
  CheckResult c{"spine.additivity", true, 0, "L exact, H and R within 1e-10, every spine node"};
  std::uint64_t seed = o.seed;
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 3); n <= o.n_hi; ++n) {
    for (std::uint64_t t = 0; t < o.trials; ++t) {
      const auto d = to_exact(random_auh(n, seed++));
      const auto L = average_length(d.probs(), auh_profile(n));
      const double H = entropy(d);
      const double R = to_double(L) - H;
      for (std::size_t k = 1; k + 2 <= n; ++k, ++c.cases) {
        const auto parts = decompose(d, k);
        const auto Lm = average_length(parts.merged.probs(), auh_profile(parts.merged.size()));
        const auto Ls = average_length(parts.subtree.probs(), auh_profile(parts.subtree.size()));
        const double u = to_double(parts.u);
        const double Hm = entropy(parts.merged);
        const double Hs = entropy(parts.subtree);
        const double Rsum = (to_double(Lm) - Hm) + u * (to_double(Ls) - Hs);
        if (L != Lm + parts.u * Ls) fail(c, "L identity broken at n=" + std::to_string(n));
        if (!(std::abs(H - (Hm + u * Hs)) < 1e-10)) fail(c, "H identity broken at n=" + std::to_string(n));
        if (!(std::abs(R - Rsum) < 1e-10)) fail(c, "R identity broken at n=" + std::to_string(n));
      }
    }
  }
  return c;
}

inline CheckResult check_limits() {
  CheckResult c{"golden_ratio.limits", true, 3, ""};
  const auto a = asymptotics();
  const double dl = std::abs(to_double(l_max(40)) - a.l_max_inf);
  const double dh = std::abs(h_max(40) - a.h_max_inf);
  const double di = std::abs(h_max_infinite(a.l_max_inf) - a.h_max_inf);
  c.detail = "|l_max(40)-t^-2|=" + fmt(dl) + " |h_max(40)-H_inf|=" + fmt(dh) + " |H_inf(t^-2)-H_inf|=" + fmt(di);
  if (!(dl < 1e-7) || !(dh < 1e-6) || !(di < 1e-12)) c.passed = false;
  return c;
}

inline CheckResult check_epsilon_family(const VerifyOptions& o) {
  CheckResult c{"epsilon.limits", true, 0, "eps = 1e-6: L - 1 < 1e-5 n and H < 1e-4"};
  std::vector<std::size_t> sizes{10};
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 2); n <= o.n_hi; ++n) sizes.push_back(n);
  for (auto n : sizes) {
    ++c.cases;
    const auto d = make_family<Rational>({FamilyKind::epsilon, n, {{"eps", Rational(1, 1000000)}}, std::nullopt});
    const auto m = huffman_metrics(d);
    if (!(to_double(m.average_length - 1) < 1e-5 * static_cast<double>(n)) || !(m.entropy < 1e-4)) {
      fail(c, "n=" + std::to_string(n) + ": L=" + fmt(to_double(m.average_length)) + " H=" + fmt(m.entropy));
    }
  }
  return c;
}

inline CheckResult check_redundancy_limit() {
  CheckResult c{"redundancy.limit", true, 0, ""};
  auto redundancy = [](std::size_t n, const Rational& eps) {
    return huffman_metrics(make_family<Rational>({FamilyKind::high_redundancy, n, {{"eps", eps}}, std::nullopt}))
        .redundancy;
  };
  const double r1 = redundancy(8, Rational(1, 100));
  const double target = 1.0 - binary_entropy(0.01);
  const double r2 = redundancy(8, Rational(1, 1000000));
  c.cases += 2;
  if (!(std::abs(r1 - target) < 1e-9) || !(r1 > 0.91)) fail(c, "eps=0.01: R=" + fmt(r1) + ", expected " + fmt(target));
  if (!(r2 > 1 - 1e-4)) fail(c, "eps=1e-6: R=" + fmt(r2));
  for (std::size_t n = 2; n <= 16; ++n, ++c.cases) {
    const double r = huffman_metrics(make_family<Rational>({FamilyKind::dyadic, n, {}, std::nullopt})).redundancy;
    if (!(std::abs(r) < 1e-12)) fail(c, "dyadic n=" + std::to_string(n) + ": R=" + fmt(r));
  }
  if (c.passed) c.detail = "R(eps=0.01)=" + fmt(r1) + " R(eps=1e-6)=" + fmt(r2) + " dyadic R=0";
  return c;
}

inline CheckResult check_moves(const VerifyOptions& o) {
  CheckResult c{"moves.monotone", true, 0, "lemma2/lemma3 moves raise L and H, conserve mass exactly, stay anti-uniform"};
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> frac(0.05, 1.0);
  const std::size_t lo = std::max<std::size_t>(o.n_lo, 3);
  std::uniform_int_distribution<std::size_t> pick_n(lo, std::max(lo, o.n_hi));
  std::uint64_t attempts = 0;
  while (c.cases < o.trials && attempts < 100 * o.trials) {
    ++attempts;
    const std::size_t n = pick_n(rng);
    const auto d = to_exact(random_auh(n, rng()));
    if (!is_auh(d)) continue;  // float sample on the boundary, off by rounding
    const double fraction = frac(rng);
    std::optional<Distribution<Rational>> moved;
    try {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
      moved = i == 0 ? lemma3_move(d, fraction) : lemma2_move(d, i, fraction);
    } catch (const MoveNotApplicable&) {
      continue;
    }
    ++c.cases;
    Rational total = 0;
    for (const auto& p : moved->probs()) total += p;
    const auto profile = auh_profile(n);
    if (total != 1) fail(c, "mass not conserved");
    if (!(average_length(moved->probs(), profile) > average_length(d.probs(), profile))) fail(c, "L did not increase");
    if (!(entropy(*moved) > entropy(d))) fail(c, "H did not increase");
    if (!is_auh(*moved)) fail(c, "move left the anti-uniform region");
  }
  return c;
}

inline CheckResult check_ascent(const VerifyOptions& o, Objective objective) {
  const bool length = objective == Objective::avg_length;
  CheckResult c{length ? "ascent.length" : "ascent.entropy", true, 0, ""};
  double worst = 0.0;
  const std::uint64_t starts = std::min<std::uint64_t>(o.trials, 100);
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 3); n <= o.n_hi; ++n) {
    for (std::uint64_t s = 0; s < starts; ++s, ++c.cases) {
      const auto r = local_ascent(random_auh(n, o.seed + s), objective);
      worst = std::max(worst, std::abs(r.gap));
      if (!(std::abs(r.gap) < 1e-6)) {
        fail(c, "n=" + std::to_string(n) + " start seed " + std::to_string(o.seed + s) + ": ends at " +
                    fmt(r.best_value) + ", bound " + fmt(r.bound));
      }
    }
  }
  if (c.passed) c.detail = "every run within 1e-6 of the bound, worst " + fmt(worst);
  return c;
}

inline CheckResult check_soundness(const VerifyOptions& o) {
  CheckResult c{"bounds.soundness", true, 0, "random anti-uniform samples: L <= l_max exactly, H <= h_max + 1e-12"};
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 2); n <= o.n_hi; ++n) {
    const Rational bound = l_max(n);
    const double hb = h_max(n);
    for (std::uint64_t t = 0; t < o.trials; ++t, ++c.cases) {
      const auto d = to_exact(random_auh(n, o.seed + 7919 * t + n));
      if (average_length(d.probs(), auh_profile(n)) > bound) fail(c, "n=" + std::to_string(n) + ": L above l_max");
      const double h = entropy(d);
      if (h > hb + 1e-12) fail(c, "n=" + std::to_string(n) + ": sample with H=" + fmt(h) + " > h_max=" + fmt(hb));
    }
  }
  return c;
}

inline CheckResult check_classifier(const VerifyOptions& o) {
  CheckResult c{"classifier.agreement", true, 0, "profile test == structural test == Huffman tree shape"};
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  std::exponential_distribution<double> expo(1.0);
  for (std::size_t n = std::max<std::size_t>(o.n_lo, 3); n <= o.n_hi; ++n) {
    for (std::uint64_t t = 0; t < o.trials; ++t, ++c.cases) {
      std::vector<double> v(n);
      double total = 0.0;
      for (auto& x : v) total += (x = expo(rng));
      for (auto& x : v) x /= total;
      const auto d = t % 2 == 0 ? Distribution<double>::from_values(v) : random_auh(n, rng());
      const bool by_cost = is_auh(d);
      const bool by_structure = satisfies_auh_structure(d.probs());
      const bool by_tree = length_profile(build_huffman(d)) == auh_profile(n);
      if (by_cost != by_structure || by_cost != by_tree) fail(c, "disagreement at n=" + std::to_string(n));
    }
  }
  return c;
}

inline CheckResult check_boundary_source() {
  CheckResult c{"boundary_source", true, 1, "(0.35, 0.30, 0.20, 0.15) is anti-uniform with L = 2 exactly"};
  const auto d = Distribution<Rational>::from_values(
      {Rational(35, 100), Rational(30, 100), Rational(20, 100), Rational(15, 100)});
  if (!is_auh(d) || average_length(d.probs(), auh_profile(4)) != l_max(4)) c.passed = false;
  return c;
}

inline CheckResult check_codec(const VerifyOptions& o) {
  CheckResult c{"codec.roundtrip", true, 0, "decode(encode(s)) == s, n = 2..16"};
  std::mt19937_64 rng(o.seed);
  for (std::size_t n = 2; n <= 16; ++n) {
    std::uniform_int_distribution<std::uint32_t> sym(1, static_cast<std::uint32_t>(n));
    for (std::uint64_t t = 0; t < std::min<std::uint64_t>(o.trials, 100); ++t, ++c.cases) {
      std::vector<std::uint32_t> s(std::uniform_int_distribution<std::size_t>(0, 200)(rng));
      for (auto& x : s) x = sym(rng);
      if (decode_stream(encode_stream(s, n), n) != s) fail(c, "roundtrip failed at n=" + std::to_string(n));
    }
  }
  return c;
}

}  // namespace detail

/// Runs every check. Grid and sampling checks cover n in [n_lo, n_hi].
inline std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.n_lo < 2 || options.n_hi < options.n_lo) throw BadParam("need 2 <= n_lo <= n_hi");
  std::vector<CheckResult> out;
  out.push_back(detail::check_length_attainment());
  out.push_back(detail::check_grid(options, Objective::avg_length));
  out.push_back(detail::check_entropy_attainment());
  out.push_back(detail::check_grid(options, Objective::entropy));
  out.push_back(detail::check_additivity(options));
  out.push_back(detail::check_limits());
  out.push_back(detail::check_epsilon_family(options));
  out.push_back(detail::check_redundancy_limit());
  out.push_back(detail::check_moves(options));
  out.push_back(detail::check_ascent(options, Objective::avg_length));
  out.push_back(detail::check_ascent(options, Objective::entropy));
  out.push_back(detail::check_soundness(options));
  out.push_back(detail::check_classifier(options));
  out.push_back(detail::check_boundary_source());
  out.push_back(detail::check_codec(options));
  return out;
}

}  // namespace auh
