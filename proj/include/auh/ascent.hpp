#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>

#include "auh/bounds.hpp"
#include "auh/classify.hpp"
#include "auh/code_tree.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/metrics.hpp"
#include "auh/moves.hpp"
#include "auh/search.hpp"

namespace auh {

template <class T>
struct AscentOptions {
  double tol = 1e-12;             // violations at or below this are treated as zero
  double fraction_floor = 1e-12;  // smallest step fraction tried before giving up on a move
  std::uint64_t max_iterations = 100000;
  std::function<void(std::uint64_t, const Distribution<T>&, double)> on_iterate;
};

/// Objective value under the anti-uniform profile.
template <class T>
double objective_value(const Distribution<T>& dist, Objective objective) {
  if (objective == Objective::entropy) return entropy(dist);
  return to_double(average_length(dist.probs(), auh_profile(dist.size())));
}

/// Hill climbing with the mass-shifting moves. Each iteration tries the applicable
/// moves in decreasing order of violation, halving the step fraction until the
/// objective strictly rises; the first success is taken. Every iterate is
/// anti-uniform and the objective never decreases.
///
/// Terminates "converged" when no move is triggered above `tol`, and
/// "stationary" when moves are triggered but none improves at any fraction
/// down to `fraction_floor`. Throws ConvergenceFailure past the iteration cap.
template <class T>
SearchReport local_ascent(const Distribution<T>& start, Objective objective, const AscentOptions<T>& options = {}) {
  if (!is_auh(start)) throw NotAUHStart("ascent start is not anti-uniform");
  if (!(options.fraction_floor > 0.0) || options.fraction_floor > 1.0) throw BadParam("fraction floor must lie in (0, 1]");

  Distribution<T> current = start;
  double value = objective_value(current, objective);
  std::uint64_t evaluated = 1;
  std::uint64_t iteration = 0;
  std::string termination;
  const T tol(options.tol);

  while (termination.empty()) {
    if (options.on_iterate) options.on_iterate(iteration, current, value);
    const auto moves = move_violations(current, tol);
    if (moves.empty()) {
      termination = "converged";
      break;
    }
    if (iteration == options.max_iterations) {
      throw ConvergenceFailure("ascent did not converge within " + std::to_string(options.max_iterations) +
                               " iterations");
    }

    bool accepted = false;
    for (const auto& move : moves) {
      for (double fraction = 1.0; fraction >= options.fraction_floor; fraction /= 2) {
        std::optional<Distribution<T>> candidate;
        try {
          candidate = apply_move(current, move, fraction);
        } catch (const MoveNotApplicable&) {
          if (move.kind == MoveKind::balance) break;
          continue;
        }
        if (!is_auh(*candidate)) {
          if (move.kind == MoveKind::balance) break;
          continue;
        }
        const double next = objective_value(*candidate, objective);
        ++evaluated;
        const bool improves = next > value || (move.kind == MoveKind::balance && next >= value - 1e-14);
        if (improves) {
          current = std::move(*candidate);
          value = next;
          accepted = true;
          break;
        }
        if (move.kind == MoveKind::balance) break;
      }
      if (accepted) break;
    }
    if (!accepted) {
      termination = "stationary";
      break;
    }
    ++iteration;
  }

  SearchReport report;
  report.objective = objective;
  report.method = "ascent";
  report.n = current.size();
  report.best = current.as_doubles();
  if constexpr (std::is_same_v<T, Rational>) {
    report.best_exact.assign(current.probs().begin(), current.probs().end());
  }
  report.best_value = value;
  if (objective == Objective::avg_length) {
    const Rational bound = l_max(current.size());
    report.bound_exact = bound;
    report.bound = to_double(bound);
    if constexpr (std::is_same_v<T, Rational>) {
      const Rational exact = average_length(current.probs(), auh_profile(current.size()));
      report.best_value_exact = exact;
      report.gap_exact = bound - exact;
    }
  } else {
    report.bound = h_max(current.size());
  }
  report.gap = report.bound - report.best_value;
  report.evaluated = evaluated;
  report.iterations = iteration;
  report.termination = termination;
  return report;
}

}  // namespace auh
