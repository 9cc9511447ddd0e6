#pragma once

// Brute-force iteration of the classical Collatz map. This is the oracle the
// accelerated odd-part iteration is checked against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

/// values[k] = C^k(start); deltas[k] = values[k+1] - values[k].
struct ClassicalTrajectory {
  Natural start;
  std::vector<Natural> values;
  std::optional<std::size_t> reached_one_at;
  std::vector<Integer> deltas;

  /// Number of Collatz applications recorded (values.size() - 1).
  std::size_t steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Iterates the Collatz map from n, applying it at most max_steps times.
///
/// With stop_at_one the iteration ends at the first value equal to 1 and
/// BudgetExhausted is thrown if that needs more than max_steps applications.
/// Without it, exactly max_steps applications are performed, running through
/// the 4 -> 2 -> 1 cycle as often as needed.
ClassicalTrajectory classical_trajectory(const Natural& n,
                                         std::uint64_t max_steps = kDefaultMaxSteps,
                                         bool stop_at_one = true);

/// Smallest k with C^k(n) = 1. Throws BudgetExhausted past max_steps.
std::uint64_t total_stopping_time(const Natural& n, std::uint64_t max_steps = kDefaultMaxSteps);

/// {C^k(n) : 0 <= k <= total_stopping_time(n)}.
std::set<Natural> trajectory_set(const Natural& n, std::uint64_t max_steps = kDefaultMaxSteps);

/// C(v) - v.
Integer step_delta(const Natural& v);

/// Forward differences of t.values. Requires at least two values.
std::vector<Integer> discrete_derivatives(const ClassicalTrajectory& t);

struct ParitySignReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks, for every index k of t, that values[k] is odd exactly when
/// delta_k > 0 and delta_k = 2*values[k] + 1, and even exactly when
/// delta_k < 0 and delta_k = -values[k]/2. The last value has no recorded
/// delta; its delta is taken from one further application of the map.
/// Indices whose stored delta or successor disagrees with the map are also
/// reported.
ParitySignReport check_parity_sign_law(const ClassicalTrajectory& t);

}  // namespace collatz
