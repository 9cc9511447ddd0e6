#pragma once

// Odd-part ("optimal") Collatz iteration.
//
// Row 0 holds x_0 = n and its split y_0 * 2^u_0. Every later row applies the
// Collatz map to the previous odd part, x_i = 3*y_{i-1} + 1, and splits the
// result again: y_i = odd_part(x_i), u_i = two_adic_valuation(x_i). The
// parameter eta_i = y_0 - y_i places (x_{i+1}, y_i) on the solution family of
// x - 3y = 1 anchored at (x_1, y_0).
//
// Termination uses a one-step lookahead: after row i is built, x_{i+1} is
// computed and the squared distance between the points (x_{i+1}, y_i) and
// (x_i, y_{i-1}) is stored on row i-1. The trace stops when that distance is
// zero, which happens only at the fixed point x = 4, y = 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

inline constexpr std::uint64_t kDefaultMaxIters = 1'000'000;

struct TraceRow {
  std::size_t w = 0;
  Natural x;
  Natural y;
  std::uint64_t u = 0;
  Integer eta;
  /// Exact squared distance; empty on the last row of a trace.
  std::optional<Integer> v_sq;

  /// 2^u, the even part of x.
  Natural z() const { return power(2, u); }

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct AcceleratedTrace {
  Natural input;
  std::vector<TraceRow> rows;
  /// Smallest row index with y = 1.
  std::optional<std::size_t> i_min;
  /// True when a zero distance was observed within the iteration budget.
  bool terminated = false;

  friend bool operator==(const AcceleratedTrace&, const AcceleratedTrace&) = default;
};

/// Runs at most max_iters iterations and returns whatever was produced;
/// `terminated` tells whether the stopping rule fired.
AcceleratedTrace run_accelerated(const Natural& n, std::uint64_t max_iters = kDefaultMaxIters);

/// Like run_accelerated, but throws BudgetExhausted if the trace does not
/// terminate within max_iters iterations.
AcceleratedTrace accelerated_trace(const Natural& n, std::uint64_t max_iters = kDefaultMaxIters);

struct EtaReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// For each row i checks eta_i = y_0 - y_i, and x_{i+1} = x_1 - 3*eta_i
/// wherever row i+1 exists (i >= 1). Requires at least two rows.
EtaReport verify_eta_relation(const AcceleratedTrace& t);

/// i_min + sum_{i=0}^{i_min} u_i + 1: the number of distinct values on the
/// classical trajectory down to 1. Throws DomainError if y never reached 1.
std::uint64_t cardinality_formula(const AcceleratedTrace& t);

struct CrossCheckReport {
  Natural n;
  std::size_t i_min = 0;
  std::uint64_t cardinality = 0;      // from the odd-part trace
  std::uint64_t stopping_time = 0;    // from brute-force iteration
  std::size_t set_cardinality = 0;    // |{C^k(n)}|
  bool odd_values_match = false;      // y_0..y_{i_min} == odd values of the trajectory
  bool halvings_match = false;        // sum of u_i == number of halving steps

  bool passed() const noexcept {
    return cardinality == stopping_time + 1 && cardinality == set_cardinality &&
           odd_values_match && halvings_match;
  }
};

/// Compares the odd-part trace of n against the brute-force trajectory.
/// Throws BudgetExhausted when either side runs out of budget.
CrossCheckReport cross_check(const Natural& n, std::uint64_t max_budget = kDefaultMaxIters);

}  // namespace collatz
