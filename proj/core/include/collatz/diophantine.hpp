#pragma once

// Linear Diophantine equations a*x + b*y = c over the integers.

#include <optional>
#include <utility>

#include "collatz/natural.hpp"

namespace collatz {

/// a*x + b*y = gcd with gcd >= 0.
struct ExtendedGcd {
  Integer gcd;
  Integer x;
  Integer y;
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// The solution set {(s + eta*step_x, t + eta*step_y) : eta in Z} of
/// a*x + b*y = c, where step_x = b/gcd and step_y = -a/gcd.
struct DiophantineSolution {
  Integer a;
  Integer b;
  Integer c;
  Integer gcd;
  Integer s;
  Integer t;
  Integer step_x;
  Integer step_y;

  std::pair<Integer, Integer> point(const Integer& eta) const;

  /// The eta that produces (x, y), if (x, y) belongs to the family.
  std::optional<Integer> parameter_of(const Integer& x, const Integer& y) const;
};

/// Returns the solution family when gcd(a, b) divides c, nothing otherwise.
/// The particular solution is the extended-Euclid Bezout pair scaled by
/// c/gcd. Throws DomainError for a = b = 0.
std::optional<DiophantineSolution> solve_linear_diophantine(const Integer& a, const Integer& b,
                                                            const Integer& c);

struct SolvabilityReport {
  Natural y0;
  Natural x;                        // C(y0)
  bool odd = false;
  bool relation_holds = false;      // x - 3*y0 = 1 (odd) or 2x - y0 = 0 (even)
  bool in_family = false;           // (x, y0) lies on the solver's family
  bool fixed_point_in_family = true;  // (4, 1) on x - 3y = 1 (odd only)
  bool eta_relation_holds = true;     // trace of y0 satisfies the eta identities (odd only)

  bool passed() const noexcept {
    return relation_holds && in_family && fixed_point_in_family && eta_relation_holds;
  }
};

/// Checks that x = C(y0) is a solution of the matching linear Diophantine
/// equation: x - 3y = 1 for odd y0, 2x - y = 0 for even y0. For odd y0 the
/// odd-part trace started at y0 is also checked against the family anchored
/// at (x_1, y_0).
SolvabilityReport verify_collatz_solvability(const Natural& y0);

}  // namespace collatz
