#include "collatz/diophantine.hpp"

#include "collatz/accelerated.hpp"

namespace collatz {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  Integer q, rem;
  while (sgn(r) != 0) {
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    old_r.swap(r);
    r.swap(rem);
    // (old_s, s) <- (s, old_s - q*s), likewise for t.
    mpz_submul(old_s.get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    old_s.swap(s);
    mpz_submul(old_t.get_mpz_t(), q.get_mpz_t(), t.get_mpz_t());
    old_t.swap(t);
  }
  if (sgn(old_r) < 0) {
    mpz_neg(old_r.get_mpz_t(), old_r.get_mpz_t());
    mpz_neg(old_s.get_mpz_t(), old_s.get_mpz_t());
    mpz_neg(old_t.get_mpz_t(), old_t.get_mpz_t());
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

std::pair<Integer, Integer> DiophantineSolution::point(const Integer& eta) const {
  return {s + eta * step_x, t + eta * step_y};
}

std::optional<Integer> DiophantineSolution::parameter_of(const Integer& x,
                                                         const Integer& y) const {
  Integer eta;
  if (sgn(step_x) != 0) {
    const Integer dx = x - s;
    if (!mpz_divisible_p(dx.get_mpz_t(), step_x.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(eta.get_mpz_t(), dx.get_mpz_t(), step_x.get_mpz_t());
    if (y != t + eta * step_y) {
      return std::nullopt;
    }
  } else {
    const Integer dy = y - t;
    if (x != s || !mpz_divisible_p(dy.get_mpz_t(), step_y.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(eta.get_mpz_t(), dy.get_mpz_t(), step_y.get_mpz_t());
  }
  return eta;
}

std::optional<DiophantineSolution> solve_linear_diophantine(const Integer& a, const Integer& b,
                                                            const Integer& c) {
  if (sgn(a) == 0 && sgn(b) == 0) {
    throw DomainError("a and b cannot both be zero");
  }
  ExtendedGcd e = extended_gcd(a, b);
  if (!mpz_divisible_p(c.get_mpz_t(), e.gcd.get_mpz_t())) {
    return std::nullopt;
  }
  DiophantineSolution sol;
  sol.a = a;
  sol.b = b;
  sol.c = c;
  Integer scale;
  mpz_divexact(scale.get_mpz_t(), c.get_mpz_t(), e.gcd.get_mpz_t());
  sol.s = e.x * scale;
  sol.t = e.y * scale;
  mpz_divexact(sol.step_x.get_mpz_t(), b.get_mpz_t(), e.gcd.get_mpz_t());
  mpz_divexact(sol.step_y.get_mpz_t(), a.get_mpz_t(), e.gcd.get_mpz_t());
  sol.step_y = -sol.step_y;
  sol.gcd = std::move(e.gcd);
  return sol;
}

SolvabilityReport verify_collatz_solvability(const Natural& y0) {
  SolvabilityReport report;
  report.y0 = y0;
  report.x = collatz_step(y0);
  report.odd = y0.is_odd();
  const Integer& x = report.x.value();
  const Integer& y = y0.value();

  if (report.odd) {
    report.relation_holds = x - 3 * y == 1;
    const auto family = solve_linear_diophantine(1, -3, 1);
    report.in_family = family && family->parameter_of(x, y).has_value();
    // Anchored at (x_1, y_0): x = x_1 - 3*eta, y = y_0 - eta. The fixed point
    // (4, 1) is reached at eta = y_0 - 1.
    report.fixed_point_in_family =
        family && family->parameter_of(4, 1).has_value() && x - 3 * (y - 1) == 4;
    const AcceleratedTrace trace = accelerated_trace(y0);
    report.eta_relation_holds =
        trace.rows[1].x == report.x && verify_eta_relation(trace).passed();
  } else {
    report.relation_holds = 2 * x - y == 0;
    const auto family = solve_linear_diophantine(2, -1, 0);
    report.in_family = family && family->parameter_of(x, y).has_value();
  }
  return report;
}

}  // namespace collatz
