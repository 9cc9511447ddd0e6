#include "collatz/classical.hpp"

#include <algorithm>
#include <string>

namespace collatz {

namespace {

[[noreturn]] void throw_budget(const Natural& n, std::uint64_t max_steps) {
  throw BudgetExhausted("trajectory of " + n.to_string() + " did not reach 1 within " +
                            std::to_string(max_steps) + " steps",
                        max_steps);
}

bool law_holds(const Natural& v, const Integer& delta) {
  if (v.is_odd()) {
    return sgn(delta) > 0 && delta == 2 * v.value() + 1;
  }
  return sgn(delta) < 0 && 2 * delta == -v.value();
}

}  // namespace

ClassicalTrajectory classical_trajectory(const Natural& n, std::uint64_t max_steps,
                                         bool stop_at_one) {
  ClassicalTrajectory t{n, {n}, std::nullopt, {}};
  if (n.is_one()) {
    t.reached_one_at = 0;
  }
  if (stop_at_one) {
    while (!t.values.back().is_one()) {
      if (t.steps() == max_steps) {
        throw_budget(n, max_steps);
      }
      t.values.push_back(collatz_step(t.values.back()));
    }
    t.reached_one_at = t.steps();
  } else {
    t.values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(max_steps, 1u << 16)) + 1);
    for (std::uint64_t k = 0; k < max_steps; ++k) {
      t.values.push_back(collatz_step(t.values.back()));
      if (!t.reached_one_at && t.values.back().is_one()) {
        t.reached_one_at = t.steps();
      }
    }
  }
  if (t.values.size() >= 2) {
    t.deltas = discrete_derivatives(t);
  }
  return t;
}

std::uint64_t total_stopping_time(const Natural& n, std::uint64_t max_steps) {
  // In-place iteration; no intermediate values are kept.
  Integer v = n.value();
  mpz_ptr p = v.get_mpz_t();
  std::uint64_t k = 0;
  while (mpz_cmp_ui(p, 1) != 0) {
    if (k == max_steps) {
      throw_budget(n, max_steps);
    }
    if (mpz_even_p(p)) {
      mpz_tdiv_q_2exp(p, p, 1);
    } else {
      mpz_mul_ui(p, p, 3);
      mpz_add_ui(p, p, 1);
    }
    ++k;
  }
  return k;
}

std::set<Natural> trajectory_set(const Natural& n, std::uint64_t max_steps) {
  const ClassicalTrajectory t = classical_trajectory(n, max_steps, true);
  return {t.values.begin(), t.values.end()};
}

Integer step_delta(const Natural& v) {
  return collatz_step(v).value() - v.value();
}

std::vector<Integer> discrete_derivatives(const ClassicalTrajectory& t) {
  if (t.values.size() < 2) {
    throw DomainError("discrete derivatives need at least two values");
  }
  std::vector<Integer> deltas;
  deltas.reserve(t.values.size() - 1);
  for (std::size_t k = 0; k + 1 < t.values.size(); ++k) {
    deltas.emplace_back(t.values[k + 1].value() - t.values[k].value());
  }
  return deltas;
}

ParitySignReport check_parity_sign_law(const ClassicalTrajectory& t) {
  ParitySignReport report;
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    const Natural& v = t.values[k];
    bool ok = true;
    Integer delta;
    if (k + 1 < t.values.size()) {
      ok = t.values[k + 1] == collatz_step(v) && k < t.deltas.size() &&
           t.deltas[k] == t.values[k + 1].value() - v.value();
      delta = k < t.deltas.size() ? t.deltas[k] : Integer(0);
    } else {
      delta = step_delta(v);
    }
    ++report.checked;
    if (!ok || !law_holds(v, delta)) {
      report.violations.push_back(k);
    }
  }
  return report;
}

}  // namespace collatz
