#include "collatz/accelerated.hpp"

#include <set>
#include <string>
#include <utility>

#include "collatz/classical.hpp"

namespace collatz {

namespace {

// 3y + 1 for odd y.
Natural odd_step(const Natural& y) {
  Integer x;
  mpz_mul_ui(x.get_mpz_t(), y.value().get_mpz_t(), 3);
  mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), 1);
  return Natural(std::move(x));
}

}  // namespace

AcceleratedTrace run_accelerated(const Natural& n, std::uint64_t max_iters) {
  if (max_iters == 0) {
    throw DomainError("accelerated trace needs at least one iteration");
  }
  AcceleratedTrace t;
  t.input = n;
  t.rows.push_back(TraceRow{0, n, odd_part(n), two_adic_valuation(n), Integer(0), std::nullopt});
  const Integer y0 = t.rows.front().y.value();

  Natural lookahead = odd_step(t.rows.front().y);
  for (std::uint64_t i = 1; i <= max_iters; ++i) {
    const TraceRow& prev = t.rows.back();
    TraceRow row;
    row.w = static_cast<std::size_t>(i);
    row.x = std::move(lookahead);
    row.u = two_adic_valuation(row.x);
    row.y = odd_part(row.x);
    row.eta = y0 - row.y.value();

    lookahead = odd_step(row.y);
    const Integer dx = lookahead.value() - row.x.value();
    const Integer dy = row.y.value() - prev.y.value();
    Integer v_sq = dx * dx + dy * dy;
    const bool zero = sgn(v_sq) == 0;
    t.rows.back().v_sq = std::move(v_sq);
    t.rows.push_back(std::move(row));
    if (zero) {
      t.terminated = true;
      break;
    }
  }

  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i].y.is_one()) {
      t.i_min = i;
      break;
    }
  }
  return t;
}

AcceleratedTrace accelerated_trace(const Natural& n, std::uint64_t max_iters) {
  AcceleratedTrace t = run_accelerated(n, max_iters);
  if (!t.terminated) {
    throw BudgetExhausted("odd-part trace of " + n.to_string() + " did not terminate within " +
                              std::to_string(max_iters) + " iterations",
                          max_iters);
  }
  return t;
}

EtaReport verify_eta_relation(const AcceleratedTrace& t) {
  if (t.rows.size() < 2) {
    throw DomainError("eta relation needs at least two rows");
  }
  EtaReport report;
  const Integer& y0 = t.rows[0].y.value();
  const Integer& x1 = t.rows[1].x.value();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const TraceRow& row = t.rows[i];
    bool ok = row.eta == y0 - row.y.value();
    if (i >= 1 && i + 1 < t.rows.size()) {
      ok = ok && t.rows[i + 1].x.value() == x1 - 3 * row.eta;
    }
    ++report.checked;
    if (!ok) {
      report.violations.push_back(i);
    }
  }
  return report;
}

std::uint64_t cardinality_formula(const AcceleratedTrace& t) {
  if (!t.i_min) {
    throw DomainError("trace of " + t.input.to_string() + " never reached y = 1");
  }
  std::uint64_t halvings = 0;
  for (std::size_t i = 0; i <= *t.i_min; ++i) {
    halvings += t.rows[i].u;
  }
  return *t.i_min + halvings + 1;
}

CrossCheckReport cross_check(const Natural& n, std::uint64_t max_budget) {
  const AcceleratedTrace trace = accelerated_trace(n, max_budget);
  const ClassicalTrajectory traj = classical_trajectory(n, max_budget, true);

  CrossCheckReport report;
  report.n = n;
  report.i_min = *trace.i_min;
  report.cardinality = cardinality_formula(trace);
  report.stopping_time = total_stopping_time(n, max_budget);
  report.set_cardinality = std::set<Natural>(traj.values.begin(), traj.values.end()).size();

  std::vector<const Natural*> odd_values;
  std::uint64_t halvings = 0;
  for (const Natural& v : traj.values) {
    if (v.is_odd()) {
      odd_values.push_back(&v);
    } else {
      ++halvings;
    }
  }
  report.odd_values_match = odd_values.size() == report.i_min + 1;
  for (std::size_t i = 0; report.odd_values_match && i <= report.i_min; ++i) {
    report.odd_values_match = *odd_values[i] == trace.rows[i].y;
  }
  std::uint64_t u_sum = 0;
  for (std::size_t i = 0; i <= report.i_min; ++i) {
    u_sum += trace.rows[i].u;
  }
  report.halvings_match = u_sum == halvings;
  return report;
}

}  // namespace collatz
