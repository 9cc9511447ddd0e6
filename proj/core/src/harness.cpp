#include "collatz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "collatz/classical.hpp"

namespace collatz {

namespace {

// Evaluates work(0..count-1) on up to `workers` threads. on_done(i, result)
// runs under a lock in strictly ascending i as soon as the prefix [0, i] has
// finished. The first exception thrown by work stops the pool and is
// rethrown to the caller.
template <typename Result, typename Work, typename Done>
std::vector<Result> run_ordered(std::size_t count, std::size_t workers, Work&& work,
                                Done&& on_done) {
  std::vector<Result> results(count);
  std::vector<char> finished(count, 0);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t flushed = 0;
  std::exception_ptr error;

  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        results[i] = work(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) {
          error = std::current_exception();
        }
        next.store(count);
        return;
      }
      std::lock_guard lock(mu);
      finished[i] = 1;
      while (!error && flushed < count && finished[flushed]) {
        on_done(flushed, results[flushed]);
        ++flushed;
      }
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(body);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return results;
}

void keep_max(std::optional<Extremum>& current, const Natural& n, std::uint64_t value) {
  if (!current || value > current->value) {
    current = Extremum{n, value};
  }
}

void keep_max(std::optional<Extremum>& current, const std::optional<Extremum>& other) {
  if (other) {
    keep_max(current, other->n, other->value);
  }
}

ScanSummary scan_chunk(const Natural& lo, const Natural& hi, std::uint64_t budget) {
  ScanSummary s;
  s.lo = lo;
  s.hi = hi;
  for (Natural n = lo; n < hi; ++n) {
    try {
      const CrossCheckReport r = cross_check(n, budget);
      if (!r.passed()) {
        s.failed.push_back(n);
        continue;
      }
      ++s.verified;
      ++s.histogram[r.i_min];
      keep_max(s.max_i_min, n, r.i_min);
      keep_max(s.max_cardinality, n, r.cardinality);
    } catch (const BudgetExhausted&) {
      ++s.undecided;
    }
  }
  return s;
}

}  // namespace

ScanSummary scan_range(const Natural& lo, const Natural& hi, const ScanOptions& options) {
  if (!(lo < hi)) {
    throw DomainError("scan range is empty: [" + lo.to_string() + ", " + hi.to_string() + ")");
  }
  if (options.chunk_size == 0) {
    throw DomainError("chunk size must be positive");
  }
  const Natural start = options.resume_from ? std::max(lo, *options.resume_from) : lo;

  ScanSummary summary;
  summary.lo = start;
  summary.hi = hi;
  if (!(start < hi)) {
    return summary;
  }

  const Natural span(hi.value() - start.value());
  const std::uint64_t size = span.to_u64();
  const std::uint64_t chunk = options.chunk_size;
  const std::uint64_t chunks = size / chunk + (size % chunk != 0 ? 1 : 0);

  auto bound = [&](std::uint64_t j) {
    const std::uint64_t offset = std::min(size, j * chunk);
    return Natural(Integer(start.value() + Integer(static_cast<unsigned long>(offset))));
  };

  const auto parts = run_ordered<ScanSummary>(
      static_cast<std::size_t>(chunks), options.workers,
      [&](std::size_t j) { return scan_chunk(bound(j), bound(j + 1), options.budget); },
      [&](std::size_t, const ScanSummary& part) {
        if (options.on_chunk) {
          options.on_chunk(ChunkProgress{part.lo, part.hi, part.verified, part.undecided});
        }
      });

  for (const ScanSummary& part : parts) {
    summary.verified += part.verified;
    summary.undecided += part.undecided;
    summary.failed.insert(summary.failed.end(), part.failed.begin(), part.failed.end());
    keep_max(summary.max_i_min, part.max_i_min);
    keep_max(summary.max_cardinality, part.max_cardinality);
    for (const auto& [i_min, count] : part.histogram) {
      summary.histogram[i_min] += count;
    }
  }
  return summary;
}

std::vector<PowerOfThreeResult> powers_of_three(std::uint64_t max_exp, std::uint64_t budget,
                                                std::size_t workers) {
  if (max_exp == 0) {
    throw DomainError("max exponent must be at least 1");
  }
  return run_ordered<PowerOfThreeResult>(
      static_cast<std::size_t>(max_exp), workers,
      [&](std::size_t j) {
        PowerOfThreeResult r;
        r.exponent = j + 1;
        const Natural n = power(3, r.exponent);
        const AcceleratedTrace trace = run_accelerated(n, budget);
        r.terminated = trace.terminated;
        r.i_min = trace.i_min;
        if (!trace.terminated) {
          return r;
        }
        const TraceRow& last = trace.rows.back();
        r.reached_fixed_point = last.x == Natural(4) && last.y.is_one();
        r.cardinality = cardinality_formula(trace);
        try {
          r.stopping_time = total_stopping_time(n, budget);
          r.cross_check_passed = cross_check(n, budget).passed() &&
                                 *r.cardinality == *r.stopping_time + 1 &&
                                 verify_eta_relation(trace).passed();
        } catch (const BudgetExhausted&) {
          r.cross_check_passed = false;
        }
        return r;
      },
      [](std::size_t, const PowerOfThreeResult&) {});
}

}  // namespace collatz
