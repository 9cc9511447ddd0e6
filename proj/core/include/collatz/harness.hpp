#pragma once

// Batch verification: range scans and the powers-of-three experiment.
//
// Scans split [lo, hi) into contiguous chunks that a pool of worker threads
// claims in any order. Chunk results are merged strictly in ascending range
// order, so the summary does not depend on the number of workers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "collatz/accelerated.hpp"
#include "collatz/natural.hpp"

namespace collatz {

/// Completion record for one chunk [lo, hi).
struct ChunkProgress {
  Natural lo;
  Natural hi;
  std::uint64_t ok = 0;
  std::uint64_t undecided = 0;
};

struct ScanOptions {
  std::uint64_t budget = kDefaultMaxIters;
  std::size_t workers = 1;
  std::uint64_t chunk_size = 1024;
  /// Skip every n below this value.
  std::optional<Natural> resume_from;
  /// Invoked once per chunk, in ascending chunk order, from whichever thread
  /// completes the chunk that extends the finished prefix.
  std::function<void(const ChunkProgress&)> on_chunk;
};

struct Extremum {
  Natural n;
  std::uint64_t value = 0;

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

struct ScanSummary {
  Natural lo;
  Natural hi;
  std::uint64_t verified = 0;
  std::uint64_t undecided = 0;
  /// n whose cross-check disagreed with the oracle. Expected empty.
  std::vector<Natural> failed;
  /// Largest i_min seen; ties keep the smallest n.
  std::optional<Extremum> max_i_min;
  /// Largest trajectory cardinality seen; ties keep the smallest n.
  std::optional<Extremum> max_cardinality;
  /// i_min -> number of verified n with that i_min.
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t scanned() const noexcept { return verified + undecided + failed.size(); }

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

/// Cross-checks every n in [lo, hi). Requires 1 <= lo < hi and hi - lo to
/// fit in 64 bits.
ScanSummary scan_range(const Natural& lo, const Natural& hi, const ScanOptions& options = {});

struct PowerOfThreeResult {
  std::uint64_t exponent = 0;
  bool terminated = false;
  /// Trace ended at the fixed point x = 4, y = 1.
  bool reached_fixed_point = false;
  std::optional<std::size_t> i_min;
  std::optional<std::uint64_t> cardinality;
  std::optional<std::uint64_t> stopping_time;
  bool cross_check_passed = false;

  friend bool operator==(const PowerOfThreeResult&, const PowerOfThreeResult&) = default;
};

/// Runs the odd-part trace on 3^e for e = 1..max_exp and cross-checks each
/// against the brute-force stopping time. Results are in exponent order.
std::vector<PowerOfThreeResult> powers_of_three(std::uint64_t max_exp,
                                                std::uint64_t budget = kDefaultMaxIters,
                                                std::size_t workers = 1);

}  // namespace collatz
