#pragma once

// Serialization of traces and scan results: CSV, JSON, plain-text tables and
// Graphviz DOT.
//
// CSV uses LF line endings and no quoting; every field is a decimal integer
// or empty. JSON encodes integers as numbers when they fit in 64 bits and as
// decimal strings otherwise, so large values survive tools that parse
// numbers as doubles.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/accelerated.hpp"
#include "collatz/classical.hpp"
#include "collatz/harness.hpp"

namespace collatz {

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::string_view kAcceleratedCsvHeader = "w,x,y,z,u,eta,v_sq";
inline constexpr std::string_view kClassicalCsvHeader = "k,value,delta";

void write_csv(std::ostream& os, const AcceleratedTrace& t);
void write_csv(std::ostream& os, const ClassicalTrajectory& t);

AcceleratedTrace read_accelerated_csv(std::istream& is);
ClassicalTrajectory read_classical_csv(std::istream& is);

std::string to_json(const AcceleratedTrace& t);
std::string to_json(const ClassicalTrajectory& t);

AcceleratedTrace accelerated_from_json(std::string_view text);
ClassicalTrajectory classical_from_json(std::string_view text);

/// sqrt(v_sq) truncated (not rounded) to one decimal, computed exactly with
/// integer square roots. Zero renders as "0".
std::string truncated_distance(const Integer& v_sq);

/// Columns w, x, y, z, u, eta, v with z shown as 2^u and v as
/// truncated_distance. The last row of a terminated trace sits on the fixed
/// point, whose distance to its successor is 0.
void write_table(std::ostream& os, const AcceleratedTrace& t);

/// Three rows (k, C^k(n), Delta_k), one column per value. The delta under
/// the final value comes from one more application of the map.
void write_table(std::ostream& os, const ClassicalTrajectory& t);

enum class GraphMap { classical, accelerated };

inline constexpr std::uint64_t kDefaultGraphLimit = 100'000;

/// classical: edge n -> C(n) for 1 <= n <= n_max.
/// accelerated: edge y -> odd_part(3y + 1) for odd 1 <= y <= n_max.
/// Throws DomainError when n_max is 0 or exceeds limit.
void write_dot(std::ostream& os, std::uint64_t n_max, GraphMap map,
               std::uint64_t limit = kDefaultGraphLimit);

/// `CHUNK <lo> <hi> ok=<count> undecided=<count>`
std::string chunk_line(const ChunkProgress& chunk);

void write_summary(std::ostream& os, const ScanSummary& summary);

/// Header `exponent,i_min,cardinality`; empty fields for undecided rows.
void write_powers_csv(std::ostream& os, const std::vector<PowerOfThreeResult>& results);

}  // namespace collatz
