#include "collatz/export.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace collatz {

namespace {

using nlohmann::json;

// ---- field codecs ---------------------------------------------------------

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Natural parse_natural(std::string_view text) {
  try {
    return Natural::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::uint64_t parse_count(std::string_view text) {
  const Integer v = parse_integer(text);
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw ParseError("not a count: '" + std::string(text) + "'");
  }
  return v.get_ui();
}

json encode(const Integer& v) {
  if (v.fits_slong_p()) {
    return static_cast<std::int64_t>(v.get_si());
  }
  if (sgn(v) > 0 && v.fits_ulong_p()) {
    return static_cast<std::uint64_t>(v.get_ui());
  }
  return v.get_str(10);
}

json encode(const Natural& n) { return encode(n.value()); }

Integer decode_integer(const json& j) {
  if (j.is_number_unsigned()) {
    return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) {
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    return parse_integer(j.get_ref<const std::string&>());
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Natural decode_natural(const json& j) {
  Integer v = decode_integer(j);
  if (sgn(v) <= 0) {
    throw ParseError("expected a positive natural, got " + j.dump());
  }
  return Natural(std::move(v));
}

std::uint64_t decode_count(const json& j) {
  const Integer v = decode_integer(j);
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw ParseError("expected a count, got " + j.dump());
  }
  return v.get_ui();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t comma = line.find(',', begin);
    fields.push_back(line.substr(begin, comma - begin));
    if (comma == std::string_view::npos) {
      return fields;
    }
    begin = comma + 1;
  }
}

std::vector<std::string> read_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::optional<std::size_t> first_one(const std::vector<Natural>& values) {
  const auto it = std::find_if(values.begin(), values.end(),
                               [](const Natural& v) { return v.is_one(); });
  if (it == values.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - values.begin());
}

void fill_i_min(AcceleratedTrace& t) {
  t.i_min.reset();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i].y.is_one()) {
      t.i_min = i;
      return;
    }
  }
}

// Pads every column but the last to a common width.
void write_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) {
        os << std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    os << '\n';
  }
}

}  // namespace

// ---- CSV ------------------------------------------------------------------

void write_csv(std::ostream& os, const AcceleratedTrace& t) {
  os << kAcceleratedCsvHeader << '\n';
  for (const TraceRow& r : t.rows) {
    os << r.w << ',' << r.x << ',' << r.y << ',' << r.z() << ',' << r.u << ',' << r.eta << ',';
    if (r.v_sq) {
      os << *r.v_sq;
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const ClassicalTrajectory& t) {
  os << kClassicalCsvHeader << '\n';
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    os << k << ',' << t.values[k] << ',';
    if (k < t.deltas.size()) {
      os << t.deltas[k];
    }
    os << '\n';
  }
}

AcceleratedTrace read_accelerated_csv(std::istream& is) {
  const auto lines = read_lines(is);
  if (lines.empty() || lines.front() != kAcceleratedCsvHeader) {
    throw ParseError("missing header '" + std::string(kAcceleratedCsvHeader) + "'");
  }
  if (lines.size() < 2) {
    throw ParseError("trace has no rows");
  }
  AcceleratedTrace t;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 7) {
      throw ParseError("expected 7 fields on line " + std::to_string(i + 1));
    }
    TraceRow r;
    r.w = parse_count(f[0]);
    r.x = parse_natural(f[1]);
    r.y = parse_natural(f[2]);
    r.u = parse_count(f[4]);
    if (parse_natural(f[3]) != r.z()) {
      throw ParseError("z is not 2^u on line " + std::to_string(i + 1));
    }
    r.eta = parse_integer(f[5]);
    if (!f[6].empty()) {
      r.v_sq = parse_integer(f[6]);
    }
    t.rows.push_back(std::move(r));
  }
  t.input = t.rows.front().x;
  fill_i_min(t);
  const std::size_t n = t.rows.size();
  t.terminated = n >= 2 && t.rows[n - 2].v_sq && sgn(*t.rows[n - 2].v_sq) == 0;
  return t;
}

ClassicalTrajectory read_classical_csv(std::istream& is) {
  const auto lines = read_lines(is);
  if (lines.empty() || lines.front() != kClassicalCsvHeader) {
    throw ParseError("missing header '" + std::string(kClassicalCsvHeader) + "'");
  }
  if (lines.size() < 2) {
    throw ParseError("trajectory has no values");
  }
  ClassicalTrajectory t;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 3) {
      throw ParseError("expected 3 fields on line " + std::to_string(i + 1));
    }
    if (parse_count(f[0]) != i - 1) {
      throw ParseError("k out of sequence on line " + std::to_string(i + 1));
    }
    t.values.push_back(parse_natural(f[1]));
    if (!f[2].empty()) {
      t.deltas.push_back(parse_integer(f[2]));
    }
  }
  t.start = t.values.front();
  t.reached_one_at = first_one(t.values);
  return t;
}

// ---- JSON -----------------------------------------------------------------

std::string to_json(const AcceleratedTrace& t) {
  json rows = json::array();
  for (const TraceRow& r : t.rows) {
    rows.push_back({{"w", r.w},
                    {"x", encode(r.x)},
                    {"y", encode(r.y)},
                    {"z", encode(r.z())},
                    {"u", r.u},
                    {"eta", encode(r.eta)},
                    {"v_sq", r.v_sq ? encode(*r.v_sq) : json(nullptr)}});
  }
  json j = {{"input", encode(t.input)},
            {"i_min", t.i_min ? json(*t.i_min) : json(nullptr)},
            {"terminated", t.terminated},
            {"rows", std::move(rows)}};
  return j.dump();
}

std::string to_json(const ClassicalTrajectory& t) {
  json values = json::array();
  for (const Natural& v : t.values) {
    values.push_back(encode(v));
  }
  json deltas = json::array();
  for (const Integer& d : t.deltas) {
    deltas.push_back(encode(d));
  }
  json j = {{"start", encode(t.start)},
            {"reached_one_at", t.reached_one_at ? json(*t.reached_one_at) : json(nullptr)},
            {"values", std::move(values)},
            {"deltas", std::move(deltas)}};
  return j.dump();
}

AcceleratedTrace accelerated_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AcceleratedTrace t;
    t.input = decode_natural(j.at("input"));
    t.terminated = j.at("terminated").get<bool>();
    if (!j.at("i_min").is_null()) {
      t.i_min = decode_count(j.at("i_min"));
    }
    for (const json& jr : j.at("rows")) {
      TraceRow r;
      r.w = decode_count(jr.at("w"));
      r.x = decode_natural(jr.at("x"));
      r.y = decode_natural(jr.at("y"));
      r.u = decode_count(jr.at("u"));
      if (decode_natural(jr.at("z")) != r.z()) {
        throw ParseError("z is not 2^u in row " + std::to_string(r.w));
      }
      r.eta = decode_integer(jr.at("eta"));
      if (!jr.at("v_sq").is_null()) {
        r.v_sq = decode_integer(jr.at("v_sq"));
      }
      t.rows.push_back(std::move(r));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

ClassicalTrajectory classical_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ClassicalTrajectory t;
    t.start = decode_natural(j.at("start"));
    if (!j.at("reached_one_at").is_null()) {
      t.reached_one_at = decode_count(j.at("reached_one_at"));
    }
    for (const json& v : j.at("values")) {
      t.values.push_back(decode_natural(v));
    }
    for (const json& d : j.at("deltas")) {
      t.deltas.push_back(decode_integer(d));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

// ---- tables ---------------------------------------------------------------

std::string truncated_distance(const Integer& v_sq) {
  if (sgn(v_sq) < 0) {
    throw DomainError("squared distance cannot be negative");
  }
  if (sgn(v_sq) == 0) {
    return "0";
  }
  Integer tenths;
  const Integer scaled = 100 * v_sq;
  mpz_sqrt(tenths.get_mpz_t(), scaled.get_mpz_t());
  Integer whole, frac;
  mpz_tdiv_qr_ui(whole.get_mpz_t(), frac.get_mpz_t(), tenths.get_mpz_t(), 10);
  return whole.get_str() + "." + frac.get_str();
}

void write_table(std::ostream& os, const AcceleratedTrace& t) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"w", "x", "y", "z", "u", "eta", "v"});
  for (const TraceRow& r : t.rows) {
    std::string v;
    if (r.v_sq) {
      v = truncated_distance(*r.v_sq);
    } else if (t.terminated) {
      v = "0";
    }
    cells.push_back({std::to_string(r.w), r.x.to_string(), r.y.to_string(),
                     "2^" + std::to_string(r.u), std::to_string(r.u), r.eta.get_str(), v});
  }
  write_aligned(os, cells);
}

void write_table(std::ostream& os, const ClassicalTrajectory& t) {
  std::vector<std::vector<std::string>> cells(3);
  cells[0].push_back("k");
  cells[1].push_back("C^k(n)");
  cells[2].push_back("Delta_k");
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    cells[0].push_back(std::to_string(k));
    cells[1].push_back(t.values[k].to_string());
    cells[2].push_back(k < t.deltas.size() ? t.deltas[k].get_str()
                                           : step_delta(t.values[k]).get_str());
  }
  write_aligned(os, cells);
}

// ---- graphs ---------------------------------------------------------------

void write_dot(std::ostream& os, std::uint64_t n_max, GraphMap map, std::uint64_t limit) {
  if (n_max == 0) {
    throw DomainError("graph size must be at least 1");
  }
  if (n_max > limit) {
    throw DomainError("graph size " + std::to_string(n_max) + " exceeds limit " +
                      std::to_string(limit));
  }
  if (map == GraphMap::classical) {
    os << "digraph collatz_classical {\n";
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      os << "  " << n << " -> " << collatz_step(Natural(n)) << ";\n";
    }
  } else {
    os << "digraph collatz_accelerated {\n";
    for (std::uint64_t y = 1; y <= n_max; y += 2) {
      os << "  " << y << " -> " << odd_part(collatz_step(Natural(y))) << ";\n";
    }
  }
  os << "}\n";
}

// ---- harness output -------------------------------------------------------

std::string chunk_line(const ChunkProgress& chunk) {
  std::ostringstream os;
  os << "CHUNK " << chunk.lo << ' ' << chunk.hi << " ok=" << chunk.ok
     << " undecided=" << chunk.undecided;
  return os.str();
}

void write_summary(std::ostream& os, const ScanSummary& s) {
  os << "range " << s.lo << ' ' << s.hi << '\n';
  os << "scanned " << s.scanned() << '\n';
  os << "verified " << s.verified << '\n';
  os << "undecided " << s.undecided << '\n';
  os << "failed " << s.failed.size();
  for (const Natural& n : s.failed) {
    os << ' ' << n;
  }
  os << '\n';
  if (s.max_i_min) {
    os << "max_i_min " << s.max_i_min->n << ' ' << s.max_i_min->value << '\n';
  }
  if (s.max_cardinality) {
    os << "max_cardinality " << s.max_cardinality->n << ' ' << s.max_cardinality->value << '\n';
  }
  for (const auto& [i_min, count] : s.histogram) {
    os << "histogram " << i_min << ' ' << count << '\n';
  }
}

void write_powers_csv(std::ostream& os, const std::vector<PowerOfThreeResult>& results) {
  os << "exponent,i_min,cardinality\n";
  for (const PowerOfThreeResult& r : results) {
    os << r.exponent << ',';
    if (r.i_min) {
      os << *r.i_min;
    }
    os << ',';
    if (r.cardinality) {
      os << *r.cardinality;
    }
    os << '\n';
  }
}

}  // namespace collatz
