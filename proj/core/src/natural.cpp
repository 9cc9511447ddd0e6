#include "collatz/natural.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <utility>

namespace collatz {

Natural::Natural(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  if (value == 0) {
    throw DomainError("natural must be positive, got 0");
  }
}

Natural::Natural(Integer value) : value_(std::move(value)) {
  if (sgn(value_) <= 0) {
    throw DomainError("natural must be positive, got " + value_.get_str());
  }
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) {
    throw DomainError("empty string is not a natural");
  }
  if (!std::all_of(decimal.begin(), decimal.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal natural: '" + std::string(decimal) + "'");
  }
  return Natural(Integer(std::string(decimal), 10));
}

std::size_t Natural::bit_length() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Natural::fits_u64() const noexcept {
  return bit_length() <= std::numeric_limits<std::uint64_t>::digits;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) {
    throw DomainError("natural exceeds 64 bits: " + to_string());
  }
  return mpz_get_ui(value_.get_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
  return os << n.value();
}

Natural TwoAdicSplit::even_part() const {
  return power(2, exponent);
}

Natural TwoAdicSplit::reconstruct() const {
  Integer v;
  mpz_mul_2exp(v.get_mpz_t(), odd_part.value().get_mpz_t(), exponent);
  return Natural(std::move(v));
}

Natural collatz_step(const Natural& n) {
  Integer next;
  if (n.is_even()) {
    mpz_tdiv_q_2exp(next.get_mpz_t(), n.value().get_mpz_t(), 1);
  } else {
    mpz_mul_ui(next.get_mpz_t(), n.value().get_mpz_t(), 3);
    mpz_add_ui(next.get_mpz_t(), next.get_mpz_t(), 1);
  }
  return Natural(std::move(next));
}

std::uint64_t two_adic_valuation(const Natural& n) noexcept {
  return mpz_scan1(n.value().get_mpz_t(), 0);
}

Natural odd_part(const Natural& n) {
  Integer v;
  mpz_tdiv_q_2exp(v.get_mpz_t(), n.value().get_mpz_t(), two_adic_valuation(n));
  return Natural(std::move(v));
}

Natural even_part(const Natural& n) {
  return power(2, two_adic_valuation(n));
}

TwoAdicSplit two_adic_split(const Natural& n) {
  return TwoAdicSplit{odd_part(n), two_adic_valuation(n)};
}

Natural power(std::uint64_t base, std::uint64_t exponent) {
  if (base == 0) {
    throw DomainError("power: base must be positive");
  }
  Integer v;
  if (base == 2) {
    mpz_setbit(v.get_mpz_t(), exponent);
  } else {
    mpz_ui_pow_ui(v.get_mpz_t(), base, exponent);
  }
  return Natural(std::move(v));
}

}  // namespace collatz
