#pragma once

// Arbitrary-precision positive integers, the Collatz map, and the two-adic
// split of a natural into its odd part and its largest power-of-two factor.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace collatz {

/// Signed arbitrary-precision integer (differences, Diophantine terms).
using Integer = mpz_class;

/// Raised when an argument lies outside the domain of an operation
/// (zero where a positive natural is required, an empty range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iteration budget runs out before the stopping condition
/// is observed. This means "undecided", never "diverges".
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what, std::uint64_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// A positive integer of unbounded magnitude. Zero is unrepresentable: every
/// constructor rejects it with DomainError.
class Natural {
 public:
  Natural() : value_(1) {}
  explicit Natural(std::uint64_t value);
  explicit Natural(Integer value);

  /// Parses a plain decimal string (digits only, no sign).
  static Natural parse(std::string_view decimal);

  const Integer& value() const noexcept { return value_; }

  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool is_even() const noexcept { return !is_odd(); }
  bool is_one() const noexcept { return mpz_cmp_ui(value_.get_mpz_t(), 1) == 0; }

  /// Number of significant bits; 1 for the value 1.
  std::size_t bit_length() const noexcept;

  bool fits_u64() const noexcept;
  /// Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;

  std::string to_string() const { return value_.get_str(10); }

  Natural& operator++() {
    ++value_;
    return *this;
  }

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Integer value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// A natural written as odd_part * 2^exponent.
struct TwoAdicSplit {
  Natural odd_part;
  std::uint64_t exponent = 0;

  /// 2^exponent.
  Natural even_part() const;
  /// odd_part * 2^exponent, i.e. the natural that was split.
  Natural reconstruct() const;

  friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};

/// n/2 for even n, 3n+1 for odd n.
Natural collatz_step(const Natural& n);

/// Exponent of the largest power of two dividing n (trailing zero bits).
std::uint64_t two_adic_valuation(const Natural& n) noexcept;

/// n with every factor of two removed.
Natural odd_part(const Natural& n);

/// The largest power of two dividing n.
Natural even_part(const Natural& n);

TwoAdicSplit two_adic_split(const Natural& n);

/// base^exponent; base must be at least 1.
Natural power(std::uint64_t base, std::uint64_t exponent);

}  // namespace collatz
