#include "collatz/natural.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace collatz;

namespace {

// Random natural with 1..max_bits significant bits.
Natural random_natural(std::mt19937_64& rng, unsigned max_bits) {
  const unsigned bits = std::uniform_int_distribution<unsigned>(1, max_bits)(rng);
  Integer v = 0;
  for (unsigned i = 0; i < bits; i += 64) {
    v <<= 64;
    v += Integer(static_cast<unsigned long>(rng()));
  }
  v >>= (bits % 64 == 0 ? 0 : 64 - bits % 64);
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return Natural(v);
}

}  // namespace

TEST(Natural, RejectsZero) {
  EXPECT_THROW(Natural(std::uint64_t{0}), DomainError);
  EXPECT_THROW(Natural(Integer(0)), DomainError);
  EXPECT_THROW(Natural(Integer(-5)), DomainError);
  EXPECT_THROW(Natural::parse("0"), DomainError);
  EXPECT_THROW(Natural::parse("000"), DomainError);
}

TEST(Natural, ParseRejectsNonDigits) {
  EXPECT_THROW(Natural::parse(""), DomainError);
  EXPECT_THROW(Natural::parse("-3"), DomainError);
  EXPECT_THROW(Natural::parse("+3"), DomainError);
  EXPECT_THROW(Natural::parse("12a"), DomainError);
  EXPECT_THROW(Natural::parse(" 1"), DomainError);
}

TEST(Natural, ParseRoundTripsLargeValues) {
  const Natural n = power(3, 600);
  EXPECT_EQ(n.bit_length(), 951u);
  EXPECT_EQ(Natural::parse(n.to_string()), n);
  EXPECT_FALSE(n.fits_u64());
  EXPECT_THROW(n.to_u64(), DomainError);
  EXPECT_EQ(Natural(106).to_u64(), 106u);
}

TEST(Natural, Ordering) {
  EXPECT_LT(Natural(5), Natural(16));
  EXPECT_EQ(Natural(16), Natural::parse("16"));
  Natural n(9);
  ++n;
  EXPECT_EQ(n, Natural(10));
}

TEST(CollatzStep, PaperTableValues) {
  EXPECT_EQ(collatz_step(Natural(106)), Natural(53));
  EXPECT_EQ(collatz_step(Natural(53)), Natural(160));
  EXPECT_EQ(collatz_step(Natural(1)), Natural(4));
}

TEST(CollatzStep, ExactHalvingOfEvenValues) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const Natural next = collatz_step(Natural(n));
    if (n % 2 == 0) {
      EXPECT_EQ(2 * next.value(), Integer(static_cast<unsigned long>(n)));
    } else {
      EXPECT_EQ(next.value(), Integer(static_cast<unsigned long>(3 * n + 1)));
    }
  }
}

TEST(TwoAdicSplit, ExampleValues) {
  EXPECT_EQ(even_part(Natural(3200)), Natural(128));
  EXPECT_EQ(odd_part(Natural(3200)), Natural(25));
  EXPECT_EQ(two_adic_valuation(Natural(3200)), 7u);

  EXPECT_EQ(even_part(Natural(12782924)), Natural(4));
  EXPECT_EQ(odd_part(Natural(12782924)), Natural(3195731));

  EXPECT_EQ(even_part(Natural(1)), Natural(1));
  EXPECT_EQ(odd_part(Natural(1)), Natural(1));

  const TwoAdicSplit split = two_adic_split(Natural(3200));
  EXPECT_EQ(split.odd_part, Natural(25));
  EXPECT_EQ(split.exponent, 7u);
  EXPECT_EQ(split.even_part(), Natural(128));
  EXPECT_EQ(split.reconstruct(), Natural(3200));
}

TEST(TwoAdicSplit, PowerOfTwoAcrossWordBoundary) {
  const Natural n = power(2, 200);
  EXPECT_EQ(two_adic_valuation(n), 200u);
  EXPECT_TRUE(odd_part(n).is_one());
  EXPECT_EQ(even_part(n), n);
}

TEST(TwoAdicSplit, IdempotenceAndAnnihilationProperties) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Natural n = random_natural(rng, 256);
    const Natural o = odd_part(n);
    const Natural e = even_part(n);
    ASSERT_EQ(odd_part(o), o) << n;
    ASSERT_EQ(even_part(e), e) << n;
    ASSERT_TRUE(even_part(o).is_one()) << n;
    ASSERT_TRUE(odd_part(e).is_one()) << n;
    ASSERT_EQ(o.value() * e.value(), n.value()) << n;
    ASSERT_TRUE(o.is_odd()) << n;
    ASSERT_EQ(mpz_popcount(e.value().get_mpz_t()), 1u) << n;
    ASSERT_EQ(two_adic_split(n).reconstruct(), n);
  }
}

TEST(Power, RejectsZeroBase) {
  EXPECT_THROW(power(0, 3), DomainError);
  EXPECT_EQ(power(3, 0), Natural(1));
  EXPECT_EQ(power(3, 4), Natural(81));
}
