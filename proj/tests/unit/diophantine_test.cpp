#include "collatz/diophantine.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute_force.hpp"

using namespace collatz;

namespace {

bool satisfies(const DiophantineSolution& s, const Integer& x, const Integer& y) {
  return s.a * x + s.b * y == s.c;
}

}  // namespace

TEST(ExtendedGcd, BezoutIdentity) {
  for (long a = -40; a <= 40; ++a) {
    for (long b = -40; b <= 40; ++b) {
      const ExtendedGcd e = extended_gcd(a, b);
      ASSERT_EQ(e.gcd, static_cast<long>(std::gcd(a, b))) << a << "," << b;
      ASSERT_EQ(a * e.x + b * e.y, e.gcd) << a << "," << b;
    }
  }
}

TEST(SolveLinearDiophantine, CollatzOddEquation) {
  const auto sol = solve_linear_diophantine(1, -3, 1);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->gcd, 1);
  EXPECT_TRUE(satisfies(*sol, sol->s, sol->t));
  const auto eta = sol->parameter_of(4, 1);
  ASSERT_TRUE(eta);
  const auto [x, y] = sol->point(*eta);
  EXPECT_EQ(x, 4);
  EXPECT_EQ(y, 1);
  EXPECT_FALSE(sol->parameter_of(5, 1));
}

TEST(SolveLinearDiophantine, CollatzEvenEquation) {
  const auto sol = solve_linear_diophantine(2, -1, 0);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(sol->parameter_of(53, 106));
}

TEST(SolveLinearDiophantine, DivisibilityObstruction) {
  EXPECT_FALSE(solve_linear_diophantine(2, 4, 3));
  EXPECT_TRUE(solve_linear_diophantine(2, 4, 6));
}

TEST(SolveLinearDiophantine, DegenerateCoefficients) {
  EXPECT_THROW(solve_linear_diophantine(0, 0, 0), DomainError);
  EXPECT_THROW(solve_linear_diophantine(0, 0, 5), DomainError);

  const auto only_b = solve_linear_diophantine(0, 5, 15);
  ASSERT_TRUE(only_b);
  EXPECT_EQ(only_b->gcd, 5);
  EXPECT_EQ(only_b->t, 3);
  EXPECT_TRUE(only_b->parameter_of(17, 3));
  EXPECT_FALSE(only_b->parameter_of(17, 4));

  const auto only_a = solve_linear_diophantine(-4, 0, 12);
  ASSERT_TRUE(only_a);
  EXPECT_EQ(only_a->gcd, 4);
  EXPECT_EQ(only_a->s, -3);
  EXPECT_TRUE(only_a->parameter_of(-3, 99));
  EXPECT_FALSE(only_a->parameter_of(3, 99));

  EXPECT_FALSE(solve_linear_diophantine(0, 5, 7));
}

TEST(SolveLinearDiophantine, FamilyPointsSatisfyEquation) {
  for (long a = -15; a <= 15; ++a) {
    for (long b = -15; b <= 15; ++b) {
      if (a == 0 && b == 0) continue;
      for (long c = -15; c <= 15; ++c) {
        const auto sol = solve_linear_diophantine(a, b, c);
        if (!sol) continue;
        for (long eta = -10; eta <= 10; ++eta) {
          const auto [x, y] = sol->point(eta);
          ASSERT_TRUE(satisfies(*sol, x, y));
          ASSERT_EQ(sol->parameter_of(x, y), Integer(eta));
        }
      }
    }
  }
}

TEST(SolveLinearDiophantine, SolvabilityMatchesBruteForceSearch) {
  // A solvable equation with |a|, |b|, |c| <= 25 always has a solution with
  // |x| <= 25 and |y| <= 50, so a box of 100 is exhaustive.
  for (std::int64_t a = -25; a <= 25; ++a) {
    for (std::int64_t b = -25; b <= 25; ++b) {
      if (a == 0 && b == 0) continue;
      for (std::int64_t c = -25; c <= 25; ++c) {
        const bool solved = solve_linear_diophantine(a, b, c).has_value();
        ASSERT_EQ(solved, oracle::has_solution_in_box(a, b, c, 100)) << a << "," << b << "," << c;
      }
    }
  }
}

TEST(SolveLinearDiophantine, SolvabilityMatchesGcdOnSampledTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int i = 0; i < 200000; ++i) {
    const long a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0 && b == 0) continue;
    const bool expected = c % std::gcd(a, b) == 0;
    ASSERT_EQ(solve_linear_diophantine(a, b, c).has_value(), expected);
  }
}

TEST(SolveLinearDiophantine, LargeCoefficients) {
  const Integer a = power(3, 200).value();
  const Integer b = -power(2, 300).value();
  const Integer c = power(5, 90).value();
  const auto sol = solve_linear_diophantine(a, b, c);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->gcd, 1);
  EXPECT_TRUE(satisfies(*sol, sol->s, sol->t));
  const auto [x, y] = sol->point(Integer("123456789123456789123456789"));
  EXPECT_TRUE(satisfies(*sol, x, y));
}

TEST(CollatzSolvability, Examples) {
  const SolvabilityReport r25 = verify_collatz_solvability(Natural(25));
  EXPECT_TRUE(r25.odd);
  EXPECT_EQ(r25.x, Natural(76));
  EXPECT_TRUE(r25.passed());

  const SolvabilityReport r106 = verify_collatz_solvability(Natural(106));
  EXPECT_FALSE(r106.odd);
  EXPECT_EQ(r106.x, Natural(53));
  EXPECT_TRUE(r106.passed());

  const SolvabilityReport r1 = verify_collatz_solvability(Natural(1));
  EXPECT_EQ(r1.x, Natural(4));
  EXPECT_TRUE(r1.passed());
}

TEST(CollatzSolvability, HoldsOnRange) {
  for (std::uint64_t y = 1; y <= 2000; ++y) {
    ASSERT_TRUE(verify_collatz_solvability(Natural(y)).passed()) << y;
  }
}
