#include <gtest/gtest.h>

#include "support.hpp"

using namespace g1min;
using support::var;

TEST(Valuation, PrimePower) { EXPECT_EQ(valuation(Rat(8), LocalContext(2)), Valuation(3)); }

TEST(Valuation, ZeroIsInfinite) { EXPECT_TRUE(valuation(Rat(0), LocalContext(5)).is_infinite()); }

TEST(Valuation, NegativeFromDenominator) {
  // 45/14 = 3^2 5 / (2 7)
  EXPECT_EQ(valuation(make_rat(45, 14), LocalContext(7)), Valuation(-1));
  EXPECT_EQ(valuation(make_rat(45, 14), LocalContext(3)), Valuation(2));
}

TEST(Valuation, MatchesTrialDivision) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(1, 100000);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    LocalContext ctx(p);
    for (int i = 0; i < 200; ++i) {
      long n = d(rng), m = d(rng);
      auto count = [p](long x) {
        long k = 0;
        while (x % p == 0) x /= p, ++k;
        return k;
      };
      EXPECT_EQ(valuation(make_rat(n, m), ctx), Valuation(count(n) - count(m)));
    }
  }
}

TEST(LocalContext, RejectsComposite) {
  EXPECT_THROW(LocalContext(9), Error);
  try {
    LocalContext c(1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(PolyValuation, MinOverCoefficients) {
  MultiPoly x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(poly_valuation(Rat(3) * x * x + Rat(9) * y, LocalContext(3)), Valuation(1));
  EXPECT_EQ(poly_valuation(x + y, LocalContext(5)), Valuation(0));
  EXPECT_EQ(poly_valuation(Rat(49) * (x * x + x * y), LocalContext(7)), Valuation(2));
}

TEST(ReduceModP, DropsMultiplesOfP) {
  MultiPoly x = var(2, 0), y = var(2, 1);
  LocalContext c5(5), c7(7);
  FpPoly r = reduce_mod_p(x * x + Rat(5) * x * y + Rat(10) * y * y, c5);
  EXPECT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.coeff(exps({2, 0})), Fp(1, 5));
  EXPECT_TRUE(reduce_mod_p(Rat(7) * x * x * x, c7).terms().empty());
}

TEST(ReduceModP, InvertsDenominators) {
  MultiPoly x = var(2, 0), z = var(2, 1);
  FpPoly r = reduce_mod_p(x * x + make_rat(3, 2) * x * z, LocalContext(5));
  EXPECT_EQ(r.coeff(exps({1, 1})), Fp(4, 5));
  EXPECT_EQ(r.coeff(exps({2, 0})), Fp(1, 5));
}

TEST(SubstituteLinear, RowVectorConvention) {
  MultiPoly x = var(2, 0), z = var(2, 1);
  EXPECT_TRUE(substitute_linear(x * x, rat_identity(2)) == x * x);
  RatMatrix swap = rat_zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  EXPECT_TRUE(substitute_linear(x * z, swap) == x * z);
  RatMatrix m = rat_identity(2);
  m(0, 1) = 1;  // x -> x, z -> x + z
  MultiPoly want = Rat(2) * x * x + Rat(2) * x * z + z * z;
  EXPECT_TRUE(substitute_linear(x * x + z * z, m) == want);
}

TEST(Residue, AgreesWithModularInverse) {
  LocalContext c(7);
  for (long n = -30; n <= 30; ++n)
    for (long d : {1L, 2L, 3L, 5L}) {
      long want = ((n % 7 + 7) % 7) * mod_inverse(d, 7) % 7;
      EXPECT_EQ(residue_small(make_rat(n, d), c), want);
    }
  EXPECT_THROW(residue(make_rat(1, 7), c), Error);
}

TEST(PAdicTruncate, CloseAndInZOneOverP) {
  LocalContext c(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-500, 500), den(1, 60);
  for (int i = 0; i < 300; ++i) {
    Rat x = make_rat(d(rng), den(rng));
    for (long e : {-2L, 0L, 1L, 3L}) {
      Rat y = p_adic_truncate(x, e, c);
      EXPECT_TRUE(is_p_power_denominator(y, c));
      EXPECT_GE(valuation(Rat(x - y), c), Valuation(e));
    }
  }
}

TEST(ParseRat, AcceptsBothForms) {
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_EQ(parse_rat("-3/6"), make_rat(-1, 2));
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
  EXPECT_THROW(parse_rat(""), Error);
}

TEST(Fp, FieldAxiomsSmallPrime) {
  for (long p : {2L, 3L, 13L})
    for (long a = 1; a < p; ++a) EXPECT_EQ(Fp(a, p) * Fp(a, p).inv(), Fp(1, p));
}
