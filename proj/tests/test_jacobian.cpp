#include <gtest/gtest.h>

#include "support.hpp"

using namespace g1min;

namespace {

GenusOneEquation short_curve(const Integer& A, const Integer& B) {
  return GenusOneEquation(1, {0, 0, 0, Rat(A), Rat(B)});
}

Integer ipow(long p, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= p;
  return r;
}

// Minimal valuation at p >= 5 from y^2 = x^3 + Ax + B.
long short_oracle(const Integer& A, const Integer& B, long p) {
  LocalContext c(p);
  Rat disc = -16 * (4 * Rat(A) * A * A + 27 * Rat(B) * B);
  long k = 1000;
  if (A != 0) k = std::min(k, valuation(A, c).value() / 4);
  if (B != 0) k = std::min(k, valuation(B, c).value() / 6);
  return valuation(disc, c).value() - 12 * k;
}

}  // namespace

TEST(Jacobian, FromInvariants) {
  auto j = jacobian(0, -864);
  EXPECT_EQ(invariants(j.model), (InvariantTriple{0, -864, -432}));
  EXPECT_EQ(j.u, 1);
  auto k = jacobian(-48, -864);
  EXPECT_EQ(invariants(k.model), invariants(short_curve(1, 1)));
}

TEST(Jacobian, DiscriminantOfSmoothModels) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 10; ++i) {
      auto t = invariants(support::random_equation(n, rng, 5));
      auto j = jacobian(t.c4, t.c6);
      Rat u2 = j.u * j.u, u12 = u2 * u2 * u2 * u2 * u2 * u2;
      EXPECT_EQ(discriminant(j.model), u12 * t.disc);
      EXPECT_TRUE(is_integral(j.model));
    }
}

TEST(Jacobian, SingularRejected) {
  try {
    jacobian(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularInput);
  }
}

TEST(MinimalDiscriminant, LocalExamples) {
  for (long p : {5L, 7L, 11L}) {
    LocalContext c(p);
    EXPECT_EQ(minimal_discriminant_local(short_curve(0, ipow(p, 6)), c), 0);
    // Delta = -64 p^3
    auto e = short_curve(p, 0);
    EXPECT_EQ(discriminant(e), -64 * Rat(ipow(p, 3)));
    EXPECT_EQ(minimal_discriminant_local(e, c), 3);
  }
  EXPECT_EQ(minimal_discriminant_local(short_curve(0, 1), LocalContext(5)), 0);
}

TEST(MinimalDiscriminant, ShortOracleLargePrimes) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-30, 30), k(0, 2);
  for (long p : {5L, 7L, 11L, 13L})
    for (int i = 0; i < 60; ++i) {
      long s = k(rng);
      Integer A = d(rng) * ipow(p, 4 * s + k(rng)), B = d(rng) * ipow(p, 6 * s + k(rng));
      if (4 * A * A * A + 27 * B * B == 0) continue;
      EXPECT_EQ(minimal_discriminant_local(short_curve(A, B), LocalContext(p)), short_oracle(A, B, p));
    }
}

TEST(MinimalDiscriminant, GlobalExamples) {
  EXPECT_EQ(minimal_discriminant_global(short_curve(0, 1)).disc_min, -432);
  auto rep = minimal_discriminant_global(short_curve(0, ipow(2, 6) * ipow(3, 6)));
  EXPECT_EQ(rep.disc_min, -432);
  EXPECT_EQ(rep.primes.at(2).scaling_exponent, 1);
  EXPECT_EQ(rep.primes.at(3).scaling_exponent, 1);
}

TEST(MinimalDiscriminant, FixpointOnMinimalCurves) {
  for (int A = -6; A <= 6; ++A)
    for (int B = -6; B <= 6; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      auto e = short_curve(A, B);
      auto rep = minimal_discriminant_global(e);
      // |Delta| < 2^12 for these, so no prime admits a drop
      if (abs(discriminant(e)) < 4096) EXPECT_EQ(rep.disc_min, discriminant(e));
    }
}

TEST(MinimalDiscriminant, KrausSmallPrimes) {
  // Unscaled curves with v_p(Delta) < 12 are minimal; p^k scalings must be undone.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-40, 40), kk(1, 3);
  for (long p : {2L, 3L}) {
    LocalContext c(p);
    int checked = 0;
    while (checked < 40) {
      Integer A = d(rng), B = d(rng);
      Rat disc = -16 * (4 * Rat(A) * A * A + 27 * Rat(B) * B);
      if (disc == 0 || valuation(disc, c) >= 12) continue;
      long k = kk(rng);
      auto e = short_curve(A * ipow(p, 4 * k), B * ipow(p, 6 * k));
      EXPECT_EQ(minimal_discriminant_local(e, c), valuation(disc, c).value());
      ++checked;
    }
  }
}

TEST(Level, WeightLawOnCubic) {
  LocalContext c(5);
  auto e = standard_model(1, 1, 3);
  EXPECT_EQ(level(e, c).value, 0);
  auto raised = apply(CubicTransform{1, rat_diag({5, 5, 5})}, e);
  EXPECT_EQ(valuation(discriminant(raised), c).value() - valuation(discriminant(e), c).value(), 36);
  EXPECT_EQ(level(raised, c).value, 3);
}

TEST(Level, PlantedInstances) {
  for (int n = 1; n <= 4; ++n)
    for (long k = 0; k <= 3; ++k) {
      auto inst = generate_instance(2, -3, n, {{7, k}}, 100 + k);
      EXPECT_EQ(level(inst.equation, LocalContext(7)).value, k);
      EXPECT_EQ(inst.truth.input_valuation.at(7), inst.truth.minimal_valuation.at(7) + 12 * k);
    }
}

TEST(Level, NonIntegralRejected) {
  try {
    level(GenusOneEquation(1, {0, 0, 0, make_rat(1, 5), 1}), LocalContext(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralCoefficient);
  }
}

TEST(PrimesWithTwelfthPower, Basic) {
  EXPECT_EQ(primes_with_twelfth_power(Integer(432)), std::vector<long>{});
  Integer n = ipow(2, 13) * ipow(7, 12) * 3;
  EXPECT_EQ(primes_with_twelfth_power(n), (std::vector<long>{2, 7}));
}
