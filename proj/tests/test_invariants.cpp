#include <gtest/gtest.h>

#include "support.hpp"

using namespace g1min;
using support::var;

TEST(Invariants, WeierstrassExample) {
  auto t = invariants(GenusOneEquation::from_ints(1, {0, 0, 0, 0, 1}));
  EXPECT_EQ(t.c4, 0);
  EXPECT_EQ(t.c6, -864);
  EXPECT_EQ(t.disc, -432);
}

TEST(Invariants, WeierstrassAgreesWithBFormulas) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto e = support::random_equation(1, rng);
    EXPECT_EQ(invariants(e), support::weierstrass_oracle(e));
  }
}

TEST(Invariants, StandardModelsMatchCurve) {
  for (int A = -4; A <= 4; ++A)
    for (int B = -4; B <= 4; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      auto want = support::weierstrass_oracle(GenusOneEquation::from_ints(1, {0, 0, 0, A, B}));
      EXPECT_EQ(want.c4, -48 * A);
      EXPECT_EQ(want.c6, -864 * B);
      for (int n = 1; n <= 4; ++n) EXPECT_EQ(invariants(standard_model(A, B, n)), want) << "n=" << n;
    }
}

TEST(Invariants, PlainQuartic) {
  // y^2 = x^3 z + A x z^3 + B z^4: I = -3A, J = -27B, (c4, c6) = (16I, 32J)
  for (int A = -3; A <= 3; ++A)
    for (int B = -3; B <= 3; ++B) {
      auto e = GenusOneEquation::from_ints(2, {0, 0, 0, 0, 1, 0, A, B});
      if (discriminant(e) == 0) continue;
      auto t = invariants(e);
      EXPECT_EQ(t.c4, 16 * (-3 * A));
      EXPECT_EQ(t.c6, 32 * (-27 * B));
    }
}

TEST(Invariants, RepeatedComponentHasZeroDiscriminant) {
  EXPECT_EQ(discriminant(GenusOneEquation::from_ints(2, {0, 0, 0, 1, 0, 0, 0, 0})), 0);
  EXPECT_EQ(discriminant(GenusOneEquation::from_ints(3, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0})), 0);
}

TEST(Invariants, SyzygyRandom) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 40; ++i) {
      auto t = invariants(support::random_equation(n, rng));
      EXPECT_EQ(t.c4 * t.c4 * t.c4 - t.c6 * t.c6, 1728 * t.disc);
    }
}

TEST(Invariants, WeightLaw) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 15; ++i) {
      auto e = support::random_equation(n, rng, 5);
      auto g = support::random_transform(n, rng);
      Rat d = det(g), d2 = d * d, d4 = d2 * d2, d6 = d4 * d2, d12 = d6 * d6;
      auto a = invariants(e), b = invariants(apply(g, e));
      EXPECT_EQ(b.c4, d4 * a.c4);
      EXPECT_EQ(b.c6, d6 * a.c6);
      EXPECT_EQ(b.disc, d12 * a.disc);
    }
}

TEST(QuarticIJ, Examples) {
  EXPECT_EQ(quartic_IJ({0, 0, 0, 0, 0}), std::make_pair(Rat(0), Rat(0)));
  EXPECT_EQ(quartic_IJ({0, 1, 0, 5, 7}), std::make_pair(Rat(-15), Rat(-189)));
  EXPECT_EQ(quartic_IJ({1, 0, 0, 0, 1}), std::make_pair(Rat(12), Rat(0)));
}

TEST(CompletedQuartic, Examples) {
  auto r = completed_quartic(GenusOneEquation::from_ints(2, {0, 0, 0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(r, (BinaryQuartic{4, 8, 12, 16, 20}));
  EXPECT_EQ(completed_quartic(GenusOneEquation::from_ints(2, {1, 0, 0, 0, 0, 0, 0, 0})),
            (BinaryQuartic{1, 0, 0, 0, 0}));
  EXPECT_EQ(completed_quartic(GenusOneEquation::from_ints(2, {0, 0, 1, 1, 0, 0, 0, 0})),
            (BinaryQuartic{4, 0, 0, 0, 1}));
}

TEST(AronholdST, ZeroAndFermat) {
  EXPECT_EQ(aronhold_ST(GenusOneEquation::from_ints(3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
            std::make_pair(Rat(0), Rat(0)));
  auto fermat = GenusOneEquation::from_ints(3, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0});
  auto [S, T] = aronhold_ST(fermat);
  EXPECT_EQ(S, 0);
  // c6 = lambda6 * T and Delta = -c6^2 / 1728 for the Fermat cubic (c4 = 0)
  auto t = invariants(fermat);
  EXPECT_EQ(t.c4, 0);
  EXPECT_EQ(t.c6, -T);
  EXPECT_EQ(t.disc, -(T * T) / 1728);
  EXPECT_NE(T, 0);
}

TEST(AronholdST, HesseFamilyDiscriminant) {
  // x^3 + y^3 + z^3 + 3 m xyz degenerates exactly when m^3 = -1
  auto hesse = [](long m) { return GenusOneEquation::from_ints(3, {1, 1, 1, 0, 0, 0, 0, 0, 0, 3 * m}); };
  EXPECT_EQ(discriminant(hesse(-1)), 0);
  for (long m : {0L, 1L, 2L, -2L, 3L}) EXPECT_NE(discriminant(hesse(m)), 0);
}

TEST(CharacteristicQuartic, DiagonalPencil) {
  auto e = GenusOneEquation::from_ints(4, {1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(characteristic_quartic(e), (BinaryQuartic{1, 0, 0, 0, 0}));
  // F = diag(f), G = diag(g): Q = prod (f_i x + g_i z)
  long f[4] = {1, 2, -1, 3}, g[4] = {2, 1, 1, -1};
  std::vector<long> c(20, 0);
  int diag[4] = {0, 4, 7, 9};
  for (int i = 0; i < 4; ++i) c[diag[i]] = f[i], c[10 + diag[i]] = g[i];
  MultiPoly x = var(2, 0), z = var(2, 1), prod = support::cst(2, 1);
  for (int i = 0; i < 4; ++i) prod = prod * (Rat(f[i]) * x + Rat(g[i]) * z);
  auto want = coeffs_from(prod, binary_quartic_monomials());
  auto got = characteristic_quartic(GenusOneEquation::from_ints(4, c));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(got[i], want[i]);
}

TEST(DeriveScalings, MatchesFrozen) {
  auto k = derive_scalings();
  EXPECT_EQ(k, frozen_scalings());
  EXPECT_EQ(k.lambda4[2], 1);
  EXPECT_EQ(k.lambda6[2], make_rat(1, 2));
}

TEST(Invariants, GeneratorUnplanted) {
  auto inst = generate_instance(0, 1, 2, {}, 9);
  EXPECT_EQ(invariants(inst.equation), (InvariantTriple{0, -864, -432}));
}
