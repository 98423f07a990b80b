#include <gtest/gtest.h>

#include "support.hpp"

using namespace g1min;
using support::var;

namespace {

MultiPoly x(int i) { return var(4, i - 1); }

GenusOneEquation pair(const MultiPoly& f, const MultiPoly& g) { return make_quadric_pair(f, g); }

// A sound position: p-integral transform with unit determinant whose image is the stored equation.
void expect_sound(const GenusOneEquation& e, const StandardPosition& pos, const LocalContext& ctx) {
  EXPECT_EQ(apply(pos.transform, e), pos.equation);
  EXPECT_EQ(valuation(det(pos.transform), ctx), 0);
  for (const auto& x : entries(pos.transform)) EXPECT_GE(valuation(x, ctx), 0);
  EXPECT_TRUE(is_integral(pos.equation, ctx));
}

FiberKind kind_of(const std::string& file) {
  static const std::vector<std::pair<std::string, FiberKind>> rows = {
      {"conic_double_line", FiberKind::ConicPlusDoubleLine},
      {"double_conic", FiberKind::DoubleConic},
      {"double_line_two_lines", FiberKind::DoubleLinePlusTwoLines},
      {"two_double_lines", FiberKind::TwoDoubleLines},
      {"triple_line_line", FiberKind::TripleLinePlusLine},
      {"quadruple_line", FiberKind::QuadrupleLine},
  };
  for (const auto& [k, v] : rows)
    if (file.find(k) != std::string::npos) return v;
  throw std::logic_error(file);
}

}  // namespace

TEST(ClassifyFiber, TableCorpus) {
  int seen = 0;
  for (const auto& path : support::corpus_files()) {
    std::string name = path.stem().string();
    if (name.rfind("table_", 0) != 0) continue;
    auto m = read_model(path.string());
    LocalContext ctx(*m.prime);
    auto rep = classify_fiber(m.equation, ctx);
    EXPECT_EQ(rep.cls.kind, kind_of(name)) << name;
    if (name.find("mu0") != std::string::npos) EXPECT_EQ(rep.cls.param, 0);
    ASSERT_TRUE(rep.position) << name;
    expect_sound(m.equation, *rep.position, ctx);
    for (const auto& comp : rep.components) expect_sound(m.equation, comp.position, ctx);
    ++seen;
  }
  EXPECT_EQ(seen, 16);
}

TEST(ClassifyFiber, ConicPlusDoubleLineAsPrinted) {
  LocalContext c(5);
  auto e = pair(x(1) * x(3) + Rat(5) * x(4) * x(4), x(2) * x(2) + x(1) * x(4) + Rat(5) * x(3) * x(3));
  auto rep = classify_fiber(e, c);
  EXPECT_EQ(rep.cls.kind, FiberKind::ConicPlusDoubleLine);
  ASSERT_TRUE(rep.position);
  EXPECT_EQ(rep.position->equation, e);
}

TEST(ClassifyFiber, DoubleConicAsPrinted) {
  LocalContext c(7);
  Rat p = 7;
  auto e = pair(x(1) * x(1) + p * p * x(3) * x(3) + p * x(1) * x(2) + p * x(1) * x(4),
                x(2) * x(2) + x(3) * x(4) + p * x(1) * x(3));
  ASSERT_NE(discriminant(e), 0);
  EXPECT_EQ(classify_fiber(e, c).cls.kind, FiberKind::DoubleConic);
}

TEST(ClassifyFiber, CubicMultipleLines) {
  LocalContext c(5);
  MultiPoly X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
  auto e2 = make_cubic(Y * Y * X + Rat(5) * (X * X * X + Z * Z * Z + X * Y * Z));
  auto rep = classify_fiber(e2, c);
  EXPECT_EQ(rep.cls.kind, FiberKind::MultipleComponent);
  EXPECT_EQ(rep.cls.param, 2);
  expect_sound(e2, *rep.position, c);
  auto e3 = make_cubic(Y * Y * Y + Rat(5) * (X * X * Z + Z * Z * Y + X * X * X));
  auto rep3 = classify_fiber(e3, c);
  EXPECT_EQ(rep3.cls.kind, FiberKind::MultipleComponent);
  EXPECT_EQ(rep3.cls.param, 3);
  auto smooth = make_cubic(X * X * X + Y * Y * Y + Z * Z * Z);
  EXPECT_EQ(classify_fiber(smooth, c).cls.kind, FiberKind::AllMultiplicityOne);
}

TEST(ClassifyFiber, QuarticDoubleLine) {
  // y^2 = p f: the reduction is y^2 = 0
  LocalContext c(5);
  auto e = GenusOneEquation::from_ints(2, {0, 0, 0, 5, 0, 10, 5, 15});
  auto rep = classify_fiber(e, c);
  EXPECT_EQ(rep.cls.kind, FiberKind::DoubleLine);
  expect_sound(e, *rep.position, c);
}

TEST(ClassifyFiber, QuarticDoubleLineCharacteristicTwo) {
  // y^2 + 2 x^2 y = x^4 + 2 x z^3 + z^4 reduces to (y + x^2 + z^2)^2 mod 2
  LocalContext c(2);
  auto e = GenusOneEquation::from_ints(2, {2, 0, 0, 1, 0, 0, 2, 1});
  EXPECT_EQ(classify_fiber(e, c).cls.kind, FiberKind::DoubleLine);
}

TEST(NormalityDeg2, Examples) {
  LocalContext c(5);
  // f = p (x^4 + x z^3 + 2 z^4), g = 0
  auto a = GenusOneEquation::from_ints(2, {0, 0, 0, 5, 0, 0, 5, 10});
  auto va = normality(a, c);
  EXPECT_TRUE(va.normal);
  EXPECT_TRUE(va.conclusive);
  // f = 0 mod p^2, g = 0 mod p
  auto b = GenusOneEquation::from_ints(2, {5, 0, 5, 25, 0, 50, 25, 75});
  EXPECT_FALSE(normality(b, c).normal);
  // (y + R0)^2 = p u with R0 = x^2 + 2 z^2, u = x^3 z + z^4
  MultiPoly X = var(2, 0), Z = var(2, 1);
  MultiPoly r0 = X * X + Rat(2) * Z * Z;
  auto d = make_quartic(Rat(2) * r0, Rat(-1) * r0 * r0 + Rat(5) * (X * X * X * Z + Z * Z * Z * Z));
  EXPECT_EQ(classify_fiber(d, c).cls.kind, FiberKind::DoubleLine);
  EXPECT_TRUE(normality(d, c).normal);
}

TEST(NormalityDeg3, Examples) {
  LocalContext c(5);
  MultiPoly X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
  Rat p = 5;
  auto normal1 = make_cubic(Y * Y * X + p * (X * X * X + Z * Z * Z) + p * Y * X * Z);
  EXPECT_TRUE(normality(normal1, c).normal);
  auto bad = make_cubic(Y * Y * X + p * p * (X * X * X + Z * Z * Z) + p * Y * (X * X + Z * Z));
  EXPECT_FALSE(normality(bad, c).normal);
  auto normal2 = make_cubic(Y * Y * X + p * p * X * X * X + p * Z * Z * Z + p * Y * X * Z);
  EXPECT_TRUE(normality(normal2, c).normal);
}

TEST(NormalityDeg4, ConicPlusDoubleLine) {
  LocalContext c(5);
  // x4 F(0,0,x3,x4) - x3 G(0,0,x3,x4) = p (x4^3 - x3^3)
  auto e = pair(x(1) * x(3) + Rat(5) * x(4) * x(4), x(2) * x(2) + x(1) * x(4) + Rat(5) * x(3) * x(3));
  ASSERT_NE(discriminant(e), 0);
  EXPECT_EQ(classify_fiber(e, c).cls.kind, FiberKind::ConicPlusDoubleLine);
  auto v = normality(e, c);
  EXPECT_TRUE(v.normal);
  EXPECT_TRUE(v.conclusive);
}

TEST(NormalityDeg4, DoubleConicNotNormal) {
  LocalContext c(5);
  // F(0,x2,x3,x4) = p^2 x3^2, so no multiple of G matches it mod p^2
  Rat p = 5;
  auto e = pair(x(1) * x(1) + p * p * x(3) * x(3) + p * x(1) * x(2) + p * x(1) * x(4),
                x(2) * x(2) + x(3) * x(4) + p * x(1) * x(3));
  ASSERT_NE(discriminant(e), 0);
  EXPECT_EQ(classify_fiber(e, c).cls.kind, FiberKind::DoubleConic);
  EXPECT_FALSE(normality(e, c).normal);
}

TEST(NormalityDeg4, DoubleLinePlusTwoLinesNormal) {
  LocalContext c(5);
  auto e = pair(x(1) * x(1) + x(2) * x(2) + Rat(5) * x(3) * x(3), x(1) * x(3) + x(2) * x(4) + Rat(5) * x(4) * x(4));
  ASSERT_NE(discriminant(e), 0);
  auto rep = classify_fiber(e, c);
  EXPECT_EQ(rep.cls.kind, FiberKind::DoubleLinePlusTwoLines);
  EXPECT_EQ(rep.cls.param, 1);
  EXPECT_TRUE(normality(e, c).normal);
}

TEST(ReductionScreen, Examples) {
  LocalContext c(5);
  Rat p = 5;
  auto cf = pair(x(1) * x(2) + p * x(3) * x(4) + p * x(4) * x(4), x(1) * x(3) + p * x(2) * x(2) + p * x(4) * x(4));
  ASSERT_NE(discriminant(cf), 0);
  auto s = reduction_screen(cf, c);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->kind, FiberKind::CommonFactor);
  auto dg = pair(x(1) * x(1) + p * (x(3) * x(3) + x(4) * x(4) + x(2) * x(3)),
                 x(2) * x(2) + p * (x(3) * x(4) + x(1) * x(4) + x(3) * x(3)));
  ASSERT_NE(discriminant(dg), 0);
  auto t = reduction_screen(dg, c);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->kind, FiberKind::DegenerateX1X2);
  auto none = pair(x(1) * x(3) + p * x(4) * x(4), x(2) * x(2) + x(1) * x(4) + p * x(3) * x(3));
  EXPECT_FALSE(reduction_screen(none, c));
}

TEST(ReductionScreen, Corpus) {
  for (const auto& path : support::corpus_files()) {
    std::string name = path.stem().string();
    bool cf = name.rfind("common_factor", 0) == 0, dg = name.rfind("degenerate", 0) == 0;
    if (!cf && !dg) continue;
    auto m = read_model(path.string());
    auto s = reduction_screen(m.equation, LocalContext(*m.prime));
    ASSERT_TRUE(s) << name;
    EXPECT_EQ(s->kind, cf ? FiberKind::CommonFactor : FiberKind::DegenerateX1X2) << name;
  }
}

TEST(ClassifyFiber, Errors) {
  auto e = standard_model(1, 1, 4);
  try {
    classify_fiber(e, LocalContext(37));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnsupportedPrime);
  }
  Options wide;
  wide.prime_bound = 40;
  EXPECT_NO_THROW(classify_fiber(e, LocalContext(37), wide));
  auto singular = GenusOneEquation::from_ints(2, {0, 0, 0, 1, 0, 0, 0, 0});
  try {
    classify_fiber(singular, LocalContext(5));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::SingularGenericFiber);
  }
  try {
    classify_fiber(GenusOneEquation(2, {0, 0, 0, make_rat(1, 5), 0, 0, 0, 1}), LocalContext(5));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NonIntegralCoefficient);
  }
}

TEST(ClassifyFiber, GoodReductionIsAllMultiplicityOne) {
  for (int n = 2; n <= 4; ++n) {
    auto e = standard_model(1, 1, n);  // Delta = -496 = -2^4 31
    EXPECT_EQ(classify_fiber(e, LocalContext(5)).cls.kind, FiberKind::AllMultiplicityOne) << n;
    EXPECT_TRUE(normality(e, LocalContext(5)).normal);
  }
}
