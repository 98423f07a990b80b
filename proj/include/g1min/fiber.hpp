#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "g1min/detail/fp_geometry.hpp"
#include "g1min/invariants.hpp"
#include "g1min/options.hpp"

namespace g1min {

enum class FiberKind {
  AllMultiplicityOne,
  DoubleLine,             // degree 2: y^2 = 0
  MultipleComponent,      // degree 3: l^m divides the reduction, param = m
  ConicPlusDoubleLine,    // x1 x3 = x2^2 + x1 x4 = 0
  DoubleConic,            // x1^2 = x2^2 + x3 x4 = 0
  DoubleLinePlusTwoLines, // param = mu
  TwoDoubleLines,         // param = mu
  TripleLinePlusLine,
  QuadrupleLine,
  CommonFactor,
  DegenerateX1X2,
  ZeroReduction,
};

struct FiberClass {
  FiberKind kind = FiberKind::AllMultiplicityOne;
  int param = 0;
  friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

inline std::string fiber_name(const FiberClass& c) {
  switch (c.kind) {
    case FiberKind::AllMultiplicityOne: return "all multiplicity one";
    case FiberKind::DoubleLine: return "double line";
    case FiberKind::MultipleComponent: return "multiple line (m=" + std::to_string(c.param) + ")";
    case FiberKind::ConicPlusDoubleLine: return "conic + double line";
    case FiberKind::DoubleConic: return "double conic";
    case FiberKind::DoubleLinePlusTwoLines: return "double line + two lines (mu=" + std::to_string(c.param) + ")";
    case FiberKind::TwoDoubleLines: return "two double lines (mu=" + std::to_string(c.param) + ")";
    case FiberKind::TripleLinePlusLine: return "triple line + line";
    case FiberKind::QuadrupleLine: return "quadruple line";
    case FiberKind::CommonFactor: return "common factor";
    case FiberKind::DegenerateX1X2: return "degenerate x1^2 = x2^2 = 0";
    case FiberKind::ZeroReduction: return "zero reduction";
  }
  return "?";
}

struct StandardPosition {
  Transformation transform;          // p-integral with unit determinant
  GenusOneEquation equation;         // apply(transform, input)
};

// A multiple component placed at x1 = x2 = 0 (lines) or x1 = 0 (double conic).
struct MultipleComponent {
  FiberClass row;
  StandardPosition position;
};

struct FiberReport {
  FiberClass cls;
  std::optional<StandardPosition> position;
  std::vector<MultipleComponent> components;
  std::vector<detail::FpVec> common_factors;  // linear forms dividing both quadrics
};

struct NormalityVerdict {
  bool normal = true;
  bool conclusive = true;  // false when only a sufficient criterion was available
  std::string criterion;
  std::string witness;
};

namespace detail {

inline void check_prime(const LocalContext& ctx, const Options& opt) {
  if (ctx.p() > opt.prime_bound)
    throw Error(ErrorCode::UnsupportedPrime,
                "p = " + std::to_string(ctx.p()) + " exceeds prime bound " + std::to_string(opt.prime_bound));
}

inline void check_input(const GenusOneEquation& e, const LocalContext& ctx) {
  if (e.degree < 2 || e.degree > 4) throw Error(ErrorCode::DegreeMismatch, "fiber needs degree 2..4");
  if (!is_integral(e, ctx)) throw Error(ErrorCode::NonIntegralCoefficient, "equation not integral at p");
  if (discriminant(e) == 0) throw Error(ErrorCode::SingularGenericFiber, "zero discriminant");
}

inline StandardPosition position_of(const Transformation& g, const GenusOneEquation& e) {
  return StandardPosition{g, apply(g, e)};
}

inline RatMatrix lift_unit(const FpMatrix& m) { return lift(m); }

// Degree 2.

inline FiberReport classify_deg2(const GenusOneEquation& e, const LocalContext& ctx) {
  FiberReport rep;
  long p = ctx.p();
  const auto& c = e.coeffs;
  QuarticTransform t;
  if (p != 2) {
    BinaryQuartic r = completed_quartic(e);
    for (auto& x : r)
      if (valuation(x, ctx) < 1) return rep;
    for (int i = 0; i < 3; ++i) t.r[i] = -c[i] / 2;
  } else {
    for (int i = 0; i < 3; ++i)
      if (valuation(c[i], ctx) < 1) return rep;
    if (valuation(c[4], ctx) < 1 || valuation(c[6], ctx) < 1) return rep;
    // r^2 reduces to f: square roots are the coefficients themselves over F_2
    t.r = {Rat(residue_small(c[3], ctx)), Rat(residue_small(c[5], ctx)), Rat(residue_small(c[7], ctx))};
  }
  rep.cls = {FiberKind::DoubleLine, 0};
  rep.position = position_of(t, e);
  rep.components.push_back({rep.cls, *rep.position});
  return rep;
}

// f + g R - R^2 for the equation y^2 + g y = f.
inline MultiPoly deg2_remainder(const GenusOneEquation& e, const MultiPoly& r) {
  return quartic_f(e) + quartic_g(e) * r - r * r;
}

inline NormalityVerdict normality_deg2(const GenusOneEquation& e, const FiberReport& rep, const LocalContext& ctx) {
  NormalityVerdict v;
  v.criterion = "f + gR - R^2 of valuation 1";
  if (rep.cls.kind != FiberKind::DoubleLine) {
    v.criterion = "reduced fibre";
    return v;
  }
  long p = ctx.p();
  const auto& t = rep.position->transform.as<QuarticTransform>();
  // R is determined modulo p by the double line; scan its lifts modulo p^2
  for (long k = 0; k < p * p * p; ++k) {
    std::array<Rat, 3> rr;
    long s = k;
    for (int i = 0; i < 3; ++i) {
      rr[i] = -t.r[i] + Rat(p * (s % p));
      s /= p;
    }
    MultiPoly rem = deg2_remainder(e, binary_quadratic(rr));
    if (poly_valuation(rem, ctx) == 1) {
      v.normal = true;
      v.witness = "R = " + to_string(binary_quadratic(rr), {"x", "z"});
      return v;
    }
  }
  v.normal = false;
  v.witness = "no R modulo p^2";
  return v;
}

// Degree 3.

inline FiberReport classify_deg3(const GenusOneEquation& e, const LocalContext& ctx) {
  FiberReport rep;
  long p = ctx.p();
  FpPoly f = reduce_mod_p(cubic_poly(e), ctx);
  if (f.is_zero()) {
    rep.cls = {FiberKind::ZeroReduction, 0};
    return rep;
  }
  for (const auto& l : projective_points(3, p)) {
    auto q = divide_by_linear(f, l);
    if (!q) continue;
    auto q2 = divide_by_linear(*q, l);
    if (!q2) continue;
    int m = divide_by_linear(*q2, l) ? 3 : 2;
    rep.cls = {FiberKind::MultipleComponent, m};
    CubicTransform t{1, lift_unit(form_to_coordinate(l, 1))};
    rep.position = position_of(t, e);
    rep.components.push_back({rep.cls, *rep.position});
    return rep;
  }
  return rep;
}

// Parts of a cubic by degree in y: F = b y^3 + f1 y^2 + f2 y + f3.
inline Valuation cubic_part_valuation(const GenusOneEquation& e, int ydeg, const LocalContext& ctx) {
  Valuation v = Valuation::infinity();
  const auto& mons = cubic_monomials();
  for (size_t i = 0; i < mons.size(); ++i)
    if (mons[i][1] == ydeg) v = min(v, valuation(e.coeffs[i], ctx));
  return v;
}

inline NormalityVerdict normality_deg3(const FiberReport& rep, const LocalContext& ctx) {
  NormalityVerdict v;
  v.criterion = "v(f3) = 1";
  if (rep.cls.kind == FiberKind::ZeroReduction) {
    v.normal = false;
    v.criterion = "zero reduction";
    return v;
  }
  if (rep.cls.kind != FiberKind::MultipleComponent) {
    v.criterion = "reduced fibre";
    return v;
  }
  const auto& s = rep.position->equation;
  if (cubic_part_valuation(s, 1, ctx) < 1 || cubic_part_valuation(s, 0, ctx) < 1)
    throw Error(ErrorCode::PositionViolation, "cubic not divisible by y^2 modulo p");
  Valuation f3 = cubic_part_valuation(s, 0, ctx);
  v.normal = f3 == 1;
  std::ostringstream os;
  os << "v(f3) = " << f3;
  v.witness = os.str();
  return v;
}

}  // namespace detail
}  // namespace g1min

#include "g1min/detail/fiber_quadrics.hpp"
