#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g1min/fiber.hpp"
#include "g1min/jacobian.hpp"

namespace g1min {

struct Move {
  Transformation transform;
  std::string tag;  // deg2-double-line, deg3-multiple-line, deg4-conic-double-line, deg4-double-conic,
                    // deg4-multiple-line, common-factor, search, weierstrass
  long prime = 0;
  long levels = 0;  // v_p(Delta) drops by 12 * levels
};

enum class MinimalityStatus { MinimalCertified, MinimalNoCertificate, NotMinimalDetected };
enum class Tristate { False, True, Unknown };
enum class GeometricStatus { GeometricallyMinimal, NotGeometricallyMinimal, Unknown };

inline std::string status_name(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::MinimalCertified: return "MinimalCertified";
    case MinimalityStatus::MinimalNoCertificate: return "MinimalNoCertificate";
    case MinimalityStatus::NotMinimalDetected: return "NotMinimalDetected";
  }
  return "?";
}
inline std::string tristate_name(Tristate t) {
  return t == Tristate::True ? "true" : t == Tristate::False ? "false" : "unknown";
}
inline std::string geometric_name(GeometricStatus s) {
  switch (s) {
    case GeometricStatus::GeometricallyMinimal: return "GeometricallyMinimal";
    case GeometricStatus::NotGeometricallyMinimal: return "NotGeometricallyMinimal";
    case GeometricStatus::Unknown: return "Unknown";
  }
  return "?";
}

struct MinimisationCertificate {
  long prime = 0;  // 0 for a global certificate
  GenusOneEquation input, output;
  std::vector<Move> moves;
  std::vector<long> disc_valuations;  // v_p(Delta) before the first move and after each move
  Transformation total = identity_transform(1);
  long initial_level = 0, final_level = 0;
  MinimalityStatus status = MinimalityStatus::MinimalNoCertificate;
  Tristate minimal = Tristate::Unknown;
  std::optional<FiberClass> screen;
  std::vector<MinimisationCertificate> locals;  // per prime, global certificates only
};

inline long det_valuation(const Transformation& g, const LocalContext& ctx) {
  return valuation(det(g), ctx).value();
}

// W M with W in GL_n(Z_(p)): upper triangular, p-power diagonal, entries in Z[1/p].
inline RatMatrix hermite_left(RatMatrix m, const LocalContext& ctx) {
  int n = m.rows();
  auto addrow = [&](int dst, int src, const Rat& c) {
    for (int j = 0; j < n; ++j) m(dst, j) -= c * m(src, j);
  };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    Valuation best = Valuation::infinity();
    for (int i = col; i < n; ++i) {
      Valuation v = valuation(m(i, col), ctx);
      if (v < best) { best = v; piv = i; }
    }
    if (piv < 0) throw Error(ErrorCode::SingularInput, "singular matrix");
    m.swap_rows(col, piv);
    Rat unit = ctx.rpow(best.value()) / m(col, col);
    for (int j = 0; j < n; ++j) m(col, j) *= unit;
    for (int i = col + 1; i < n; ++i)
      if (m(i, col) != 0) addrow(i, col, Rat(m(i, col) / m(col, col)));
  }
  for (int j = 1; j < n; ++j) {
    long vj = valuation(m(j, j), ctx).value();
    for (int i = 0; i < j; ++i) {
      Rat target = p_adic_truncate(m(i, j), vj, ctx);
      if (target != m(i, j)) addrow(i, j, Rat((m(i, j) - target) / m(j, j)));
    }
  }
  return m;
}

// A transformation g' = w g with w p-integral of unit determinant and every
// entry of g' in Z[1/p]; det g' = +-p^k. Other primes are left untouched.
inline Transformation globalize(const Transformation& g, const LocalContext& ctx) {
  switch (g.index()) {
    case 0: {
      const auto& t = g.as<WeierstrassTransform>();
      long k = valuation(t.u, ctx).value();
      WeierstrassTransform o;
      o.u = ctx.rpow(k);
      o.r = p_adic_truncate(t.r, 2 * k, ctx);
      o.s = p_adic_truncate(t.s, k, ctx);
      o.t = p_adic_truncate(t.t + t.s * (o.r - t.r), 3 * k, ctx);
      return o;
    }
    case 1: {
      const auto& t = g.as<QuarticTransform>();
      long k = valuation(t.mu, ctx).value();
      QuarticTransform o;
      o.mu = ctx.rpow(k);
      o.m = hermite_left(t.m, ctx);
      RatMatrix w = o.m * rat_inverse(t.m);
      auto rw = coeffs_from(binary_quadratic(t.r).substitute(w), binary_quadratic_monomials());
      for (int i = 0; i < 3; ++i) o.r[i] = p_adic_truncate(rw[i], -k, ctx);
      return o;
    }
    case 2: {
      const auto& t = g.as<CubicTransform>();
      return CubicTransform{ctx.rpow(valuation(t.mu, ctx).value()), hermite_left(t.m, ctx)};
    }
    default: {
      const auto& t = g.as<QuadricPairTransform>();
      return QuadricPairTransform{hermite_left(t.m, ctx), hermite_left(t.n, ctx)};
    }
  }
}

namespace detail {

// Entries in Z[1/p] and det = +-p^k.
inline bool is_p_global(const Transformation& g, const LocalContext& ctx) {
  for (const auto& x : entries(g))
    if (!is_p_power_denominator(x, ctx)) return false;
  Rat d = abs(det(g));
  return d == ctx.rpow(valuation(d, ctx).value());
}

// Accept g as a move on e when it is integral at p and lowers v_p(Delta).
inline std::optional<Move> make_move(const GenusOneEquation& e, const Transformation& g, const std::string& tag,
                                     const LocalContext& ctx) {
  long dv = det_valuation(g, ctx);
  if (dv >= 0) return std::nullopt;
  if (!is_integral(apply(g, e), ctx)) return std::nullopt;
  return Move{g, tag, ctx.p(), -dv};
}

inline Transformation deg4_move(const RatMatrix& m, const RatMatrix& n, const Transformation& pos) {
  return compose(QuadricPairTransform{m, n}, pos);
}

inline std::optional<Move> nonminimal_deg4(const GenusOneEquation& e, const FiberReport& rep,
                                           const LocalContext& ctx) {
  Rat p = ctx.p();
  Rat ip = 1 / p, ip2 = ip * ip;
  switch (rep.cls.kind) {
    case FiberKind::ConicPlusDoubleLine: {
      const auto& s = rep.position->equation;
      if (min_valuation(conic_line_cubic(s), ctx) < 2) return std::nullopt;
      const auto& c = s.coeffs;
      RatMatrix clean = rat_identity(4);
      clean(2, 0) = -c[7] / c[2];
      clean(3, 0) = -c[8] / c[2];
      Transformation pos = compose(QuadricPairTransform{rat_identity(2), clean}, rep.position->transform);
      return make_move(e, deg4_move(rat_diag({ip2, ip2}), rat_diag({p * p, p, 1, 1}), pos),
                       "deg4-conic-double-line", ctx);
    }
    case FiberKind::DoubleConic: {
      auto mu = double_conic_multiplier(rep.position->equation, ctx);
      if (!mu) return std::nullopt;
      RatMatrix m = rat_identity(2);
      m(0, 0) = ip2;
      m(0, 1) = -Rat(*mu) * ip2;
      return make_move(e, deg4_move(m, rat_diag({p, 1, 1, 1}), rep.position->transform), "deg4-double-conic", ctx);
    }
    case FiberKind::DoubleLinePlusTwoLines:
    case FiberKind::TwoDoubleLines:
    case FiberKind::TripleLinePlusLine:
    case FiberKind::QuadrupleLine:
      for (const auto& comp : rep.components) {
        auto t = tail_form(comp.position.equation, 0);
        if (min_valuation({t[0], t[1], t[2]}, ctx) < 2) continue;
        auto mv = make_move(e, deg4_move(rat_diag({ip2, ip}), rat_diag({p, p, 1, 1}), comp.position.transform),
                            "deg4-multiple-line", ctx);
        if (mv) return mv;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// One of the level-lowering moves attached to a non-normal special fibre.
inline std::optional<Move> nonminimal_step(const GenusOneEquation& e, const LocalContext& ctx,
                                           const Options& opt = Options::from_env()) {
  if (e.degree == 1) {
    auto w = weierstrass_minimising_move(e, ctx);
    if (!w) return std::nullopt;
    return detail::make_move(e, *w, "weierstrass", ctx);
  }
  FiberReport rep;
  try {
    rep = classify_fiber(e, ctx, opt);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::UnsupportedResidueField || err.code() == ErrorCode::UnsupportedPrime)
      return std::nullopt;
    throw;
  }
  Rat p = ctx.p();
  if (e.degree == 2) {
    if (rep.cls.kind != FiberKind::DoubleLine) return std::nullopt;
    if (poly_valuation(quartic_f(rep.position->equation), ctx) < 2) return std::nullopt;
    QuarticTransform div;
    div.mu = 1 / p;
    return detail::make_move(e, compose(div, rep.position->transform), "deg2-double-line", ctx);
  }
  if (e.degree == 3) {
    if (rep.cls.kind != FiberKind::MultipleComponent) return std::nullopt;
    if (detail::cubic_part_valuation(rep.position->equation, 0, ctx) < 2) return std::nullopt;
    CubicTransform mv{1 / (p * p), rat_diag({1, p, 1})};
    return detail::make_move(e, compose(mv, rep.position->transform), "deg3-multiple-line", ctx);
  }
  return detail::nonminimal_deg4(e, rep, ctx);
}

}  // namespace g1min

#include "g1min/detail/search.hpp"
