#pragma once

#include <map>
#include <optional>
#include <vector>

#include "g1min/invariants.hpp"

namespace g1min {

// Residue of a p-integral rational modulo p^e, signed range not needed here.
inline Integer residue_mod(const Rat& x, long p, unsigned long e) {
  LocalContext ctx(p);
  return residue(x, ctx, e);
}

// Kraus's local conditions: is there a Weierstrass model integral at p with
// invariants exactly (c4, c6)? Both must be p-integral.
inline bool kraus_local(const Rat& c4, const Rat& c6, const LocalContext& ctx) {
  if (valuation(c4, ctx) < 0 || valuation(c6, ctx) < 0) return false;
  Rat d = c4 * c4 * c4 - c6 * c6;
  if (d == 0) return false;
  long p = ctx.p();
  if (p >= 5) return true;
  if (p == 3) return valuation(c6, ctx) != 2 && valuation(d, ctx) >= 3;
  if (valuation(d, ctx) < 6) return false;
  Integer c6mod4 = residue_mod(c6, 2, 2);
  if (c6mod4 == 3) return true;
  if (valuation(c4, ctx) < 4) return false;
  Integer c6mod32 = residue_mod(c6, 2, 5);
  return c6mod32 == 0 || c6mod32 == 8;
}

// Integral model with invariants (c4, c6), assuming Kraus's conditions at 2 and 3.
inline std::optional<GenusOneEquation> kraus_model(const Rat& c4, const Rat& c6) {
  if (!is_integer(c4) || !is_integer(c6)) return std::nullopt;
  Integer C4 = c4.get_num(), C6 = c6.get_num();
  Integer b2 = (-C6) % 12;
  if (b2 < 0) b2 += 12;
  if (b2 > 6) b2 -= 12;
  Integer n4 = b2 * b2 - C4;
  if (n4 % 24 != 0) return std::nullopt;
  Integer b4 = n4 / 24;
  Integer n6 = -b2 * b2 * b2 + 36 * b2 * b4 - C6;
  if (n6 % 216 != 0) return std::nullopt;
  Integer b6 = n6 / 216;
  Integer a1 = b2 % 2;
  if (a1 < 0) a1 += 2;
  Integer a3 = b6 % 2;
  if (a3 < 0) a3 += 2;
  if ((b2 - a1) % 4 != 0 || (b4 - a1 * a3) % 2 != 0 || (b6 - a3) % 4 != 0) return std::nullopt;
  GenusOneEquation e(1, {Rat(a1), Rat((b2 - a1) / 4), Rat(a3), Rat((b4 - a1 * a3) / 2), Rat((b6 - a3) / 4)});
  auto inv = invariants(e);
  if (inv.c4 != c4 || inv.c6 != c6) return std::nullopt;
  return e;
}

struct JacobianResult {
  GenusOneEquation model;
  // invariants(model) = (u^4 c4, u^6 c6)
  Rat u = 1;
};

// Smallest positive integer u such that u^4 c4 and u^6 c6 are integers.
inline Integer clearing_scale(const Rat& c4, const Rat& c6) {
  Integer u = 1;
  Integer d = c4.get_den() * c6.get_den();
  Integer q = 2;
  while (d > 1) {
    if (d % q == 0) {
      long e4 = 0, e6 = 0;
      Integer t = c4.get_den();
      while (t % q == 0) { t /= q; ++e4; }
      t = c6.get_den();
      while (t % q == 0) { t /= q; ++e6; }
      long e = std::max((e4 + 3) / 4, (e6 + 5) / 6);
      for (long i = 0; i < e; ++i) u *= q;
      while (d % q == 0) d /= q;
    }
    ++q;
  }
  return u;
}

// Weierstrass model of the Jacobian. Uses the exact invariants when an integral
// model with them exists, otherwise the smallest admissible rescaling.
inline JacobianResult jacobian(const Rat& c4, const Rat& c6) {
  if (c4 * c4 * c4 == c6 * c6) throw Error(ErrorCode::SingularInput, "c4^3 = c6^2");
  Integer base = clearing_scale(c4, c6);
  for (int extra : {1, 2, 3, 6}) {
    Rat u = Rat(base * extra);
    Rat u2 = u * u;
    auto m = kraus_model(u2 * u2 * c4, u2 * u2 * u2 * c6);
    if (m) return JacobianResult{*m, u};
  }
  // y^2 = x^3 - 27 c4 x - 54 c6 has invariants (6^4 c4, 6^6 c6); unreachable in practice
  Rat u = Rat(base * 6);
  Rat b4 = base * base * base * base, b6 = b4 * base * base;
  return JacobianResult{GenusOneEquation(1, {0, 0, 0, Rat(-27 * b4 * c4), Rat(-54 * b6 * c6)}), u};
}

// Largest k >= -1 such that (c4/p^4k, c6/p^6k) satisfies Kraus's conditions at p.
inline long kraus_max_scaling(const Rat& c4, const Rat& c6, const LocalContext& ctx) {
  Rat d = c4 * c4 * c4 - c6 * c6;
  if (d == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  long hi = valuation(d, ctx).value() / 12 + 1;
  for (long k = hi; k >= -1; --k) {
    Rat s4 = ctx.rpow(-4 * k), s6 = ctx.rpow(-6 * k);
    if (kraus_local(c4 * s4, c6 * s6, ctx)) return k;
  }
  throw Error(ErrorCode::SingularInput, "no admissible scaling");
}

// Valuation at p of the minimal discriminant of the curve with invariants (c4, c6).
inline long minimal_valuation_from_invariants(const Rat& c4, const Rat& c6, const LocalContext& ctx) {
  Rat d = (c4 * c4 * c4 - c6 * c6) / 1728;
  long k = kraus_max_scaling(c4, c6, ctx);
  return valuation(d, ctx).value() - 12 * k;
}

inline long minimal_discriminant_local(const GenusOneEquation& e, const LocalContext& ctx) {
  if (e.degree != 1) throw Error(ErrorCode::DegreeMismatch, "expects a Weierstrass equation");
  auto inv = invariants(e);
  if (inv.disc == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  if (!is_integral(e, ctx)) throw Error(ErrorCode::NonIntegralCoefficient, "model not integral at p");
  return minimal_valuation_from_invariants(inv.c4, inv.c6, ctx);
}

// Primes p with p^12 dividing n.
inline std::vector<long> primes_with_twelfth_power(Integer n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long q = 2;; ++q) {
    Integer qq = q;
    Integer q12;
    mpz_pow_ui(q12.get_mpz_t(), qq.get_mpz_t(), 12);
    if (q12 > n) break;
    if (n % q != 0) continue;
    long e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e >= 12) out.push_back(q);
  }
  return out;
}

struct PrimeDiscriminantData {
  long input_valuation = 0;
  long minimal_valuation = 0;
  long scaling_exponent = 0;  // u = p^k used at this prime
};

struct MinimalDiscriminantReport {
  Rat disc_min;
  std::map<long, PrimeDiscriminantData> primes;
};

inline MinimalDiscriminantReport minimal_discriminant_global(const GenusOneEquation& e) {
  if (e.degree != 1) throw Error(ErrorCode::DegreeMismatch, "expects a Weierstrass equation");
  if (!is_integral(e)) throw Error(ErrorCode::NonIntegralCoefficient, "model not integral");
  auto inv = invariants(e);
  if (inv.disc == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  MinimalDiscriminantReport rep;
  rep.disc_min = inv.disc;
  for (long p : primes_with_twelfth_power(inv.disc.get_num())) {
    LocalContext ctx(p);
    PrimeDiscriminantData d;
    d.input_valuation = valuation(inv.disc, ctx).value();
    d.minimal_valuation = minimal_discriminant_local(e, ctx);
    d.scaling_exponent = (d.input_valuation - d.minimal_valuation) / 12;
    rep.disc_min /= ctx.rpow(12 * d.scaling_exponent);
    rep.primes[p] = d;
  }
  return rep;
}

struct Level {
  long value = 0;
  long prime = 0;
};

inline Level level(const GenusOneEquation& e, const LocalContext& ctx) {
  if (!is_integral(e, ctx)) throw Error(ErrorCode::NonIntegralCoefficient, "equation not integral at p");
  auto inv = invariants(e);
  if (inv.disc == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  long vmin = minimal_valuation_from_invariants(inv.c4, inv.c6, ctx);
  long diff = valuation(inv.disc, ctx).value() - vmin;
  if (diff < 0 || diff % 12 != 0)
    throw Error(ErrorCode::NonIntegralLevel, "valuation gap " + std::to_string(diff));
  return Level{diff / 12, ctx.p()};
}

// Transformation taking E to a model with invariants scaled by p^-4k, p^-6k
// (k = levels dropped), integral at p. Built through short Weierstrass forms.
inline std::optional<WeierstrassTransform> weierstrass_minimising_move(const GenusOneEquation& e,
                                                                       const LocalContext& ctx) {
  auto inv = invariants(e);
  long k = kraus_max_scaling(inv.c4, inv.c6, ctx);
  if (k <= 0) return std::nullopt;
  Rat s4 = ctx.rpow(-4 * k), s6 = ctx.rpow(-6 * k);
  Rat t4 = inv.c4 * s4, t6 = inv.c6 * s6;
  // target model integral at p; the extra scale is coprime to p
  Integer base = clearing_scale(t4, t6);
  std::optional<GenusOneEquation> target;
  Rat extra = 1;
  for (int m : {1, 2, 3, 6}) {
    Rat w = Rat(base * m);
    if (valuation(w, ctx) != 0) continue;
    Rat w2 = w * w;
    target = kraus_model(w2 * w2 * t4, w2 * w2 * w2 * t6);
    if (target) {
      extra = w;
      break;
    }
  }
  if (!target) return std::nullopt;
  auto to_short = [](const GenusOneEquation& m) {
    const auto& a = m.coeffs;
    Rat b2 = a[0] * a[0] + 4 * a[1];
    Rat r = -b2 / 12;
    Rat s = -a[0] / 2;
    Rat t = -(a[2] + r * a[0]) / 2;
    return WeierstrassTransform{make_rat(1, 6), r, s, t};
  };
  Rat w = extra / ctx.rpow(k);
  Transformation g = compose(inverse(to_short(*target)),
                             compose(WeierstrassTransform{1 / w, 0, 0, 0}, to_short(e)));
  auto out = g.as<WeierstrassTransform>();
  if (apply(g, e) != *target) return std::nullopt;
  return out;
}

}  // namespace g1min
