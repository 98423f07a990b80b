#pragma once

#include <string>
#include <variant>
#include <vector>

#include "g1min/arith.hpp"
#include "g1min/matrix.hpp"
#include "g1min/poly.hpp"

namespace g1min {

// Coefficient layouts, in printed order:
//   degree 1: a1 a2 a3 a4 a6            y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
//   degree 2: al0 al1 al2 a b c d e      y^2 + g(x,z) y = f(x,z)
//   degree 3: a b c a2 a3 b1 b3 c1 c2 m  ternary cubic in x, y, z
//   degree 4: a1..a10 b1..b10            quadrics F, G in x1..x4
inline const std::vector<std::string>& coefficient_names(int degree) {
  static const std::vector<std::vector<std::string>> names = {
      {},
      {"a1", "a2", "a3", "a4", "a6"},
      {"alpha0", "alpha1", "alpha2", "a", "b", "c", "d", "e"},
      {"a", "b", "c", "a2", "a3", "b1", "b3", "c1", "c2", "m"},
      {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10",
       "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9", "b10"},
  };
  if (degree < 1 || degree > 4) throw Error(ErrorCode::DegreeMismatch, "degree must be 1..4");
  return names[degree];
}

inline size_t coefficient_count(int degree) { return coefficient_names(degree).size(); }

struct GenusOneEquation {
  int degree = 1;
  std::vector<Rat> coeffs;

  GenusOneEquation() : coeffs(5) {}
  GenusOneEquation(int n, std::vector<Rat> c) : degree(n), coeffs(std::move(c)) {
    if (coeffs.size() != coefficient_count(n))
      throw Error(ErrorCode::DimensionMismatch,
                  "degree " + std::to_string(n) + " needs " + std::to_string(coefficient_count(n)) +
                      " coefficients");
  }
  static GenusOneEquation from_ints(int n, const std::vector<long>& c) {
    std::vector<Rat> r;
    for (long x : c) r.emplace_back(x);
    return GenusOneEquation(n, r);
  }
  friend bool operator==(const GenusOneEquation& a, const GenusOneEquation& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

// Monomials of the ternary cubic and the quaternary quadric in printed order.
inline const std::vector<Exponents>& cubic_monomials() {
  static const std::vector<Exponents> m = {
      exps({3, 0, 0}), exps({0, 3, 0}), exps({0, 0, 3}), exps({2, 1, 0}), exps({2, 0, 1}),
      exps({1, 2, 0}), exps({0, 2, 1}), exps({1, 0, 2}), exps({0, 1, 2}), exps({1, 1, 1})};
  return m;
}

inline const std::vector<Exponents>& quadric_monomials() {
  static const std::vector<Exponents> m = {
      exps({2, 0, 0, 0}), exps({1, 1, 0, 0}), exps({1, 0, 1, 0}), exps({1, 0, 0, 1}),
      exps({0, 2, 0, 0}), exps({0, 1, 1, 0}), exps({0, 1, 0, 1}), exps({0, 0, 2, 0}),
      exps({0, 0, 1, 1}), exps({0, 0, 0, 2})};
  return m;
}

inline const std::vector<Exponents>& binary_quadratic_monomials() {
  static const std::vector<Exponents> m = {exps({2, 0}), exps({1, 1}), exps({0, 2})};
  return m;
}

inline const std::vector<Exponents>& binary_quartic_monomials() {
  static const std::vector<Exponents> m = {exps({4, 0}), exps({3, 1}), exps({2, 2}), exps({1, 3}),
                                           exps({0, 4})};
  return m;
}

inline MultiPoly poly_from(int nvars, const std::vector<Exponents>& mons, const Rat* c) {
  MultiPoly f = rat_poly(nvars);
  for (size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], c[i]);
  return f;
}

inline std::vector<Rat> coeffs_from(const MultiPoly& f, const std::vector<Exponents>& mons) {
  std::vector<Rat> c;
  size_t seen = 0;
  for (auto& e : mons) {
    c.push_back(f.coeff(e));
    if (c.back() != 0) ++seen;
  }
  if (seen != f.terms().size())
    throw Error(ErrorCode::DimensionMismatch, "polynomial has monomials outside the model shape");
  return c;
}

// Views of an equation as polynomials.
inline MultiPoly quartic_g(const GenusOneEquation& e) {
  return poly_from(2, binary_quadratic_monomials(), e.coeffs.data());
}
inline MultiPoly quartic_f(const GenusOneEquation& e) {
  return poly_from(2, binary_quartic_monomials(), e.coeffs.data() + 3);
}
inline MultiPoly cubic_poly(const GenusOneEquation& e) {
  return poly_from(3, cubic_monomials(), e.coeffs.data());
}
inline MultiPoly quadric_f(const GenusOneEquation& e) {
  return poly_from(4, quadric_monomials(), e.coeffs.data());
}
inline MultiPoly quadric_g(const GenusOneEquation& e) {
  return poly_from(4, quadric_monomials(), e.coeffs.data() + 10);
}

inline GenusOneEquation make_quartic(const MultiPoly& g, const MultiPoly& f) {
  auto c = coeffs_from(g, binary_quadratic_monomials());
  auto d = coeffs_from(f, binary_quartic_monomials());
  c.insert(c.end(), d.begin(), d.end());
  return GenusOneEquation(2, c);
}
inline GenusOneEquation make_cubic(const MultiPoly& f) {
  return GenusOneEquation(3, coeffs_from(f, cubic_monomials()));
}
inline GenusOneEquation make_quadric_pair(const MultiPoly& f, const MultiPoly& g) {
  auto c = coeffs_from(f, quadric_monomials());
  auto d = coeffs_from(g, quadric_monomials());
  c.insert(c.end(), d.begin(), d.end());
  return GenusOneEquation(4, c);
}

// Transformations. Convention for every degree: the new equation is obtained by
// substituting the row vector v M for the old variables, so composing g after h
// multiplies matrices as M_g M_h. With this orientation
// Delta(apply(g, phi)) = det(g)^12 Delta(phi) in all degrees.

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, then divide by u^6.
struct WeierstrassTransform {
  Rat u = 1, r = 0, s = 0, t = 0;
};

// mu^2 phi(vM, y/mu + r(v)) with r(v) = r0 x^2 + r1 xz + r2 z^2.
struct QuarticTransform {
  Rat mu = 1;
  std::array<Rat, 3> r{0, 0, 0};
  RatMatrix m = rat_identity(2);
};

// mu F(vM).
struct CubicTransform {
  Rat mu = 1;
  RatMatrix m = rat_identity(3);
};

// (F', G')^T = M (F(vN), G(vN))^T.
struct QuadricPairTransform {
  RatMatrix m = rat_identity(2);
  RatMatrix n = rat_identity(4);
};

// Wrapped rather than aliased so that unqualified calls find g1min::apply.
struct Transformation {
  using Variant = std::variant<WeierstrassTransform, QuarticTransform, CubicTransform, QuadricPairTransform>;
  Variant v;

  Transformation(WeierstrassTransform t) : v(std::move(t)) {}
  Transformation(QuarticTransform t) : v(std::move(t)) {}
  Transformation(CubicTransform t) : v(std::move(t)) {}
  Transformation(QuadricPairTransform t) : v(std::move(t)) {}

  size_t index() const { return v.index(); }
  template <class T>
  const T& as() const { return std::get<T>(v); }
};

inline int degree(const Transformation& g) { return static_cast<int>(g.index()) + 1; }

inline Transformation identity_transform(int n) {
  switch (n) {
    case 1: return WeierstrassTransform{};
    case 2: return QuarticTransform{};
    case 3: return CubicTransform{};
    case 4: return QuadricPairTransform{};
  }
  throw Error(ErrorCode::DegreeMismatch, "degree must be 1..4");
}

inline MultiPoly binary_quadratic(const std::array<Rat, 3>& r) {
  return poly_from(2, binary_quadratic_monomials(), r.data());
}

inline Rat det(const Transformation& g) {
  return std::visit(
      [](const auto& t) -> Rat {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, WeierstrassTransform>) {
          return 1 / t.u;
        } else if constexpr (std::is_same_v<T, QuarticTransform>) {
          return t.mu * t.m.det();
        } else if constexpr (std::is_same_v<T, CubicTransform>) {
          return t.mu * t.m.det();
        } else {
          return t.m.det() * t.n.det();
        }
      },
      g.v);
}

inline GenusOneEquation apply_weierstrass(const WeierstrassTransform& g, const GenusOneEquation& e) {
  const auto& c = e.coeffs;
  const Rat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
  const Rat &u = g.u, &r = g.r, &s = g.s, &t = g.t;
  Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  std::vector<Rat> out(5);
  out[0] = (a1 + 2 * s) / u;
  out[1] = (a2 - s * a1 + 3 * r - s * s) / u2;
  out[2] = (a3 + r * a1 + 2 * t) / u3;
  out[3] = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  out[4] = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  return GenusOneEquation(1, out);
}

inline GenusOneEquation apply(const Transformation& g, const GenusOneEquation& e) {
  if (degree(g) != e.degree) throw Error(ErrorCode::DegreeMismatch, "transformation degree");
  return std::visit(
      [&](const auto& t) -> GenusOneEquation {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, WeierstrassTransform>) {
          return apply_weierstrass(t, e);
        } else if constexpr (std::is_same_v<T, QuarticTransform>) {
          MultiPoly gm = quartic_g(e).substitute(t.m);
          MultiPoly fm = quartic_f(e).substitute(t.m);
          MultiPoly r = binary_quadratic(t.r);
          MultiPoly g2 = t.mu * (gm + Rat(2) * r);
          MultiPoly f2 = Rat(t.mu * t.mu) * (fm - gm * r - r * r);
          return make_quartic(g2, f2);
        } else if constexpr (std::is_same_v<T, CubicTransform>) {
          return make_cubic(t.mu * cubic_poly(e).substitute(t.m));
        } else {
          MultiPoly f = quadric_f(e).substitute(t.n);
          MultiPoly gq = quadric_g(e).substitute(t.n);
          return make_quadric_pair(t.m(0, 0) * f + t.m(0, 1) * gq, t.m(1, 0) * f + t.m(1, 1) * gq);
        }
      },
      g.v);
}

// compose(g, h) acts as "h first, then g".
inline Transformation compose(const Transformation& g, const Transformation& h) {
  if (g.index() != h.index()) throw Error(ErrorCode::DegreeMismatch, "compose");
  switch (g.index()) {
    case 0: {
      auto& a = g.as<WeierstrassTransform>();
      auto& b = h.as<WeierstrassTransform>();
      WeierstrassTransform c;
      c.u = a.u * b.u;
      c.r = b.u * b.u * a.r + b.r;
      c.s = b.u * a.s + b.s;
      c.t = b.u * b.u * b.u * a.t + b.s * b.u * b.u * a.r + b.t;
      return c;
    }
    case 1: {
      auto& a = g.as<QuarticTransform>();
      auto& b = h.as<QuarticTransform>();
      QuarticTransform c;
      c.mu = a.mu * b.mu;
      c.m = a.m * b.m;
      MultiPoly r = Rat(1 / b.mu) * binary_quadratic(a.r) + binary_quadratic(b.r).substitute(a.m);
      auto rc = coeffs_from(r, binary_quadratic_monomials());
      c.r = {rc[0], rc[1], rc[2]};
      return c;
    }
    case 2: {
      auto& a = g.as<CubicTransform>();
      auto& b = h.as<CubicTransform>();
      return CubicTransform{a.mu * b.mu, a.m * b.m};
    }
    default: {
      auto& a = g.as<QuadricPairTransform>();
      auto& b = h.as<QuadricPairTransform>();
      return QuadricPairTransform{a.m * b.m, a.n * b.n};
    }
  }
}

inline Transformation inverse(const Transformation& g) {
  switch (g.index()) {
    case 0: {
      auto& a = g.as<WeierstrassTransform>();
      Rat u2 = a.u * a.u;
      return WeierstrassTransform{1 / a.u, -a.r / u2, -a.s / a.u, (a.r * a.s - a.t) / (u2 * a.u)};
    }
    case 1: {
      auto& a = g.as<QuarticTransform>();
      QuarticTransform c;
      c.mu = 1 / a.mu;
      c.m = rat_inverse(a.m);
      MultiPoly r = Rat(-a.mu) * binary_quadratic(a.r).substitute(c.m);
      auto rc = coeffs_from(r, binary_quadratic_monomials());
      c.r = {rc[0], rc[1], rc[2]};
      return c;
    }
    case 2: {
      auto& a = g.as<CubicTransform>();
      return CubicTransform{1 / a.mu, rat_inverse(a.m)};
    }
    default: {
      auto& a = g.as<QuadricPairTransform>();
      return QuadricPairTransform{rat_inverse(a.m), rat_inverse(a.n)};
    }
  }
}

inline bool operator==(const QuarticTransform& a, const QuarticTransform& b) {
  return a.mu == b.mu && a.r == b.r && a.m == b.m;
}
inline bool operator==(const CubicTransform& a, const CubicTransform& b) {
  return a.mu == b.mu && a.m == b.m;
}
inline bool operator==(const QuadricPairTransform& a, const QuadricPairTransform& b) {
  return a.m == b.m && a.n == b.n;
}
inline bool operator==(const WeierstrassTransform& a, const WeierstrassTransform& b) {
  return a.u == b.u && a.r == b.r && a.s == b.s && a.t == b.t;
}

// Every rational entry of a transformation, for integrality checks.
inline std::vector<Rat> entries(const Transformation& g) {
  std::vector<Rat> out;
  auto push = [&](const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  };
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, WeierstrassTransform>) {
          out = {t.u, t.r, t.s, t.t};
        } else if constexpr (std::is_same_v<T, QuarticTransform>) {
          out = {t.mu, t.r[0], t.r[1], t.r[2]};
          push(t.m);
        } else if constexpr (std::is_same_v<T, CubicTransform>) {
          out = {t.mu};
          push(t.m);
        } else {
          push(t.m);
          push(t.n);
        }
      },
      g.v);
  return out;
}

struct IntegralityReport {
  bool is_integral = true;
  std::vector<size_t> offending;
  std::vector<std::string> offending_names;
};

inline IntegralityReport integrality_impl(const GenusOneEquation& e, const LocalContext* ctx) {
  IntegralityReport rep;
  const auto& names = coefficient_names(e.degree);
  for (size_t i = 0; i < e.coeffs.size(); ++i) {
    bool ok = ctx ? valuation(e.coeffs[i], *ctx) >= 0 : is_integer(e.coeffs[i]);
    if (!ok) {
      rep.offending.push_back(i);
      rep.offending_names.push_back(names[i]);
    }
  }
  rep.is_integral = rep.offending.empty();
  return rep;
}

// Global mode: integer coefficients.
inline IntegralityReport integrality(const GenusOneEquation& e) { return integrality_impl(e, nullptr); }
// Local mode: p-integral coefficients.
inline IntegralityReport integrality(const GenusOneEquation& e, const LocalContext& ctx) {
  return integrality_impl(e, &ctx);
}

inline bool is_integral(const GenusOneEquation& e, const LocalContext& ctx) {
  for (auto& c : e.coeffs)
    if (valuation(c, ctx) < 0) return false;
  return true;
}
inline bool is_integral(const GenusOneEquation& e) {
  for (auto& c : e.coeffs)
    if (!is_integer(c)) return false;
  return true;
}

}  // namespace g1min
