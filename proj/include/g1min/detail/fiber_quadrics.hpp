#pragma once

// Degree-4 part of fiber.hpp.

namespace g1min {
namespace detail {

inline FpMatrix fp2(long a, long b, long c, long d, long p) {
  FpMatrix m = fp_zero(2, 2, p);
  m(0, 0) = Fp(a, p);
  m(0, 1) = Fp(b, p);
  m(1, 0) = Fp(c, p);
  m(1, 1) = Fp(d, p);
  return m;
}

inline FpMatrix block_diag(const FpMatrix& a, const FpMatrix& c) {
  long p = a.zero().p;
  FpMatrix s = fp_zero(4, 4, p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      s(i, j) = a(i, j);
      s(i + 2, j + 2) = c(i, j);
    }
  return s;
}

// Reduced quadric pair together with the accumulated [M, N] over F_p.
struct WorkingPair {
  FpPoly f, g;
  FpMatrix m, n;
  WorkingPair(FpPoly f0, FpPoly g0)
      : f(std::move(f0)), g(std::move(g0)), m(fp_identity(2, f.zero().p)), n(fp_identity(4, f.zero().p)) {}
  long p() const { return f.zero().p; }
  void substitute(const FpMatrix& s) {
    f = f.substitute(s);
    g = g.substitute(s);
    n = s * n;
  }
  void pencil(const FpMatrix& b) {
    FpPoly f2 = b(0, 0) * f + b(0, 1) * g;
    g = b(1, 0) * f + b(1, 1) * g;
    f = f2;
    m = b * m;
  }
  QuadricPairTransform transform() const { return {lift(m), lift(n)}; }
};

inline FpPoly fp_monomial(int i, int j, long c, long p) {
  FpPoly h = fp_poly(4, p);
  Exponents e{};
  e[i]++;
  e[j]++;
  h.add_term(e, Fp(c, p));
  return h;
}

// Entries P(i, j) = coefficient of x_{i+1} x_{j+3}.
inline FpMatrix linear_part(const FpPoly& h) {
  FpMatrix m = fp_zero(2, 2, h.zero().p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = quad_coeff(h, i, j + 2);
  return m;
}

inline bool is_zero_matrix(const FpMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// R, K invertible with R P K = diag(1, d), d in {0, 1}; P nonzero.
inline std::pair<FpMatrix, FpMatrix> rank_normal_form(FpMatrix P) {
  long p = P.zero().p;
  FpMatrix R = fp_identity(2, p), K = fp_identity(2, p);
  auto rowop = [&](const FpMatrix& e) { P = e * P; R = e * R; };
  auto colop = [&](const FpMatrix& e) { P = P * e; K = K * e; };
  int pi = -1, pj = -1;
  for (int i = 0; i < 2 && pi < 0; ++i)
    for (int j = 0; j < 2; ++j)
      if (!P(i, j).is_zero()) { pi = i; pj = j; break; }
  if (pi < 0) return {R, K};
  if (pi == 1) rowop(fp2(0, 1, 1, 0, p));
  if (pj == 1) colop(fp2(0, 1, 1, 0, p));
  rowop(fp2(P(0, 0).inv().v, 0, 0, 1, p));
  rowop(fp2(1, 0, (-P(1, 0)).v, 1, p));
  colop(fp2(1, (-P(0, 1)).v, 0, 1, p));
  if (!P(1, 1).is_zero()) rowop(fp2(1, 0, 0, P(1, 1).inv().v, p));
  return {R, K};
}

inline int binary_rank(Fp q11, Fp q12, Fp q22) {
  if (q11.is_zero() && q12.is_zero() && q22.is_zero()) return 0;
  long p = q11.p;
  if (p == 2) return q12.is_zero() ? 1 : 2;
  return (q12 * q12 - Fp(4, p) * q11 * q22).is_zero() ? 1 : 2;
}

// Line x1 = x2 = 0 multiple with a pencil member in I^2: bring the pair to
// F in Sym^2(x1, x2), G = x1 x3 + mu x2 x4 + q(x1, x2).
inline std::optional<FiberClass> normalise_member_case(WorkingPair& wp) {
  long p = wp.p();
  FpMatrix lf = linear_part(wp.f), lg = linear_part(wp.g);
  if (is_zero_matrix(lf)) {
  } else if (is_zero_matrix(lg)) {
    wp.pencil(fp2(0, 1, 1, 0, p));
  } else {
    int i0 = -1, j0 = -1;
    for (int i = 0; i < 2 && i0 < 0; ++i)
      for (int j = 0; j < 2; ++j)
        if (!lf(i, j).is_zero()) { i0 = i; j0 = j; break; }
    Fp lam = lg(i0, j0) / lf(i0, j0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(lg(i, j) - lam * lf(i, j)).is_zero()) return std::nullopt;
    wp.pencil(fp2((-lam).v, 1, 1, 0, p));
  }
  FpMatrix P = linear_part(wp.g);
  if (is_zero_matrix(P)) return std::nullopt;
  auto [R, K] = rank_normal_form(P);
  wp.substitute(block_diag(R, K.transpose()));
  P = linear_part(wp.g);
  int mu = P(1, 1).is_zero() ? 0 : 1;
  Fp q11 = quad_coeff(wp.f, 0, 0), q12 = quad_coeff(wp.f, 0, 1), q22 = quad_coeff(wp.f, 1, 1);
  int rk = binary_rank(q11, q12, q22);
  if (mu == 1) return FiberClass{rk == 2 ? FiberKind::DoubleLinePlusTwoLines : FiberKind::TwoDoubleLines, 1};
  if (!q22.is_zero()) return FiberClass{rk == 2 ? FiberKind::DoubleLinePlusTwoLines : FiberKind::TwoDoubleLines, 0};
  if (!q12.is_zero()) return FiberClass{FiberKind::TripleLinePlusLine, 0};
  return FiberClass{FiberKind::QuadrupleLine, 0};
}

// Line x1 = x2 = 0 with a common kernel direction: bring the pair to
// x1 x3 = x2^2 + x1 x4 = 0.
inline bool normalise_conic_case(WorkingPair& wp) {
  long p = wp.p();
  FpMatrix lf = linear_part(wp.f), lg = linear_part(wp.g);
  FpMatrix sys = fp_zero(4, 2, p);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      sys(j, i) = lf(i, j);
      sys(2 + j, i) = lg(i, j);
    }
  auto ker = sys.kernel();
  if (ker.size() != 1) return false;
  FpMatrix a = complete_rows_last({ker[0]}, 2, p);
  wp.substitute(block_diag(a, fp_identity(2, p)));
  lf = linear_part(wp.f);
  lg = linear_part(wp.g);
  FpMatrix w = fp2(lf(0, 0).v, lf(0, 1).v, lg(0, 0).v, lg(0, 1).v, p);
  auto winv = w.inverse();
  if (!winv) return false;
  wp.substitute(block_diag(fp_identity(2, p), winv->transpose()));
  FpMatrix s = fp_identity(4, p);
  s(0, 2) = -quad_coeff(wp.f, 0, 0);
  s(1, 2) = -quad_coeff(wp.f, 0, 1);
  s(0, 3) = -quad_coeff(wp.g, 0, 0);
  s(1, 3) = -quad_coeff(wp.g, 0, 1);
  wp.substitute(s);
  if (quad_coeff(wp.g, 1, 1).is_zero()) {
    wp.pencil(fp2(0, 1, 1, 0, p));
    FpMatrix swap = fp_identity(4, p);
    swap(2, 2) = swap(3, 3) = Fp(0, p);
    swap(2, 3) = swap(3, 2) = Fp(1, p);
    wp.substitute(swap);
  }
  Fp c = quad_coeff(wp.f, 1, 1), c2 = quad_coeff(wp.g, 1, 1);
  if (c2.is_zero()) return false;
  if (!c.is_zero()) {
    Fp r = c / c2;
    wp.pencil(fp2(1, (-r).v, 0, 1, p));
    FpMatrix t = fp_identity(4, p);
    t(3, 2) = r;
    wp.substitute(t);
  }
  wp.pencil(fp2(1, 0, 0, c2.inv().v, p));
  FpMatrix t = fp_identity(4, p);
  t(3, 3) = c2;
  wp.substitute(t);
  FpPoly want_f = fp_monomial(0, 2, 1, p);
  FpPoly want_g = fp_monomial(1, 1, 1, p) + fp_monomial(0, 3, 1, p);
  return wp.f == want_f && wp.g == want_g;
}

// Vectors v with B_F(., v) = B_G(., v) = 0 and F(v) = G(v) = 0.
inline std::vector<FpVec> common_radical(const FpPoly& f, const FpPoly& g) {
  long p = f.zero().p;
  FpMatrix bf = polar_matrix(f), bg = polar_matrix(g);
  FpMatrix st = fp_zero(8, 4, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      st(i, j) = bf(i, j);
      st(i + 4, j) = bg(i, j);
    }
  auto ker = st.kernel();
  if (p != 2 || ker.empty()) return ker;
  // both quadrics are additive on the radical
  FpMatrix vals = fp_zero(2, static_cast<int>(ker.size()), p);
  for (size_t k = 0; k < ker.size(); ++k) {
    vals(0, static_cast<int>(k)) = f.evaluate(ker[k]);
    vals(1, static_cast<int>(k)) = g.evaluate(ker[k]);
  }
  std::vector<FpVec> out;
  for (auto& c : vals.kernel()) {
    FpVec v(4, Fp(0, p));
    for (size_t k = 0; k < ker.size(); ++k)
      for (int j = 0; j < 4; ++j) v[j] += c[k] * ker[k][j];
    out.push_back(v);
  }
  return out;
}

// CommonFactor / DegenerateX1X2 screen. Fills rep and returns true on a hit.
inline bool screen_deg4(const GenusOneEquation& e, const FpPoly& f, const FpPoly& g,
                        const std::vector<FpVec>* zero_set, FiberReport& rep) {
  long p = f.zero().p;
  FpMatrix cm = fp_zero(2, 10, p);
  const auto& mons = quadric_monomials();
  for (int k = 0; k < 10; ++k) {
    cm(0, k) = f.coeff(mons[k]);
    cm(1, k) = g.coeff(mons[k]);
  }
  if (cm.rank() < 2) {
    rep.cls = {FiberKind::CommonFactor, 0};
    return true;
  }
  std::vector<FpVec> own;
  if (!zero_set) {
    FastQuadric qf(f), qg(g);
    for (const auto& v : projective_points(4, p))
      if (qf.eval(v) == 0 && qg.eval(v) == 0) own.push_back(v);
    zero_set = &own;
  }
  // a common rational linear factor puts a whole plane into the zero set
  if (static_cast<long>(zero_set->size()) >= p * p + p + 1) {
    for (const auto& l : projective_points(4, p))
      if (divide_by_linear(f, l) && divide_by_linear(g, l)) rep.common_factors.push_back(l);
    if (!rep.common_factors.empty()) {
      rep.cls = {FiberKind::CommonFactor, 0};
      return true;
    }
  }
  auto rad = common_radical(f, g);
  if (rad.size() >= 2) {
    rep.cls = {FiberKind::DegenerateX1X2, 0};
    WorkingPair wp(f, g);
    wp.substitute(complete_rows_last({rad[0], rad[1]}, 4, p));
    rep.position = position_of(wp.transform(), e);
    return true;
  }
  return false;
}

// Lines of P^3(F_p) on which both quadrics vanish, as pairs of spanning points.
inline std::vector<std::pair<FpVec, FpVec>> fiber_lines(const std::vector<FpVec>& z, const FastQuadric& qf,
                                                        const FastQuadric& qg) {
  std::set<std::vector<long>> seen;
  std::vector<std::pair<FpVec, FpVec>> out;
  long p = qf.p;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j) {
      FpVec s(4, Fp(0, p));
      for (int k = 0; k < 4; ++k) s[k] = z[i][k] + z[j][k];
      if (qf.eval(s) != 0 || qg.eval(s) != 0) continue;
      if (seen.insert(span_key({z[i], z[j]}, 4, p)).second) out.emplace_back(z[i], z[j]);
    }
  return out;
}

// det J(x3, x4) for the pair with the line at x1 = x2 = 0.
inline bool jacobian_vanishes(const WorkingPair& wp) {
  FpMatrix a = linear_part(wp.f), b = linear_part(wp.g);
  auto prod = [](Fp u0, Fp u1, Fp v0, Fp v1) { return std::array<Fp, 3>{u0 * v0, u0 * v1 + u1 * v0, u1 * v1}; };
  auto x = prod(a(0, 0), a(0, 1), b(1, 0), b(1, 1));
  auto y = prod(a(1, 0), a(1, 1), b(0, 0), b(0, 1));
  for (int k = 0; k < 3; ++k)
    if (!(x[k] - y[k]).is_zero()) return false;
  return true;
}

// Rank-1 pencil member: bring the pair to x1^2 = x2^2 + x3 x4 = 0 (up to
// x1-multiples in G when p = 2).
inline bool normalise_double_conic(WorkingPair& wp) {
  long p = wp.p();
  std::optional<FpVec> l;
  for (long lam = 0; lam <= p && !l; ++lam) {
    FpMatrix b = lam < p ? fp2(1, lam, 0, 1, p) : fp2(0, 1, 1, 0, p);
    FpPoly h = b(0, 0) * wp.f + b(0, 1) * wp.g;
    l = square_root_form(h);
    if (l) wp.pencil(b);
  }
  if (!l) return false;
  wp.substitute(form_to_coordinate(*l, 0));
  wp.pencil(fp2(quad_coeff(wp.f, 0, 0).inv().v, 0, 0, 1, p));
  wp.pencil(fp2(1, 0, (-quad_coeff(wp.g, 0, 0)).v, 1, p));
  // hyperbolic decomposition of the conic G(0, x2, x3, x4)
  auto c_at = [&](const FpVec& v3) { return wp.g.evaluate({Fp(0, p), v3[0], v3[1], v3[2]}); };
  auto bil = [&](const FpVec& a, const FpVec& b) {
    FpVec s(3, Fp(0, p));
    for (int i = 0; i < 3; ++i) s[i] = a[i] + b[i];
    return c_at(s) - c_at(a) - c_at(b);
  };
  std::vector<FpVec> basis;
  for (int i = 0; i < 3; ++i) {
    FpVec v(3, Fp(0, p));
    v[i] = Fp(1, p);
    basis.push_back(v);
  }
  std::optional<FpVec> v;
  int wi = -1;
  for (const auto& cand : projective_points(3, p)) {
    if (!c_at(cand).is_zero()) continue;
    for (int i = 0; i < 3; ++i)
      if (!bil(cand, basis[i]).is_zero()) { wi = i; break; }
    if (wi >= 0) { v = cand; break; }
  }
  if (!v) return false;
  FpVec w = basis[wi];
  Fp sc = bil(*v, w).inv();
  for (auto& x : w) x *= sc;
  Fp cw = c_at(w);
  for (int i = 0; i < 3; ++i) w[i] -= cw * (*v)[i];
  FpMatrix sys = fp_zero(2, 3, p);
  for (int i = 0; i < 3; ++i) {
    sys(0, i) = bil(*v, basis[i]);
    sys(1, i) = bil(w, basis[i]);
  }
  auto ker = sys.kernel();
  if (ker.size() != 1) return false;
  const FpVec& u = ker[0];
  Fp d = c_at(u);
  if (d.is_zero()) return false;
  FpMatrix s = fp_zero(4, 4, p);
  s(0, 0) = Fp(1, p);
  for (int j = 0; j < 3; ++j) {
    s(1, j + 1) = u[j];
    s(2, j + 1) = (*v)[j];
    s(3, j + 1) = w[j];
  }
  wp.substitute(s);
  wp.pencil(fp2(1, 0, 0, d.inv().v, p));
  FpMatrix t = fp_identity(4, p);
  t(3, 3) = d;
  wp.substitute(t);
  if (p != 2) {
    FpMatrix sh = fp_identity(4, p);
    sh(0, 1) = -quad_coeff(wp.g, 0, 1) / Fp(2, p);
    sh(0, 3) = -quad_coeff(wp.g, 0, 2);
    sh(0, 2) = -quad_coeff(wp.g, 0, 3);
    wp.substitute(sh);
    wp.pencil(fp2(1, 0, (-quad_coeff(wp.g, 0, 0)).v, 1, p));
  }
  return true;
}

inline FiberReport classify_deg4(const GenusOneEquation& e, const LocalContext& ctx) {
  FiberReport rep;
  long p = ctx.p();
  FpPoly f = reduce_mod_p(quadric_f(e), ctx), g = reduce_mod_p(quadric_g(e), ctx);
  FastQuadric qf(f), qg(g);
  std::vector<FpVec> z;
  for (const auto& v : projective_points(4, p))
    if (qf.eval(v) == 0 && qg.eval(v) == 0) z.push_back(v);
  if (screen_deg4(e, f, g, &z, rep)) return rep;

  for (const auto& [u, w] : fiber_lines(z, qf, qg)) {
    WorkingPair wp(f, g);
    wp.substitute(complete_rows_last({u, w}, 4, p));
    if (!jacobian_vanishes(wp)) continue;
    WorkingPair a = wp;
    if (auto row = normalise_member_case(a)) {
      rep.components.push_back({*row, position_of(a.transform(), e)});
      continue;
    }
    WorkingPair b = wp;
    if (normalise_conic_case(b))
      rep.components.push_back({FiberClass{FiberKind::ConicPlusDoubleLine, 0}, position_of(b.transform(), e)});
  }
  if (!rep.components.empty()) {
    rep.cls = rep.components.front().row;
    rep.position = rep.components.front().position;
    return rep;
  }

  WorkingPair dc(f, g);
  bool has_square = false;
  for (long lam = 0; lam <= p && !has_square; ++lam) {
    FpPoly h = lam < p ? f + Fp(lam, p) * g : g;
    has_square = square_root_form(h).has_value();
  }
  if (has_square) {
    if (!normalise_double_conic(dc))
      throw Error(ErrorCode::UnsupportedResidueField, "double component not split over F_p");
    rep.cls = {FiberKind::DoubleConic, 0};
    rep.position = position_of(dc.transform(), e);
    rep.components.push_back({rep.cls, *rep.position});
  }
  return rep;
}

// Binary forms in (x3, x4) of F(0, 0, x3, x4) and G(0, 0, x3, x4).
inline std::array<Rat, 3> tail_form(const GenusOneEquation& e, int which) {
  int o = which * 10;
  return {e.coeffs[o + 7], e.coeffs[o + 8], e.coeffs[o + 9]};
}

inline Valuation min_valuation(const std::vector<Rat>& xs, const LocalContext& ctx) {
  Valuation v = Valuation::infinity();
  for (auto& x : xs) v = min(v, valuation(x, ctx));
  return v;
}

// x4 F(0,0,x3,x4) - x3 G(0,0,x3,x4)
inline std::vector<Rat> conic_line_cubic(const GenusOneEquation& s) {
  auto a = tail_form(s, 0), b = tail_form(s, 1);
  return {-b[0], a[0] - b[1], a[1] - b[2], a[2]};
}

// Coefficients of F(0, x2, x3, x4) - mu G(0, x2, x3, x4).
inline std::vector<Rat> conic_difference(const GenusOneEquation& s, const Rat& mu) {
  std::vector<Rat> out;
  for (int k = 4; k < 10; ++k) out.push_back(s.coeffs[k] - mu * s.coeffs[10 + k]);
  return out;
}

inline std::optional<long> double_conic_multiplier(const GenusOneEquation& s, const LocalContext& ctx) {
  long p = ctx.p();
  for (long mu = 0; mu < p * p; ++mu)
    if (min_valuation(conic_difference(s, Rat(mu)), ctx) >= 2) return mu;
  return std::nullopt;
}

inline NormalityVerdict normality_deg4(const FiberReport& rep, const LocalContext& ctx) {
  NormalityVerdict v;
  switch (rep.cls.kind) {
    case FiberKind::AllMultiplicityOne:
      v.criterion = "reduced fibre";
      return v;
    case FiberKind::CommonFactor:
    case FiberKind::DegenerateX1X2:
      v.normal = false;
      v.criterion = "screen";
      v.witness = fiber_name(rep.cls);
      return v;
    case FiberKind::ConicPlusDoubleLine: {
      const auto& s = rep.position->equation;
      auto c = conic_line_cubic(s);
      Valuation val = min_valuation(c, ctx);
      if (val < 1) throw Error(ErrorCode::PositionViolation, "line x1 = x2 = 0 not in the fibre");
      v.criterion = "v(x4 F(0,0,x3,x4) - x3 G(0,0,x3,x4)) = 1";
      v.normal = val == 1;
      std::ostringstream os;
      os << "valuation " << val;
      v.witness = os.str();
      return v;
    }
    case FiberKind::DoubleConic: {
      v.criterion = "no mu with F(0,x2,x3,x4) = mu G(0,x2,x3,x4) mod p^2";
      auto mu = double_conic_multiplier(rep.position->equation, ctx);
      v.normal = !mu;
      if (mu) v.witness = "mu = " + std::to_string(*mu);
      return v;
    }
    default: {
      v.criterion = "v(F(0,0,x3,x4)) = 1 at every multiple line";
      for (size_t i = 0; i < rep.components.size(); ++i) {
        auto t = tail_form(rep.components[i].position.equation, 0);
        Valuation val = min_valuation({t[0], t[1], t[2]}, ctx);
        if (val < 1) throw Error(ErrorCode::PositionViolation, "member not in I^2 modulo p");
        if (val > 1) {
          v.normal = false;
          v.conclusive = false;
          v.witness = "line " + std::to_string(i) + " not proved normal";
          return v;
        }
      }
      return v;
    }
  }
}

}  // namespace detail

inline FiberReport classify_fiber(const GenusOneEquation& e, const LocalContext& ctx,
                                  const Options& opt = Options::from_env()) {
  detail::check_input(e, ctx);
  detail::check_prime(ctx, opt);
  switch (e.degree) {
    case 2: return detail::classify_deg2(e, ctx);
    case 3: return detail::classify_deg3(e, ctx);
    default: return detail::classify_deg4(e, ctx);
  }
}

inline NormalityVerdict normality(const GenusOneEquation& e, const LocalContext& ctx,
                                  const Options& opt = Options::from_env()) {
  FiberReport rep = classify_fiber(e, ctx, opt);
  switch (e.degree) {
    case 2: return detail::normality_deg2(e, rep, ctx);
    case 3: return detail::normality_deg3(rep, ctx);
    default: return detail::normality_deg4(rep, ctx);
  }
}

// CommonFactor or DegenerateX1X2 when the reduction of a quadric pair has one.
inline std::optional<FiberClass> reduction_screen(const GenusOneEquation& e, const LocalContext& ctx,
                                                const Options& opt = Options::from_env()) {
  if (e.degree != 4) throw Error(ErrorCode::DegreeMismatch, "screen needs degree 4");
  detail::check_input(e, ctx);
  detail::check_prime(ctx, opt);
  FpPoly f = reduce_mod_p(quadric_f(e), ctx), g = reduce_mod_p(quadric_g(e), ctx);
  FiberReport rep;
  if (detail::screen_deg4(e, f, g, nullptr, rep)) return rep.cls;
  return std::nullopt;
}

}  // namespace g1min
