#pragma once

// Guided search and the minimisation drivers; included from minimise.hpp.

namespace g1min {
namespace detail {

// Largest p-power division after substituting v M, with the best y-shift in degree 2.
inline Transformation divide_deg2(const GenusOneEquation& e, const RatMatrix& m, const LocalContext& ctx) {
  MultiPoly g1 = quartic_g(e).substitute(m), f1 = quartic_f(e).substitute(m);
  auto gc = coeffs_from(g1, binary_quadratic_monomials());
  auto score = [&](const std::array<Rat, 3>& r) {
    MultiPoly rr = binary_quadratic(r);
    Valuation vg = poly_valuation(g1 + Rat(2) * rr, ctx);
    Valuation vf = poly_valuation(f1 - g1 * rr - rr * rr, ctx);
    long a = vg.is_infinite() ? 1000 : vg.value();
    long b = vf.value() / 2;
    return std::min(a, b);
  };
  QuarticTransform best;
  best.m = m;
  long best_e = -1;
  if (ctx.p() != 2) {
    best.r = {-gc[0] / 2, -gc[1] / 2, -gc[2] / 2};
    best_e = score(best.r);
  } else {
    for (long k = 0; k < 64; ++k) {
      std::array<Rat, 3> r{Rat(k % 4), Rat((k / 4) % 4), Rat(k / 16)};
      long s = score(r);
      if (s > best_e) {
        best_e = s;
        best.r = r;
      }
    }
  }
  best.mu = ctx.rpow(-best_e);
  return best;
}

inline Transformation divide_deg3(const GenusOneEquation& e, const RatMatrix& m, const LocalContext& ctx) {
  Valuation v = poly_valuation(cubic_poly(e).substitute(m), ctx);
  return CubicTransform{ctx.rpow(-v.value()), m};
}

// Pencil operations making the two reductions independent, then division.
inline Transformation divide_deg4(const GenusOneEquation& e, const RatMatrix& n, const LocalContext& ctx) {
  std::array<MultiPoly, 2> q{quadric_f(e).substitute(n), quadric_g(e).substitute(n)};
  RatMatrix m = rat_identity(2);
  for (int iter = 0; iter < 256; ++iter) {
    long va = poly_valuation(q[0], ctx).value(), vb = poly_valuation(q[1], ctx).value();
    if (va > vb) {
      std::swap(q[0], q[1]);
      m.swap_rows(0, 1);
      std::swap(va, vb);
    }
    FpPoly a = reduce_mod_p(ctx.rpow(-va) * q[0], ctx), b = reduce_mod_p(ctx.rpow(-vb) * q[1], ctx);
    // b = lambda a ?
    const auto& lead = *a.terms().begin();
    Fp lam = b.coeff(lead.first) / lead.second;
    if (!(b - lam * a).is_zero()) break;
    Rat c = Rat(lam.v) * ctx.rpow(vb - va);
    q[1] = q[1] - c * q[0];
    for (int j = 0; j < 2; ++j) m(1, j) -= c * m(0, j);
  }
  long va = poly_valuation(q[0], ctx).value(), vb = poly_valuation(q[1], ctx).value();
  return QuadricPairTransform{rat_diag({ctx.rpow(-va), ctx.rpow(-vb)}) * m, n};
}

inline Transformation divide_after(const GenusOneEquation& e, const RatMatrix& m, const LocalContext& ctx) {
  switch (e.degree) {
    case 2: return divide_deg2(e, m, ctx);
    case 3: return divide_deg3(e, m, ctx);
    default: return divide_deg4(e, m, ctx);
  }
}

struct Candidate {
  std::string tag;
  Transformation g;
};

// Keep the subspace spanned by the rows, scale its complement by p.
inline RatMatrix blow_up_matrix(const std::vector<FpVec>& rows, int n, const LocalContext& ctx) {
  FpMatrix u = complete_rows(rows, n, ctx.p());
  std::vector<Rat> d(n, Rat(ctx.p()));
  for (size_t i = 0; i < rows.size(); ++i) d[i] = 1;
  return rat_diag(d) * lift(u);
}

inline std::vector<FpVec> subspace_points(const std::vector<FpVec>& basis, long p) {
  std::vector<FpVec> out;
  if (basis.empty()) return out;
  int n = static_cast<int>(basis[0].size());
  for (const auto& c : projective_points(static_cast<int>(basis.size()), p)) {
    FpVec v(n, Fp(0, p));
    for (size_t k = 0; k < basis.size(); ++k)
      for (int j = 0; j < n; ++j) v[j] += c[k] * basis[k][j];
    out.push_back(v);
  }
  return out;
}

inline std::vector<FpVec> hyperplane_basis(const FpVec& l) {
  FpMatrix m = rows_matrix({l}, static_cast<int>(l.size()), l[0].p);
  return m.kernel();
}

inline std::vector<Candidate> elementary_moves(const GenusOneEquation& e, const LocalContext& ctx,
                                               const Options& opt) {
  std::vector<Candidate> out;
  long p = ctx.p();
  int n = e.degree;
  if (n == 1) {
    if (auto w = weierstrass_minimising_move(e, ctx)) out.push_back({"weierstrass", *w});
    return out;
  }
  if (auto mv = nonminimal_step(e, ctx, opt)) out.push_back({mv->tag, mv->transform});
  std::string pure = "search";
  if (n == 4) {
    FiberReport screen;
    FpPoly f = reduce_mod_p(quadric_f(e), ctx), g = reduce_mod_p(quadric_g(e), ctx);
    if (screen_deg4(e, f, g, nullptr, screen) && screen.cls.kind == FiberKind::CommonFactor) pure = "common-factor";
  }
  out.push_back({pure, divide_after(e, rat_identity(n), ctx)});
  std::vector<std::pair<std::string, std::vector<FpVec>>> subspaces;
  if (n == 2) {
    for (const auto& pt : projective_points(2, p)) subspaces.push_back({"search", {pt}});
  } else if (n == 3) {
    FpPoly f = reduce_mod_p(cubic_poly(e), ctx);
    if (!f.is_zero()) {
      for (const auto& pt : projective_points(3, p))
        if (is_singular_point(f, pt)) subspaces.push_back({"search", {pt}});
      for (const auto& l : projective_points(3, p)) {
        auto q = divide_by_linear(f, l);
        if (q && divide_by_linear(*q, l)) subspaces.push_back({"search", hyperplane_basis(l)});
      }
    }
  } else {
    FpPoly f = reduce_mod_p(quadric_f(e), ctx), g = reduce_mod_p(quadric_g(e), ctx);
    auto rad = common_radical(f, g);
    for (const auto& pt : subspace_points(rad, p)) subspaces.push_back({"search", {pt}});
    if (rad.size() == 2) subspaces.push_back({"search", rad});
    FiberReport rep;
    try {
      rep = classify_fiber(e, ctx, opt);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::UnsupportedResidueField) throw;
    }
    for (const auto& comp : rep.components) {
      if (comp.row.kind == FiberKind::DoubleConic) continue;
      FpMatrix nb = reduce(comp.position.transform.as<QuadricPairTransform>().n, ctx);
      FpVec r2(4, Fp(0, p)), r3(4, Fp(0, p));
      for (int j = 0; j < 4; ++j) {
        r2[j] = nb(2, j);
        r3[j] = nb(3, j);
      }
      subspaces.push_back({"search", {r2, r3}});
    }
    for (const auto& l : rep.common_factors) subspaces.push_back({"common-factor", hyperplane_basis(l)});
    // every line and point of the fibre, for fibres with no multiple component
    FastQuadric qf(f), qg(g);
    std::vector<FpVec> z;
    for (const auto& v : projective_points(4, p))
      if (qf.eval(v) == 0 && qg.eval(v) == 0) z.push_back(v);
    if (z.size() <= 8 * static_cast<size_t>(p + 1)) {
      for (const auto& [u, w] : fiber_lines(z, qf, qg)) subspaces.push_back({"search", {u, w}});
      for (const auto& v : z) subspaces.push_back({"search", {v}});
    }
  }
  for (const auto& [tag, rows] : subspaces)
    out.push_back({tag, divide_after(e, blow_up_matrix(rows, n, ctx), ctx)});
  return out;
}

inline std::optional<Move> guided_search(const GenusOneEquation& e, const LocalContext& ctx, const Options& opt,
                                         int depth, long need) {
  auto cands = elementary_moves(e, ctx, opt);
  std::vector<std::pair<Candidate, long>> scored;
  for (auto& c : cands) {
    long dv = det_valuation(c.g, ctx);
    if (dv < need && is_integral(apply(c.g, e), ctx)) return Move{c.g, c.tag, ctx.p(), -dv};
    scored.push_back({c, dv});
  }
  if (depth <= 1) return std::nullopt;
  for (auto& [c, dv] : scored) {
    if (dv > 1) continue;
    GenusOneEquation e2 = apply(c.g, e);
    if (e2 == e || !is_integral(e2, ctx)) continue;
    auto sub = guided_search(e2, ctx, opt, depth - 1, need - dv);
    if (sub) {
      Transformation g = compose(sub->transform, c.g);
      return Move{g, sub->tag == "search" ? c.tag : sub->tag, ctx.p(), -det_valuation(g, ctx)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Move> guided_search(const GenusOneEquation& e, const LocalContext& ctx,
                                         const Options& opt = Options::from_env()) {
  return detail::guided_search(e, ctx, opt, opt.depth, 0);
}

inline MinimisationCertificate minimise_local(const GenusOneEquation& e, const LocalContext& ctx,
                                              const Options& opt = Options::from_env()) {
  if (e.degree < 1 || e.degree > 4) throw Error(ErrorCode::DegreeMismatch, "degree must be 1..4");
  if (!is_integral(e, ctx)) throw Error(ErrorCode::NonIntegralCoefficient, "equation not integral at p");
  if (discriminant(e) == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  MinimisationCertificate cert;
  cert.prime = ctx.p();
  cert.input = e;
  cert.total = identity_transform(e.degree);
  bool global_input = is_integral(e);
  bool fiber_ok = e.degree == 1 || ctx.p() <= opt.prime_bound;
  GenusOneEquation cur = e;
  cert.disc_valuations.push_back(valuation(discriminant(cur), ctx).value());
  long lvl = level(cur, ctx).value;
  cert.initial_level = lvl;
  if (e.degree == 4 && fiber_ok) cert.screen = reduction_screen(cur, ctx, opt);
  while (lvl > 0 && fiber_ok) {
    auto step = nonminimal_step(cur, ctx, opt);
    if (!step && e.degree > 1) step = guided_search(cur, ctx, opt);
    if (!step) break;
    Transformation g = step->transform;
    if (!detail::is_p_global(g, ctx)) {
      Transformation gg = globalize(g, ctx);
      GenusOneEquation next = apply(gg, cur);
      if (is_integral(next, ctx) && (!global_input || is_integral(next)) && det_valuation(gg, ctx) == -step->levels)
        g = gg;
    }
    cur = apply(g, cur);
    cert.moves.push_back(Move{g, step->tag, ctx.p(), step->levels});
    cert.total = compose(g, cert.total);
    cert.disc_valuations.push_back(valuation(discriminant(cur), ctx).value());
    lvl = level(cur, ctx).value;
  }
  cert.output = cur;
  cert.final_level = lvl;
  bool input_factor = cert.screen && cert.screen->kind == FiberKind::CommonFactor;
  bool output_screened = e.degree == 4 && fiber_ok && reduction_screen(cur, ctx, opt).has_value();
  if (lvl == 0 && !output_screened)
    cert.status = MinimalityStatus::MinimalCertified;
  else if (!cert.moves.empty() || input_factor)
    cert.status = MinimalityStatus::NotMinimalDetected;
  else
    cert.status = MinimalityStatus::MinimalNoCertificate;
  if (!cert.moves.empty() || input_factor)
    cert.minimal = Tristate::False;
  else
    cert.minimal = cert.status == MinimalityStatus::MinimalCertified ? Tristate::True : Tristate::Unknown;
  return cert;
}

inline std::pair<Tristate, MinimisationCertificate> is_minimal(const GenusOneEquation& e, const LocalContext& ctx,
                                                               const Options& opt = Options::from_env()) {
  auto cert = minimise_local(e, ctx, opt);
  return {cert.minimal, cert};
}

inline GeometricStatus geometric_status(const MinimisationCertificate& cert, const NormalityVerdict& v) {
  if (cert.minimal == Tristate::False) return GeometricStatus::NotGeometricallyMinimal;
  if (cert.status == MinimalityStatus::MinimalCertified && cert.moves.empty() && v.normal)
    return GeometricStatus::GeometricallyMinimal;
  return GeometricStatus::Unknown;
}

inline MinimisationCertificate minimise_global(const GenusOneEquation& e, const Options& opt = Options::from_env()) {
  if (e.degree < 1 || e.degree > 4) throw Error(ErrorCode::DegreeMismatch, "degree must be 1..4");
  if (!is_integral(e)) throw Error(ErrorCode::NonIntegralCoefficient, "equation not integral");
  Rat d = discriminant(e);
  if (d == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  MinimisationCertificate cert;
  cert.input = e;
  cert.total = identity_transform(e.degree);
  GenusOneEquation cur = e;
  bool all = true, any_detected = false;
  for (long p : primes_with_twelfth_power(d.get_num())) {
    LocalContext ctx(p);
    auto local = minimise_local(cur, ctx, opt);
    for (const auto& mv : local.moves)
      if (!detail::is_p_global(mv.transform, ctx))
        throw Error(ErrorCode::DerivationFailed, "move at p = " + std::to_string(p) + " not in Z[1/p]");
    cur = local.output;
    cert.total = compose(local.total, cert.total);
    for (const auto& mv : local.moves) cert.moves.push_back(mv);
    all = all && local.status == MinimalityStatus::MinimalCertified;
    any_detected = any_detected || local.status == MinimalityStatus::NotMinimalDetected;
    cert.final_level += local.final_level;
    cert.initial_level += local.initial_level;
    cert.locals.push_back(std::move(local));
  }
  cert.output = cur;
  cert.status = all ? MinimalityStatus::MinimalCertified
                    : any_detected ? MinimalityStatus::NotMinimalDetected : MinimalityStatus::MinimalNoCertificate;
  cert.minimal = !cert.moves.empty() ? Tristate::False : all ? Tristate::True : Tristate::Unknown;
  return cert;
}

}  // namespace g1min
