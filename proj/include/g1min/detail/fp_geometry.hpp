#pragma once

#include <array>
#include <vector>

#include "g1min/models.hpp"

namespace g1min::detail {

using FpVec = std::vector<Fp>;

// Points of P^{n-1}(F_p), first nonzero coordinate 1.
inline std::vector<FpVec> projective_points(int n, long p) {
  std::vector<FpVec> out;
  for (int lead = 0; lead < n; ++lead) {
    long count = 1;
    for (int i = lead + 1; i < n; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      FpVec v(n, Fp(0, p));
      v[lead] = Fp(1, p);
      long t = c;
      for (int i = lead + 1; i < n; ++i) {
        v[i] = Fp(t % p, p);
        t /= p;
      }
      out.push_back(v);
    }
  }
  return out;
}

inline FpMatrix rows_matrix(const std::vector<FpVec>& rows, int n, long p) {
  FpMatrix m = fp_zero(static_cast<int>(rows.size()), n, p);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

// Invertible n x n matrix whose first rows are the given independent rows.
inline FpMatrix complete_rows(const std::vector<FpVec>& rows, int n, long p) {
  std::vector<FpVec> acc = rows;
  for (int i = 0; i < n && static_cast<int>(acc.size()) < n; ++i) {
    FpVec e(n, Fp(0, p));
    e[i] = Fp(1, p);
    acc.push_back(e);
    if (rows_matrix(acc, n, p).rank() != static_cast<int>(acc.size())) acc.pop_back();
  }
  if (static_cast<int>(acc.size()) != n) throw Error(ErrorCode::DimensionMismatch, "dependent rows");
  return rows_matrix(acc, n, p);
}

// Same, but the given rows go last.
inline FpMatrix complete_rows_last(const std::vector<FpVec>& rows, int n, long p) {
  FpMatrix c = complete_rows(rows, n, p);
  int k = static_cast<int>(rows.size());
  FpMatrix out = fp_zero(n, n, p);
  for (int i = 0; i < n; ++i) {
    int src = i < n - k ? i + k : i - (n - k);
    for (int j = 0; j < n; ++j) out(i, j) = c(src, j);
  }
  return out;
}

// Canonical key of the row space of the given vectors.
inline std::vector<long> span_key(const std::vector<FpVec>& rows, int n, long p) {
  FpMatrix m = rows_matrix(rows, n, p);
  m.rref();
  std::vector<long> key;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) key.push_back(m(i, j).v);
  return key;
}

inline FpPoly partial(const FpPoly& f, int i) {
  FpPoly r(f.nvars(), f.zero());
  for (auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponents e2 = e;
    e2[i]--;
    r.add_term(e2, Fp(e[i], c.p) * c);
  }
  return r;
}

inline bool is_singular_point(const FpPoly& f, const FpVec& v) {
  if (!f.evaluate(v).is_zero()) return false;
  for (int i = 0; i < f.nvars(); ++i)
    if (!partial(f, i).evaluate(v).is_zero()) return false;
  return true;
}

// Quadric in four variables with coefficients stored as longs for fast evaluation.
struct FastQuadric {
  std::array<long, 10> c{};
  long p = 2;
  explicit FastQuadric(const FpPoly& f) : p(f.zero().p) {
    const auto& mons = quadric_monomials();
    for (int k = 0; k < 10; ++k) c[k] = f.coeff(mons[k]).v;
  }
  long eval(const FpVec& v) const {
    static const int ii[10] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
    static const int jj[10] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};
    long s = 0;
    for (int k = 0; k < 10; ++k)
      if (c[k]) s = (s + c[k] * ((v[ii[k]].v * v[jj[k]].v) % p)) % p;
    return s;
  }
};

// Coefficient of x_i x_j (i may equal j) in a quadric.
inline Fp quad_coeff(const FpPoly& f, int i, int j) {
  Exponents e{};
  e[i]++;
  e[j]++;
  return f.coeff(e);
}

// Matrix of the bilinear form H(v + w) - H(v) - H(w).
inline FpMatrix polar_matrix(const FpPoly& h) {
  long p = h.zero().p;
  FpMatrix b = fp_zero(4, 4, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = i == j ? Fp(2, p) * quad_coeff(h, i, i) : quad_coeff(h, i, j);
  return b;
}

// Symmetric Gram matrix, odd p only.
inline FpMatrix gram_matrix(const FpPoly& h) {
  long p = h.zero().p;
  Fp half = Fp(2, p).inv();
  FpMatrix b = fp_zero(4, 4, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = i == j ? quad_coeff(h, i, i) : half * quad_coeff(h, i, j);
  return b;
}

// A linear form l with h = c l^2, if h is a nonzero square times a constant.
inline std::optional<FpVec> square_root_form(const FpPoly& h) {
  if (h.is_zero()) return std::nullopt;
  long p = h.zero().p;
  if (p == 2) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!quad_coeff(h, i, j).is_zero()) return std::nullopt;
    FpVec l(4, Fp(0, p));
    for (int i = 0; i < 4; ++i) l[i] = quad_coeff(h, i, i);
    return l;
  }
  FpMatrix g = gram_matrix(h);
  if (g.rank() != 1) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    FpVec row(4, Fp(0, p));
    bool nz = false;
    for (int j = 0; j < 4; ++j) {
      row[j] = g(i, j);
      nz = nz || !row[j].is_zero();
    }
    if (nz) return row;
  }
  return std::nullopt;
}

// Matrix S with l(v S) = v_target; l nonzero.
inline FpMatrix form_to_coordinate(const FpVec& l, int target) {
  int n = static_cast<int>(l.size());
  long p = l[0].p;
  int k = -1;
  for (int i = 0; i < n; ++i)
    if (!l[i].is_zero()) { k = i; break; }
  // columns: l at position target, unit vectors e_j (j != k) elsewhere
  FpMatrix b = fp_zero(n, n, p);
  std::vector<int> units;
  for (int j = 0; j < n; ++j)
    if (j != k) units.push_back(j);
  int u = 0;
  for (int col = 0; col < n; ++col) {
    if (col == target) {
      for (int i = 0; i < n; ++i) b(i, col) = l[i];
    } else {
      b(units[u++], col) = Fp(1, p);
    }
  }
  return *b.inverse();
}

}  // namespace g1min::detail
