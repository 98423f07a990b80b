#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g1min/arith.hpp"
#include "g1min/matrix.hpp"

namespace g1min {

constexpr int kMaxVars = 6;
using Exponents = std::array<std::uint8_t, kMaxVars>;

inline Exponents exps(std::initializer_list<int> e) {
  Exponents r{};
  int i = 0;
  for (int x : e) r[i++] = static_cast<std::uint8_t>(x);
  return r;
}

// Sparse polynomial over a field in a fixed number of variables.
// Zero coefficients are never stored.
template <class C>
class Poly {
 public:
  using Terms = std::map<Exponents, C>;

  Poly() = default;
  Poly(int nvars, const C& zero) : n_(nvars), zero_(zero) {
    if (nvars > kMaxVars) throw Error(ErrorCode::DimensionMismatch, "too many variables");
  }

  static Poly constant(int nvars, const C& c, const C& zero) {
    Poly f(nvars, zero);
    f.add_term(Exponents{}, c);
    return f;
  }
  static Poly variable(int nvars, int i, const C& one, const C& zero) {
    Poly f(nvars, zero);
    Exponents e{};
    e[i] = 1;
    f.add_term(e, one);
    return f;
  }

  int nvars() const { return n_; }
  const C& zero() const { return zero_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  C coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? zero_ : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    if (g1min::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (g1min::is_zero(it->second)) t_.erase(it);
    }
  }
  void set_coeff(const Exponents& e, const C& c) {
    t_.erase(e);
    add_term(e, c);
  }

  int total_degree() const {
    int d = -1;
    for (auto& [e, c] : t_) {
      int s = 0;
      for (int i = 0; i < n_; ++i) s += e[i];
      d = std::max(d, s);
    }
    return d;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  Poly& operator+=(const Poly& b) {
    check(b);
    for (auto& [e, c] : b.t_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    check(b);
    for (auto& [e, c] : b.t_) add_term(e, zero_ - c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(a.n_, a.zero_) - a; }
  friend Poly operator*(const C& s, const Poly& a) {
    Poly r(a.n_, a.zero_);
    if (g1min::is_zero(s)) return r;
    for (auto& [e, c] : a.t_) r.add_term(e, s * c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.n_, a.zero_);
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Exponents e{};
        for (int i = 0; i < a.n_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  C evaluate(const std::vector<C>& x) const {
    if (static_cast<int>(x.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "evaluate");
    C acc = zero_;
    for (auto& [e, c] : t_) {
      C term = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * x[i];
      acc += term;
    }
    return acc;
  }

  // f(v M) for the row vector v of variables: x_j becomes sum_i v_i M(i,j).
  // Hence substitute(substitute(f, A), B) == substitute(f, B * A).
  Poly substitute(const Matrix<C>& m) const {
    if (m.rows() != n_ || m.cols() != n_)
      throw Error(ErrorCode::DimensionMismatch, "substitute_linear");
    C one = m.one_like();
    std::vector<Poly> lin(n_, Poly(n_, zero_));
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) {
        Exponents e{};
        e[i] = 1;
        lin[j].add_term(e, m(i, j));
      }
    int deg = std::max(total_degree(), 0);
    std::vector<std::vector<Poly>> pw(n_);
    for (int j = 0; j < n_; ++j) {
      pw[j].push_back(constant(n_, one, zero_));
      for (int k = 1; k <= deg; ++k) pw[j].push_back(pw[j].back() * lin[j]);
    }
    Poly r(n_, zero_);
    for (auto& [e, c] : t_) {
      Poly term = constant(n_, c, zero_);
      for (int j = 0; j < n_; ++j)
        if (e[j]) term = term * pw[j][e[j]];
      r += term;
    }
    return r;
  }

 private:
  void check(const Poly& b) const {
    if (b.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "variable count");
  }

  int n_ = 0;
  C zero_{};
  Terms t_;
};

using MultiPoly = Poly<Rat>;
using FpPoly = Poly<Fp>;

inline MultiPoly rat_poly(int nvars) { return MultiPoly(nvars, Rat(0)); }
inline MultiPoly rat_var(int nvars, int i) { return MultiPoly::variable(nvars, i, Rat(1), Rat(0)); }
inline MultiPoly rat_const(int nvars, const Rat& c) { return MultiPoly::constant(nvars, c, Rat(0)); }
inline FpPoly fp_poly(int nvars, long p) { return FpPoly(nvars, Fp(0, p)); }

inline MultiPoly substitute_linear(const MultiPoly& f, const RatMatrix& m) { return f.substitute(m); }
inline FpPoly substitute_linear(const FpPoly& f, const FpMatrix& m) { return f.substitute(m); }

inline Valuation poly_valuation(const MultiPoly& f, const LocalContext& ctx) {
  Valuation v = Valuation::infinity();
  for (auto& [e, c] : f.terms()) v = min(v, valuation(c, ctx));
  return v;
}

inline FpPoly reduce_mod_p(const MultiPoly& f, const LocalContext& ctx) {
  FpPoly r = fp_poly(f.nvars(), ctx.p());
  for (auto& [e, c] : f.terms()) {
    if (valuation(c, ctx) < 0)
      throw Error(ErrorCode::NonIntegralCoefficient, "coefficient " + to_string(c));
    r.add_term(e, Fp(residue_small(c, ctx), ctx.p()));
  }
  return r;
}

// Lift with coefficients in [0, p).
inline MultiPoly lift(const FpPoly& f) {
  MultiPoly r = rat_poly(f.nvars());
  for (auto& [e, c] : f.terms()) r.add_term(e, Rat(c.v));
  return r;
}

inline Exponents unit_exponent(int i) {
  Exponents e{};
  e[i] = 1;
  return e;
}

// Divide f by the linear form sum_i l[i] x_i when it divides exactly.
inline std::optional<FpPoly> divide_by_linear(const FpPoly& f, const std::vector<Fp>& l) {
  int n = f.nvars();
  long p = f.zero().p;
  int k = -1;
  for (int i = 0; i < n; ++i)
    if (!l[i].is_zero()) { k = i; break; }
  if (k < 0) return std::nullopt;
  FpMatrix b = fp_identity(n, p);
  for (int i = 0; i < n; ++i) b(i, k) = l[i];
  FpMatrix a = *b.inverse();
  // fa(v) = f(vA) and the form becomes v_k
  FpPoly fa = f.substitute(a);
  FpPoly q = fp_poly(n, p);
  for (auto& [e, c] : fa.terms()) {
    if (e[k] == 0) return std::nullopt;
    Exponents e2 = e;
    e2[k]--;
    q.add_term(e2, c);
  }
  return q.substitute(b);
}

inline std::string exponent_name(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

template <class C>
std::string to_string(const Poly<C>& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string c;
    if constexpr (std::is_same_v<C, Fp>) {
      c = std::to_string(it->second.v);
    } else {
      c = to_string(it->second);
    }
    if (!s.empty()) s += " + ";
    s += "(" + c + ")*" + exponent_name(it->first, names);
  }
  return s;
}

}  // namespace g1min
