#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <utility>

#include "g1min/detail/aronhold_tables.hpp"
#include "g1min/models.hpp"

namespace g1min {

struct InvariantTriple {
  Rat c4, c6, disc;
  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

using BinaryQuartic = std::array<Rat, 5>;  // a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4

inline std::pair<Rat, Rat> quartic_IJ(const BinaryQuartic& q) {
  const Rat &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  Rat I = 12 * a * e - 3 * b * d + c * c;
  Rat J = 72 * a * c * e - 27 * a * d * d - 27 * e * b * b + 9 * b * c * d - 2 * c * c * c;
  return {I, J};
}

// R = g^2 + 4f.
inline BinaryQuartic completed_quartic(const GenusOneEquation& e) {
  if (e.degree != 2) throw Error(ErrorCode::DegreeMismatch, "completed_quartic needs degree 2");
  MultiPoly g = quartic_g(e);
  MultiPoly r = g * g + Rat(4) * quartic_f(e);
  auto c = coeffs_from(r, binary_quartic_monomials());
  return {c[0], c[1], c[2], c[3], c[4]};
}

template <size_t N>
Rat eval_cubic_table(const std::array<detail::CubicTerm, N>& table, const std::vector<Rat>& c) {
  Rat acc = 0;
  for (const auto& term : table) {
    Rat t = term.coef;
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < term.e[i]; ++k) t *= c[i];
    acc += t;
  }
  return acc;
}

inline std::pair<Rat, Rat> aronhold_ST(const GenusOneEquation& e) {
  if (e.degree != 3) throw Error(ErrorCode::DegreeMismatch, "aronhold_ST needs degree 3");
  return {eval_cubic_table(detail::kAronholdS, e.coeffs), eval_cubic_table(detail::kAronholdT, e.coeffs)};
}

// Symmetric matrix of a quadric in x1..x4; off-diagonal entries are half the coefficients.
inline RatMatrix quadric_matrix(const Rat* c) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
  RatMatrix m = rat_zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = i == j ? c[idx[i][j]] : Rat(c[idx[i][j]] / 2);
  return m;
}

// Q(x, z) = det(x A + z B).
inline BinaryQuartic characteristic_quartic(const GenusOneEquation& e) {
  if (e.degree != 4) throw Error(ErrorCode::DegreeMismatch, "characteristic_quartic needs degree 4");
  RatMatrix a = quadric_matrix(e.coeffs.data());
  RatMatrix b = quadric_matrix(e.coeffs.data() + 10);
  // Q(1, k) = sum_i q_i k^i for k = 0..4; solve the Vandermonde system.
  RatMatrix vander = rat_zero(5, 5);
  std::vector<Rat> values(5);
  for (int k = 0; k < 5; ++k) {
    Rat pw = 1;
    for (int i = 0; i < 5; ++i) {
      vander(k, i) = pw;
      pw *= k;
    }
    RatMatrix pencil = rat_zero(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pencil(i, j) = a(i, j) + Rat(k) * b(i, j);
    values[k] = pencil.det();
  }
  RatMatrix vinv = rat_inverse(vander);
  BinaryQuartic q;
  for (int i = 0; i < 5; ++i) {
    Rat s = 0;
    for (int k = 0; k < 5; ++k) s += vinv(i, k) * values[k];
    q[i] = s;
  }
  return q;
}

// Multipliers attaching the kernel invariants of each degree to (c4, c6):
//   degree 2: kernels I(R), J(R) of the completed quartic
//   degree 3: Aronhold S, T
//   degree 4: I(Q), J(Q) of the characteristic quartic
struct ScalingConstants {
  std::array<Rat, 5> lambda4{0, 1, 0, 0, 0};
  std::array<Rat, 5> lambda6{0, 1, 0, 0, 0};
  friend bool operator==(const ScalingConstants&, const ScalingConstants&) = default;
};

// Frozen output of derive_scalings(): the unique multipliers for which the
// standard models of y^2 = x^3 + Ax + B have c4 = -48A and c6 = -864B.
inline const ScalingConstants& frozen_scalings() {
  static const ScalingConstants s = [] {
    ScalingConstants k;
    k.lambda4[2] = 1;
    k.lambda6[2] = make_rat(1, 2);
    k.lambda4[3] = 1;
    k.lambda6[3] = -1;
    k.lambda4[4] = 256;
    k.lambda6[4] = 2048;
    return k;
  }();
  return s;
}

// Weight-4 and weight-6 kernel invariants before scaling.
inline std::pair<Rat, Rat> kernel_invariants(const GenusOneEquation& e) {
  switch (e.degree) {
    case 2: return quartic_IJ(completed_quartic(e));
    case 3: return aronhold_ST(e);
    case 4: return quartic_IJ(characteristic_quartic(e));
  }
  throw Error(ErrorCode::DegreeMismatch, "kernel invariants need degree 2..4");
}

inline InvariantTriple triple_from(const Rat& c4, const Rat& c6) {
  return InvariantTriple{c4, c6, Rat((c4 * c4 * c4 - c6 * c6) / 1728)};
}

inline InvariantTriple invariants_with(const GenusOneEquation& e, const ScalingConstants& k) {
  if (e.degree == 1) {
    const auto& c = e.coeffs;
    const Rat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
    Rat b2 = a1 * a1 + 4 * a2;
    Rat b4 = 2 * a4 + a1 * a3;
    Rat b6 = a3 * a3 + 4 * a6;
    Rat c4 = b2 * b2 - 24 * b4;
    Rat c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    return triple_from(c4, c6);
  }
  auto [k4, k6] = kernel_invariants(e);
  return triple_from(k.lambda4[e.degree] * k4, k.lambda6[e.degree] * k6);
}

inline InvariantTriple invariants(const GenusOneEquation& e) { return invariants_with(e, frozen_scalings()); }

inline Rat discriminant(const GenusOneEquation& e) { return invariants(e).disc; }

// Standard degree-n model of y^2 = x^3 + Ax + B.
inline GenusOneEquation standard_model(const Integer& A, const Integer& B, int n) {
  Rat a(A), b(B);
  switch (n) {
    case 1: return GenusOneEquation(1, {0, 0, 0, a, b});
    case 2: return GenusOneEquation(2, {0, 0, 0, 0, 1, 0, a, b});
    case 3: return GenusOneEquation(3, {1, 0, b, 0, 0, 0, -1, a, 0, 0});
    case 4: {
      // x1 x3 = x2^2 and x4^2 = x1 x2 + A x2 x3 + B x3^2, with (x1,x2,x3,x4) = (x^2, xz, z^2, y)
      std::vector<Rat> c(20, Rat(0));
      c[2] = -1;
      c[4] = 1;
      c[10 + 1] = -1;
      c[10 + 5] = -a;
      c[10 + 7] = -b;
      c[10 + 9] = 1;
      return GenusOneEquation(4, c);
    }
  }
  throw Error(ErrorCode::DegreeMismatch, "degree must be 1..4");
}

// Recompute the multipliers from the standard models on a grid of (A, B) wide
// enough that agreement on the grid forces polynomial identity in A and B.
inline ScalingConstants derive_scalings() {
  ScalingConstants out;
  const int half = 6;  // 13 x 13 grid; kernels have degree <= 12 in A, B
  for (int n = 2; n <= 4; ++n) {
    std::optional<Rat> l4, l6;
    std::vector<std::tuple<int, int, Rat, Rat>> samples;
    for (int A = -half; A <= half; ++A)
      for (int B = -half; B <= half; ++B) {
        auto [k4, k6] = kernel_invariants(standard_model(A, B, n));
        samples.emplace_back(A, B, k4, k6);
        if (!l4 && k4 != 0) l4 = Rat(Rat(-48 * A) / k4);
        if (!l6 && k6 != 0) l6 = Rat(Rat(-864 * B) / k6);
      }
    if (!l4 || !l6) throw Error(ErrorCode::DerivationFailed, "vanishing kernel in degree " + std::to_string(n));
    for (auto& [A, B, k4, k6] : samples)
      if (*l4 * k4 != -48 * A || *l6 * k6 != -864 * B)
        throw Error(ErrorCode::DerivationFailed, "no constant multiplier in degree " + std::to_string(n));
    out.lambda4[n] = *l4;
    out.lambda6[n] = *l6;
  }
  return out;
}

}  // namespace g1min
