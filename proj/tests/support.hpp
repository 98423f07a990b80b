#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "g1min/g1min.hpp"

namespace support {

using namespace g1min;

inline MultiPoly var(int n, int i) { return rat_var(n, i); }
inline MultiPoly cst(int n, const Rat& c) { return rat_const(n, c); }

inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(G1MIN_CORPUS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::filesystem::path corpus(const std::string& name) {
  return std::filesystem::path(G1MIN_CORPUS_DIR) / (name + ".json");
}

// Textbook Weierstrass invariants from b2, b4, b6, b8.
inline InvariantTriple weierstrass_oracle(const GenusOneEquation& e) {
  const auto& a = e.coeffs;
  Rat a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  Rat b2 = a1 * a1 + 4 * a2;
  Rat b4 = 2 * a4 + a1 * a3;
  Rat b6 = a3 * a3 + 4 * a6;
  Rat b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  Rat c4 = b2 * b2 - 24 * b4;
  Rat c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  Rat disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  return {c4, c6, disc};
}

inline GenusOneEquation random_equation(int n, std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    std::vector<Rat> c(coefficient_count(n));
    for (auto& x : c) x = d(rng);
    GenusOneEquation e(n, c);
    if (discriminant(e) != 0) return e;
  }
}

inline RatMatrix random_matrix(int n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    RatMatrix m = rat_zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    if (m.det() != 0) return m;
  }
}

inline Rat random_nonzero(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(1, bound), s(0, 1);
  Rat x = d(rng);
  return s(rng) ? x : Rat(-x);
}

// Random rational transformation of the given degree with nonzero determinant.
inline Transformation random_transform(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  switch (n) {
    case 1: return WeierstrassTransform{Rat(random_nonzero(rng) / random_nonzero(rng)), d(rng), d(rng), d(rng)};
    case 2: {
      QuarticTransform t;
      t.mu = random_nonzero(rng);
      t.m = random_matrix(2, rng);
      t.r = {Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
      return t;
    }
    case 3: return CubicTransform{random_nonzero(rng), random_matrix(3, rng)};
    default: return QuadricPairTransform{random_matrix(2, rng), random_matrix(4, rng)};
  }
}

// Integral quadric with coefficients in [-3, 3].
inline MultiPoly random_quadric(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  MultiPoly h = rat_poly(4);
  for (const auto& m : quadric_monomials()) h.add_term(m, Rat(d(rng)));
  return h;
}

// g = printed o w with w p-integral of unit determinant.
inline bool factors_through(const Transformation& g, const Transformation& printed, const LocalContext& c) {
  Transformation w = compose(inverse(printed), g);
  if (valuation(det(w), c) != 0) return false;
  for (const auto& x : entries(w))
    if (valuation(x, c) < 0) return false;
  return true;
}

// Random integral form of degree d in n variables whose monomials all involve one of the
// variables flagged in keep.
inline MultiPoly random_form_touching(int n, int d, const std::vector<bool>& keep, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  MultiPoly h = rat_poly(n);
  std::vector<Exponents> mons;
  if (n == 4) mons = quadric_monomials();
  else if (n == 3) mons = cubic_monomials();
  else mons = binary_quartic_monomials();
  for (const auto& m : mons) {
    bool hit = false;
    for (int i = 0; i < n; ++i) hit = hit || (keep[i] && m[i] > 0);
    if (hit) h.add_term(m, Rat(c(rng)));
  }
  return h;
}

enum class Trigger { Quartic, Cubic, ConicLine, DoubleConic, QuadrupleLine, TripleLine, DoubleLineTwoLines, TwoDoubleLines };

// Hand-built non-normal equations in standard position, perturbed by random higher-order terms.
inline GenusOneEquation trigger(Trigger t, long p, std::mt19937_64& rng) {
  Rat P = p, P2 = P * P;
  auto x = [](int i) { return rat_var(4, i - 1); };
  for (;;) {
    GenusOneEquation e;
    switch (t) {
      case Trigger::Quartic: {
        std::uniform_int_distribution<int> c(-3, 3);
        MultiPoly g = rat_poly(2), f = random_form_touching(2, 4, {true, true}, rng);
        for (const auto& m : binary_quadratic_monomials()) g.add_term(m, Rat(c(rng)));
        e = make_quartic(P * g, P2 * f);
        break;
      }
      case Trigger::Cubic: {
        MultiPoly X = rat_var(3, 0), Y = rat_var(3, 1);
        MultiPoly f3 = random_form_touching(3, 3, {true, false, true}, rng);
        MultiPoly rest = random_form_touching(3, 3, {false, true, false}, rng);
        e = make_cubic(Y * Y * X + P * rest + P2 * f3);
        break;
      }
      case Trigger::ConicLine:
        e = make_quadric_pair(x(1) * x(3) + P * random_form_touching(4, 2, {true, true, false, false}, rng) +
                                  P2 * random_quadric(rng),
                              x(2) * x(2) + x(1) * x(4) + P * random_form_touching(4, 2, {true, true, false, false}, rng) +
                                  P2 * random_quadric(rng));
        break;
      case Trigger::DoubleConic:
        e = make_quadric_pair(x(1) * x(1) + P * random_form_touching(4, 2, {true, false, false, false}, rng) +
                                  P2 * random_quadric(rng),
                              x(2) * x(2) + x(3) * x(4) + P * random_quadric(rng));
        break;
      case Trigger::QuadrupleLine:
        e = make_quadric_pair(x(1) * x(1) + P * random_form_touching(4, 2, {true, true, false, false}, rng) +
                                  P2 * random_quadric(rng),
                              x(2) * x(2) + x(1) * x(3) + P * random_quadric(rng));
        break;
      case Trigger::TripleLine:
        e = make_quadric_pair(x(1) * x(2) + P * random_form_touching(4, 2, {true, true, false, false}, rng) +
                                  P2 * random_quadric(rng),
                              x(1) * x(1) + x(2) * x(4) + P * random_quadric(rng));
        break;
      case Trigger::DoubleLineTwoLines:
        e = make_quadric_pair(x(1) * x(1) + x(2) * x(2) +
                                  P * random_form_touching(4, 2, {true, true, false, false}, rng) + P2 * random_quadric(rng),
                              x(1) * x(3) + x(2) * x(4) + P * random_quadric(rng));
        break;
      case Trigger::TwoDoubleLines:
        e = make_quadric_pair(x(2) * x(2) + P * random_form_touching(4, 2, {true, true, false, false}, rng) +
                                  P2 * random_quadric(rng),
                              x(1) * x(3) + x(2) * x(4) + P * random_quadric(rng));
        break;
    }
    if (discriminant(e) != 0) return e;
  }
}

}  // namespace support
