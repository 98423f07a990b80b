#pragma once

#include <map>
#include <random>

#include "g1min/jacobian.hpp"

namespace g1min {

struct GroundTruth {
  Integer A, B;
  int degree = 1;
  std::map<long, long> planted;              // prime -> levels raised
  std::map<long, long> minimal_valuation;    // prime -> v_p(Delta_min of E)
  std::map<long, long> input_valuation;      // prime -> v_p(Delta) of the generated equation
};

struct GeneratedInstance {
  GenusOneEquation equation;
  GroundTruth truth;
};

namespace detail {

inline RatMatrix random_unimodular(int n, std::mt19937_64& rng, int steps = 6) {
  RatMatrix m = rat_identity(n);
  if (n == 1) return m;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    RatMatrix e = rat_identity(n);
    e(i, j) = coef(rng);
    m = e * m;
  }
  return m;
}

// Integral transformation with det = p, unimodular away from the diagonal factor.
inline Transformation level_raiser(int n, long p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), small(-3, 3);
  Rat pr = p;
  auto sandwich = [&](int dim) {
    std::vector<Rat> d(dim, Rat(1));
    d[0] = pr;
    return random_unimodular(dim, rng) * rat_diag(d) * random_unimodular(dim, rng);
  };
  switch (n) {
    case 1: return WeierstrassTransform{1 / pr, Rat(small(rng)), Rat(small(rng)), Rat(small(rng))};
    case 2: {
      QuarticTransform t;
      if (coin(rng)) t.mu = pr;
      else t.m = sandwich(2);
      return t;
    }
    case 3: {
      CubicTransform t;
      if (coin(rng)) t.mu = pr;
      else t.m = sandwich(3);
      return t;
    }
    default: {
      QuadricPairTransform t;
      if (coin(rng)) t.m = sandwich(2);
      else t.n = sandwich(4);
      return t;
    }
  }
}

inline Transformation random_equivalence(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  switch (n) {
    case 1: return WeierstrassTransform{1, Rat(small(rng)), Rat(small(rng)), Rat(small(rng))};
    case 2: {
      QuarticTransform t;
      t.m = random_unimodular(2, rng);
      t.r = {Rat(small(rng)), Rat(small(rng)), Rat(small(rng))};
      return t;
    }
    case 3: return CubicTransform{1, random_unimodular(3, rng)};
    default: return QuadricPairTransform{random_unimodular(2, rng), random_unimodular(4, rng)};
  }
}

}  // namespace detail

// Standard degree-n model of y^2 = x^3 + Ax + B, mixed by a random integral
// unimodular transformation, then raised k times at each planted prime.
inline GeneratedInstance generate_instance(const Integer& A, const Integer& B, int n,
                                           const std::map<long, long>& planted, std::uint64_t seed) {
  if (4 * A * A * A + 27 * B * B == 0) throw Error(ErrorCode::SingularInput, "4A^3 + 27B^2 = 0");
  std::mt19937_64 rng(seed);
  GenusOneEquation e = apply(detail::random_equivalence(n, rng), standard_model(A, B, n));
  GroundTruth truth;
  truth.A = A;
  truth.B = B;
  truth.degree = n;
  truth.planted = planted;
  auto inv = invariants(standard_model(A, B, 1));
  for (const auto& [p, k] : planted) {
    LocalContext ctx(p);
    truth.minimal_valuation[p] = minimal_valuation_from_invariants(inv.c4, inv.c6, ctx);
    for (long i = 0; i < k; ++i) e = apply(detail::level_raiser(n, p, rng), e);
    e = apply(detail::random_equivalence(n, rng), e);
  }
  Rat d = discriminant(e);
  for (const auto& [p, k] : planted) truth.input_valuation[p] = valuation(d, LocalContext(p)).value();
  return {e, truth};
}

}  // namespace g1min
