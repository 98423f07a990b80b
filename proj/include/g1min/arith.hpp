#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "g1min/error.hpp"

namespace g1min {

using Integer = mpz_class;
using Rat = mpq_class;  // canonical form is maintained by make_rat and gmpxx arithmetic

inline Rat make_rat(const Integer& n, const Integer& d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& x) { return x.get_str(10); }

inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto slash = s.find('/');
  Integer n, d = 1;
  try {
    if (slash == std::string::npos) {
      n = Integer(s, 10);
    } else {
      n = Integer(s.substr(0, slash), 10);
      d = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return make_rat(n, d);
}

// p-adic valuation with a distinguished infinity.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : finite_(true), v_(v) {}

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }
  long value() const {
    if (!finite_) throw std::logic_error("value() of infinite valuation");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(const Valuation& a, long b) { return a.finite_ && a.v_ == b; }
  friend std::strong_ordering operator<=>(const Valuation& a, long b) {
    if (!a.finite_) return std::strong_ordering::greater;
    return a.v_ <=> b;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite()) return os << "inf";
    return os << v.v_;
  }

 private:
  Valuation() = default;
  bool finite_ = false;
  long v_ = 0;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// A prime standing in for the uniformiser; residue field F_p.
class LocalContext {
 public:
  explicit LocalContext(long p) : p_(p), pz_(p) {
    if (!is_prime(pz_)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  long p() const { return p_; }
  const Integer& pz() const { return pz_; }
  Integer power(unsigned long k) const {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), pz_.get_mpz_t(), k);
    return r;
  }
  Rat rpow(long k) const {
    if (k >= 0) return Rat(power(static_cast<unsigned long>(k)));
    return make_rat(1, power(static_cast<unsigned long>(-k)));
  }

 private:
  long p_;
  Integer pz_;
};

inline long valuation_int(const Integer& n, const LocalContext& ctx) {
  if (n == 0) throw std::logic_error("valuation_int of zero");
  Integer tmp;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), ctx.pz().get_mpz_t()));
}

inline Valuation valuation(const Rat& x, const LocalContext& ctx) {
  if (x == 0) return Valuation::infinity();
  long vn = valuation_int(x.get_num(), ctx);
  long vd = valuation_int(x.get_den(), ctx);
  return Valuation(vn - vd);
}

inline Valuation valuation(const Integer& x, const LocalContext& ctx) {
  if (x == 0) return Valuation::infinity();
  return Valuation(valuation_int(x, ctx));
}

// Residue of a p-integral rational modulo p^k, in [0, p^k).
inline Integer residue(const Rat& x, const LocalContext& ctx, unsigned long k = 1) {
  Integer m = ctx.power(k);
  Integer d = x.get_den();
  Integer dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::NonIntegralCoefficient, "residue of non-integral " + to_string(x));
  Integer r = (x.get_num() * dinv) % m;
  if (r < 0) r += m;
  return r;
}

inline long residue_small(const Rat& x, const LocalContext& ctx) {
  return residue(x, ctx, 1).get_si();
}

// A representative y in Z[1/p] with v(x - y) >= e and numerator in [0, p^(e+j)),
// where p^j is the p-part of the denominator of x.
inline Rat p_adic_truncate(const Rat& x, long e, const LocalContext& ctx) {
  if (x == 0) return 0;
  Valuation v = valuation(x, ctx);
  if (v >= e) return 0;
  long j = 0;
  Integer dcop = x.get_den();
  if (dcop % ctx.pz() == 0) {
    j = valuation_int(dcop, ctx);
    dcop /= ctx.power(j);
  }
  Integer m = ctx.power(static_cast<unsigned long>(e + j));
  Integer dinv;
  mpz_invert(dinv.get_mpz_t(), dcop.get_mpz_t(), m.get_mpz_t());
  Integer c = (x.get_num() * dinv) % m;
  if (c < 0) c += m;
  return make_rat(c, ctx.power(static_cast<unsigned long>(j)));
}

// Element of Z[1/p]: the only primes in the denominator are p.
inline bool is_p_power_denominator(const Rat& x, const LocalContext& ctx) {
  Integer d = x.get_den();
  Integer tmp;
  mpz_remove(tmp.get_mpz_t(), d.get_mpz_t(), ctx.pz().get_mpz_t());
  return tmp == 1;
}

inline long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return ((t % p) + p) % p;
}

// Element of F_p carrying its modulus.
struct Fp {
  long v = 0;
  long p = 2;

  Fp() = default;
  Fp(long value, long modulus) : v(((value % modulus) + modulus) % modulus), p(modulus) {}

  bool is_zero() const { return v == 0; }
  Fp inv() const { return Fp(mod_inverse(v, p), p); }
  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v, a.p); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v, a.p); }
  friend Fp operator-(Fp a) { return Fp(-a.v, a.p); }
  friend Fp operator*(Fp a, Fp b) { return Fp(a.v * b.v, a.p); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

}  // namespace g1min
