#ifndef EQUICHAIN_FIELD_HPP
#define EQUICHAIN_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equichain {

/// Exact rational coefficients. mpq_class keeps values canonical (lowest
/// terms, positive denominator) as long as they are built through the
/// arithmetic operators or canonicalized on construction.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string coeff_str(const Rational& q) { return q.get_str(); }

/// Prime-field element with an ambient, thread-local modulus.  Used only by
/// the linear-algebra oracle cross-checks; the main computation path is
/// always exact rationals.
class GFp {
 public:
  GFp() : v_(0) {}
  GFp(long x) {
    const long p = static_cast<long>(modulus());
    long r = x % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static void set_modulus(std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("GFp modulus must be >= 2");
    for (std::uint32_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument("GFp modulus must be prime");
    modulus_slot() = p;
  }
  static std::uint32_t modulus() {
    const std::uint32_t p = modulus_slot();
    if (p == 0) throw std::logic_error("GFp modulus not set");
    return p;
  }

  std::uint32_t value() const { return v_; }

  friend GFp operator+(GFp a, GFp b) { return from_raw((a.v_ + b.v_) % modulus()); }
  friend GFp operator-(GFp a, GFp b) {
    const std::uint32_t p = modulus();
    return from_raw((a.v_ + p - b.v_) % p);
  }
  friend GFp operator*(GFp a, GFp b) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a.v_) * b.v_;
    return from_raw(static_cast<std::uint32_t>(prod % modulus()));
  }
  friend GFp operator/(GFp a, GFp b) { return a * b.inverse(); }
  GFp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }

  GFp& operator+=(GFp o) { return *this = *this + o; }
  GFp& operator-=(GFp o) { return *this = *this - o; }
  GFp& operator*=(GFp o) { return *this = *this * o; }
  GFp& operator/=(GFp o) { return *this = *this / o; }

  friend bool operator==(GFp a, GFp b) { return a.v_ == b.v_; }
  friend bool operator!=(GFp a, GFp b) { return a.v_ != b.v_; }

  GFp inverse() const {
    if (v_ == 0) throw std::domain_error("GFp division by zero");
    // extended Euclid on (v, p)
    std::int64_t r0 = v_, r1 = static_cast<std::int64_t>(modulus());
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(modulus());
    if (inv < 0) inv += modulus();
    return from_raw(static_cast<std::uint32_t>(inv));
  }

 private:
  static GFp from_raw(std::uint32_t v) {
    GFp g;
    g.v_ = v;
    return g;
  }
  static std::uint32_t& modulus_slot() {
    thread_local std::uint32_t p = 0;
    return p;
  }
  std::uint32_t v_;
};

inline bool is_zero(GFp x) { return x.value() == 0; }
inline std::string coeff_str(GFp x) { return std::to_string(x.value()); }

/// Convert an exact rational into GF(p); throws if the denominator vanishes
/// modulo p.
inline GFp to_gfp(const Rational& q) {
  const long p = static_cast<long>(GFp::modulus());
  const long num = static_cast<long>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
  const long den = static_cast<long>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  return GFp(num) / GFp(den);
}

}  // namespace equichain

#endif  // EQUICHAIN_FIELD_HPP
