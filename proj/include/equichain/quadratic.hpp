#ifndef EQUICHAIN_QUADRATIC_HPP
#define EQUICHAIN_QUADRATIC_HPP

#include <stdexcept>
#include <string>

#include "equichain/field.hpp"

namespace equichain {

/// Element q + r*sqrt(d) of the real quadratic field Q(sqrt(d)).  d = 0
/// denotes a plain rational (r must be 0 then); otherwise d must be a
/// square-free integer >= 2 so that the representation is unique and signs
/// are decidable by comparing q^2 with r^2 d.
class QuadExt {
 public:
  QuadExt() : q_(0), r_(0), d_(0) {}
  QuadExt(Rational q) : q_(std::move(q)), r_(0), d_(0) {}
  QuadExt(long q) : q_(q), r_(0), d_(0) {}
  QuadExt(Rational q, Rational r, long d) : q_(std::move(q)), r_(std::move(r)), d_(d) {
    validate_radicand(d_);
    if (d_ == 0 && sgn(r_) != 0) throw std::invalid_argument("radical part requires d > 0");
    if (sgn(r_) == 0) d_ = 0;
  }

  static void validate_radicand(long d) {
    if (d == 0) return;
    if (d < 2) throw std::invalid_argument("radicand must be 0 or a square-free integer >= 2");
    for (long k = 2; k * k <= d; ++k)
      if (d % (k * k) == 0) throw std::invalid_argument("radicand must be square-free");
  }

  const Rational& rational_part() const { return q_; }
  const Rational& radical_part() const { return r_; }
  long radicand() const { return d_; }

  bool is_rational() const { return sgn(r_) == 0; }

  int sign() const {
    const int sq = sgn(q_);
    const int sr = sgn(r_);
    if (sr == 0) return sq;
    if (sq == 0) return sr;
    if (sq == sr) return sq;
    const Rational lhs = q_ * q_;
    const Rational rhs = r_ * r_ * Rational(d_);
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // impossible for square-free d unless q = r = 0
    return c > 0 ? sq : sr;
  }

  bool is_zero() const { return sign() == 0; }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    const long d = unify(a, b);
    return make(a.q_ + b.q_, a.r_ + b.r_, d);
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    const long d = unify(a, b);
    return make(a.q_ - b.q_, a.r_ - b.r_, d);
  }
  QuadExt operator-() const { return make(-q_, -r_, d_); }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    const long d = unify(a, b);
    return make(a.q_ * b.q_ + a.r_ * b.r_ * Rational(d), a.q_ * b.r_ + a.r_ * b.q_, d);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    const long d = unify(a, b);
    const Rational denom = b.q_ * b.q_ - b.r_ * b.r_ * Rational(d);
    if (sgn(denom) == 0) {
      if (b.is_zero()) throw std::domain_error("QuadExt division by zero");
      throw std::domain_error("QuadExt conjugate vanishes; radicand not square-free?");
    }
    const QuadExt conj = make(b.q_, -b.r_, d);
    const QuadExt num = a * conj;
    return make(num.q_ / denom, num.r_ / denom, d);
  }

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return (a - b).is_zero(); }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  std::string str() const {
    if (is_rational()) return q_.get_str();
    std::string rad = (r_ == Rational(1)) ? "s" : (r_ == Rational(-1)) ? "-s" : r_.get_str() + "s";
    if (sgn(q_) == 0) return rad;
    if (sgn(r_) > 0) return q_.get_str() + "+" + rad;
    return q_.get_str() + rad;  // the radical part carries its own minus sign
  }

 private:
  static QuadExt make(Rational q, Rational r, long d) {
    QuadExt x;
    x.q_ = std::move(q);
    x.r_ = std::move(r);
    x.d_ = sgn(x.r_) == 0 ? 0 : d;
    return x;
  }
  static long unify(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw std::invalid_argument("mixing distinct radicands");
  }

  Rational q_, r_;
  long d_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

/// Rank of a small matrix over Q(sqrt(d)) by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<QuadExt>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const QuadExt factor = rows[r][col] / rows[pivot_row][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] = rows[r][c] - factor * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace equichain

#endif  // EQUICHAIN_QUADRATIC_HPP
