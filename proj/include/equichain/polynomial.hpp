#ifndef EQUICHAIN_POLYNOMIAL_HPP
#define EQUICHAIN_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equichain/field.hpp"
#include "equichain/monomial.hpp"

namespace equichain {

/// Sparse polynomial with exact field coefficients.  Terms are kept in a map
/// ordered by the canonical monomial key, so iteration (and therefore
/// printing) is deterministic.  No zero coefficients are ever stored.
template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, MonomialKeyLess>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m) { add_term(m, K(1)); }
  Polynomial(const Monomial& m, const K& c) { add_term(m, c); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const K& c) {
    Polynomial p;
    p.add_term(Monomial::one(), c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  const K& coefficient(const Monomial& m) const {
    static const K kZero{};
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (equichain::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (equichain::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int max_col() const {
    int col = kNoColumn;
    for (const auto& [m, c] : terms_) col = std::max(col, m.max_col());
    return col;
  }
  int min_col() const {
    int col = kInfiniteColumn;
    for (const auto& [m, c] : terms_) col = std::min(col, m.min_col());
    return col;
  }
  int max_row() const {
    int r = 0;
    for (const auto& [m, c] : terms_) r = std::max(r, m.max_row());
    return r;
  }

  bool fits(const Truncation& t) const {
    for (const auto& [m, c] : terms_)
      if (!m.fits(t)) return false;
    return true;
  }

  SupportStats support_stats() const {
    SupportStats s;
    s.degree = degree() < 0 ? 0 : degree();
    for (const auto& [m, c] : terms_) {
      const SupportStats ms = m.support_stats();
      if (ms.min_col < s.min_col) {
        s.min_col = ms.min_col;
        s.min_col_exp = ms.min_col_exp;
      }
      if (ms.max_col > s.max_col) {
        s.max_col = ms.max_col;
        s.max_col_exp = ms.max_col_exp;
      }
    }
    return s;
  }

  /// Distinct variables appearing across all terms.
  int distinct_variable_count() const {
    std::vector<VarIndex> vars;
    for (const auto& [m, c] : terms_)
      for (const auto& e : m.entries()) vars.push_back(e.first);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return static_cast<int>(vars.size());
  }

  /// Rebuild the polynomial with every term's monomial transformed; the map
  /// must be injective on the support (the Inc and S_n actions are).
  Polynomial map_monomials(const std::function<Monomial(const Monomial&)>& fn) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(fn(m), c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial scaled(const K& c) const {
    Polynomial r;
    if (equichain::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Deterministic total order on polynomials (term list by canonical key);
  /// used for dedup and stable sorting of generator sets.
  static std::strong_ordering key_compare(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (auto c = Monomial::key_compare(ia->first, ib->first); c != 0) return c;
      if (ia->second != ib->second) {
        // arbitrary but fixed tie-break on coefficients via their text form
        return coeff_str(ia->second) <=> coeff_str(ib->second);
      }
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  /// Homogeneous slice of the given degree.
  Polynomial homogeneous_component(int d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      if (d < 0) d = m.degree();
      if (m.degree() != d) return false;
    }
    return true;
  }

  /// Canonical text; terms are printed in descending canonical key order.
  std::string str(bool c1_shorthand = false) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Monomial& m = it->first;
      std::string c = coeff_str(it->second);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (m.is_one())
        out += c;
      else if (c == "1")
        out += m.str(c1_shorthand);
      else
        out += c + "*" + m.str(c1_shorthand);
    }
    return out;
  }

 private:
  TermMap terms_;
};

using PolyQ = Polynomial<Rational>;

struct PolyKeyLess {
  template <class K>
  bool operator()(const Polynomial<K>& a, const Polynomial<K>& b) const {
    return Polynomial<K>::key_compare(a, b) < 0;
  }
};

inline Polynomial<GFp> to_gfp(const PolyQ& f) {
  Polynomial<GFp> r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, to_gfp(c));
  return r;
}

}  // namespace equichain

#endif  // EQUICHAIN_POLYNOMIAL_HPP
