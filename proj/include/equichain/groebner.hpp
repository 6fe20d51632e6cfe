#ifndef EQUICHAIN_GROEBNER_HPP
#define EQUICHAIN_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "equichain/orders.hpp"

namespace equichain {

/// Whether the comparator is a term order (total with 1 minimal) on the
/// truncation; division and Buchberger terminate exactly under term orders.
inline bool is_term_order_on(const Order& order, const Truncation& t) {
  if (!order.is_total_on(t)) return false;
  const auto lex_positive_columns = [](const MatrixOrder& m, int cols) {
    for (int j = 0; j < cols; ++j) {
      int sign = 0;
      for (const auto& row : m.rows) {
        sign = row[j].sign();
        if (sign != 0) break;
      }
      if (sign <= 0) return false;
    }
    return true;
  };
  return std::visit(
      [&](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, NamedC1>) {
          switch (spec.family) {
            case Family::Min:
            case Family::DegMin:
            case Family::Max:
            case Family::DegMax:
              return !order.is_inverted();
            case Family::RevdegMin:
            case Family::RevdegMax:
              return order.is_inverted();
            default:
              return false;
          }
        } else if constexpr (std::is_same_v<T, MatrixOrder>) {
          return !order.is_inverted() && lex_positive_columns(spec, t.n);
        } else if constexpr (std::is_same_v<T, ColumnLexOrder>) {
          return !order.is_inverted() && lex_positive_columns(spec.inner, t.c);
        } else if constexpr (std::is_same_v<T, PermutedLexOrder>) {
          return !order.is_inverted();
        } else {
          return !order.is_inverted();  // block elimination
        }
      },
      order.impl());
}

/// Fixed internal total order used wherever some term order is needed but
/// the choice is mathematically irrelevant (ideal equality, membership).
inline Order reference_order(int c) {
  if (c == 1) return Order::named(Family::DegMax, 2);
  MatrixOrder inner;
  inner.n = c;
  inner.rows.push_back(std::vector<QuadExt>(c, QuadExt(Rational(1))));
  for (int i = 0; i + 1 < c; ++i) {
    std::vector<QuadExt> row(c, QuadExt(Rational(0)));
    row[i] = QuadExt(Rational(1));
    inner.rows.push_back(std::move(row));
  }
  return Order::column_lex(std::move(inner));
}

/// Division with remainder: no monomial of the result is divisible by any
/// leading monomial of G.  The reducer is the first eligible element of G in
/// its stored order, so the outcome is deterministic.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                          const Order& order) {
  std::vector<std::pair<Monomial, K>> lts;
  lts.reserve(G.size());
  for (const Polynomial<K>& g : G) lts.push_back(leading_term(order, g));

  Polynomial<K> remainder;
  Polynomial<K> work = f;
  while (!work.is_zero()) {
    const auto [lm, lc] = leading_term(order, work);
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!divides(lts[i].first, lm)) continue;
      const Monomial q = quotient(lm, lts[i].first);
      work = work - G[i].times_monomial(q).scaled(lc / lts[i].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      work = work - Polynomial<K>(lm, lc);
    }
  }
  return remainder;
}

/// S(f, g) = lcm(in(f), in(g)) * (f / lt(f) - g / lt(g)).
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const Order& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of the zero polynomial");
  const auto [lmf, lcf] = leading_term(order, f);
  const auto [lmg, lcg] = leading_term(order, g);
  const Monomial l = lcm(lmf, lmg);
  const Polynomial<K> left = f.times_monomial(quotient(l, lmf)).scaled(K(1) / lcf);
  const Polynomial<K> right = g.times_monomial(quotient(l, lmg)).scaled(K(1) / lcg);
  return left - right;
}

/// Monomial ideal presented by its unique minimal generating set; the
/// canonical identity for comparing initial ideals.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Truncation trunc, std::vector<Monomial> gens) : trunc_(trunc) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return Monomial::key_compare(a, b) < 0;
    });
    for (const Monomial& g : gens) {
      bool redundant = false;
      for (const Monomial& kept : min_gens_)
        if (divides(kept, g)) {
          redundant = true;
          break;
        }
      if (!redundant) min_gens_.push_back(g);
    }
  }

  const Truncation& trunc() const { return trunc_; }
  const std::vector<Monomial>& min_gens() const { return min_gens_; }
  bool is_zero() const { return min_gens_.empty(); }

  bool contains(const Monomial& m) const {
    for (const Monomial& g : min_gens_)
      if (divides(g, m)) return true;
    return false;
  }
  bool contains(const MonomialIdeal& other) const {
    for (const Monomial& g : other.min_gens_)
      if (!contains(g)) return false;
    return true;
  }

  /// All degree-d monomials of the ideal within the truncation.
  std::vector<Monomial> degree_slice(int d) const {
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(trunc_, d))
      if (contains(m)) out.push_back(m);
    return out;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.min_gens_ == b.min_gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

  std::string str(bool c1_shorthand = false) const {
    if (min_gens_.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < min_gens_.size(); ++i) {
      if (i) s += ", ";
      s += min_gens_[i].str(c1_shorthand);
    }
    return s + ">";
  }

 private:
  Truncation trunc_{1, 0};
  std::vector<Monomial> min_gens_;
};

struct GroebnerBasis {
  Order order;
  Truncation trunc;
  std::vector<PolyQ> elements;  // monic, autoreduced, ascending leading monomials
  bool reduced = true;
};

struct BuchbergerOptions {
  bool chain_criterion = false;
  int max_degree = 0;  // 0 = unlimited; otherwise abort when a new basis
                       // element would exceed this degree
};

namespace detail {

inline PolyQ monic(const PolyQ& f, const Order& order) {
  const auto [lm, lc] = leading_term(order, f);
  return f.scaled(Rational(1) / lc);
}

/// Minimalize and tail-reduce a basis; the result is the unique reduced
/// Groebner basis of the ideal the input generates (input must already be a
/// Groebner basis).
inline std::vector<PolyQ> autoreduce(std::vector<PolyQ> basis, const Order& order) {
  std::vector<PolyQ> monic_basis;
  for (const PolyQ& f : basis)
    if (!f.is_zero()) monic_basis.push_back(monic(f, order));
  std::sort(monic_basis.begin(), monic_basis.end(), [&order](const PolyQ& a, const PolyQ& b) {
    const Monomial la = leading_monomial(order, a);
    const Monomial lb = leading_monomial(order, b);
    const Cmp c = order.compare(la, lb);
    if (c == Cmp::Less) return true;
    if (c == Cmp::Greater) return false;
    return PolyQ::key_compare(a, b) < 0;
  });
  // minimal leading monomials: ascending order guarantees divisors first
  std::vector<PolyQ> minimal;
  for (const PolyQ& f : monic_basis) {
    const Monomial lm = leading_monomial(order, f);
    bool redundant = false;
    for (const PolyQ& kept : minimal)
      if (divides(leading_monomial(order, kept), lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(f);
  }
  // tail reduction until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<PolyQ> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) continue;
      const PolyQ r = normal_form(minimal[i], others, order);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = monic(r, order);
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&order](const PolyQ& a, const PolyQ& b) {
    return order.compare(leading_monomial(order, a), leading_monomial(order, b)) == Cmp::Less;
  });
  return minimal;
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (ascending
/// lcm degree, ties by the canonical monomial key) and the coprimality
/// criterion; the output is the unique reduced Groebner basis.
inline GroebnerBasis buchberger(const std::vector<PolyQ>& gens, const Order& order,
                                Truncation trunc, const BuchbergerOptions& opts = {}) {
  if (!is_term_order_on(order, trunc))
    throw std::domain_error("buchberger requires a term order (total, 1 minimal) on R_n");
  for (const PolyQ& g : gens)
    if (!g.fits(trunc)) throw std::invalid_argument("generator outside the truncation");

  std::vector<PolyQ> G;
  std::vector<Monomial> lm;
  for (const PolyQ& g : gens)
    if (!g.is_zero()) {
      G.push_back(detail::monic(g, order));
      lm.push_back(leading_monomial(order, G.back()));
    }

  // pending pairs keyed by (lcm degree, lcm key, i, j)
  struct PairLess {
    bool operator()(const std::tuple<int, Monomial, int, int>& a,
                    const std::tuple<int, Monomial, int, int>& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (auto c = Monomial::key_compare(std::get<1>(a), std::get<1>(b)); c != 0) return c < 0;
      if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
      return std::get<3>(a) < std::get<3>(b);
    }
  };
  std::set<std::tuple<int, Monomial, int, int>, PairLess> pending;
  auto push_pair = [&](int i, int j) {
    const Monomial l = lcm(lm[i], lm[j]);
    pending.insert({l.degree(), l, i, j});
  };
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!pending.empty()) {
    const auto [ldeg, l, i, j] = *pending.begin();
    pending.erase(pending.begin());
    if (l == lm[i] * lm[j]) continue;  // coprime leading monomials
    if (opts.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < G.size() && !skip; ++k) {
        if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
        if (!divides(lm[k], l)) continue;
        const int ik_lo = std::min(static_cast<int>(k), i), ik_hi = std::max(static_cast<int>(k), i);
        const int jk_lo = std::min(static_cast<int>(k), j), jk_hi = std::max(static_cast<int>(k), j);
        const Monomial l_ik = lcm(lm[ik_lo], lm[ik_hi]);
        const Monomial l_jk = lcm(lm[jk_lo], lm[jk_hi]);
        skip = pending.count({l_ik.degree(), l_ik, ik_lo, ik_hi}) == 0 &&
               pending.count({l_jk.degree(), l_jk, jk_lo, jk_hi}) == 0;
      }
      if (skip) continue;
    }
    const PolyQ s = s_polynomial(G[i], G[j], order);
    const PolyQ r = normal_form(s, G, order);
    if (r.is_zero()) continue;
    if (opts.max_degree > 0 && r.degree() > opts.max_degree)
      throw std::domain_error("degree bound " + std::to_string(opts.max_degree) +
                              " exceeded during basis completion");
    G.push_back(detail::monic(r, order));
    lm.push_back(leading_monomial(order, G.back()));
    const int idx = static_cast<int>(G.size()) - 1;
    for (int k = 0; k < idx; ++k) push_pair(k, idx);
  }

  GroebnerBasis basis;
  basis.order = order;
  basis.trunc = trunc;
  basis.elements = detail::autoreduce(std::move(G), order);
#ifndef NDEBUG
  // postcondition, checked in debug builds: every S-polynomial of the output
  // reduces to zero
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
      const PolyQ s = s_polynomial(basis.elements[i], basis.elements[j], order);
      if (!normal_form(s, basis.elements, order).is_zero())
        throw std::logic_error("buchberger output is not a Groebner basis");
    }
#endif
  return basis;
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (const PolyQ& f : gb.elements) lms.push_back(leading_monomial(gb.order, f));
  return MonomialIdeal(gb.trunc, std::move(lms));
}

inline MonomialIdeal initial_ideal(const std::vector<PolyQ>& gens, const Order& order,
                                   Truncation trunc, const BuchbergerOptions& opts = {}) {
  return initial_ideal(buchberger(gens, order, trunc, opts));
}

/// Ideal equality by mutual normal-form membership against reduced Groebner
/// bases under the fixed internal reference order.
inline bool ideal_equal(const std::vector<PolyQ>& gens1, const std::vector<PolyQ>& gens2,
                        Truncation trunc, const BuchbergerOptions& opts = {}) {
  const Order ref = reference_order(trunc.c);
  const GroebnerBasis gb1 = buchberger(gens1, ref, trunc, opts);
  const GroebnerBasis gb2 = buchberger(gens2, ref, trunc, opts);
  for (const PolyQ& g : gens2)
    if (!normal_form(g, gb1.elements, ref).is_zero()) return false;
  for (const PolyQ& g : gens1)
    if (!normal_form(g, gb2.elements, ref).is_zero()) return false;
  return true;
}

/// Generators of the intersection of <gens> with the subring on the columns
/// in A, by elimination: variables outside A are strictly greater than all
/// variables inside, so basis elements free of outside columns generate the
/// intersection.
inline std::vector<PolyQ> intersect_with_columns(const std::vector<PolyQ>& gens, Truncation trunc,
                                                 const std::vector<int>& columns,
                                                 const BuchbergerOptions& opts = {}) {
  std::vector<int> inside = columns;
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  for (int c : inside)
    if (c < 1 || c > trunc.n) throw std::invalid_argument("column outside the truncation");
  std::vector<int> outside;
  for (int c = 1; c <= trunc.n; ++c)
    if (!std::binary_search(inside.begin(), inside.end(), c)) outside.push_back(c);
  const Order elim = Order::block_elimination(outside);
  const GroebnerBasis gb = buchberger(gens, elim, trunc, opts);
  std::vector<PolyQ> result;
  for (const PolyQ& f : gb.elements) {
    bool in_subring = true;
    for (const auto& [m, c] : f.terms())
      for (const auto& e : m.entries())
        if (!std::binary_search(inside.begin(), inside.end(), e.first.col)) {
          in_subring = false;
          break;
        }
    if (in_subring) result.push_back(f);
  }
  return result;
}

/// Property harness for p . in(J) = in(p . J): both sides computed as
/// monomial ideals over the shifted truncation.
inline bool check_in_commutes_with_inc(const std::vector<PolyQ>& gens, const IncMap& p,
                                       const Order& order, Truncation trunc) {
  if (p.domain() < trunc.n)
    throw std::invalid_argument("IncMap domain bound below the truncation");
  const int shifted_n = trunc.n > 0 ? p(trunc.n) : 0;
  const Truncation shifted{trunc.c, shifted_n};

  const MonomialIdeal lhs_src = initial_ideal(gens, order, trunc);
  std::vector<Monomial> lhs_gens;
  for (const Monomial& m : lhs_src.min_gens()) lhs_gens.push_back(apply(p, m));
  const MonomialIdeal lhs(shifted, std::move(lhs_gens));

  std::vector<PolyQ> moved;
  for (const PolyQ& g : gens) moved.push_back(apply(p, g));
  const MonomialIdeal rhs = initial_ideal(moved, order, shifted);
  return lhs == rhs;
}

}  // namespace equichain

#endif  // EQUICHAIN_GROEBNER_HPP
