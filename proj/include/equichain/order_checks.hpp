#ifndef EQUICHAIN_ORDER_CHECKS_HPP
#define EQUICHAIN_ORDER_CHECKS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichain/orders.hpp"

namespace equichain {

struct AxiomReport {
  bool irreflexive = true;
  bool asymmetric = true;
  bool transitive = true;
  bool multiplicative = true;
  bool cancellative = true;
  bool incomparability_transitive = true;
  bool total = true;
  bool one_minimal = true;
  std::optional<std::string> irreflexive_witness;
  std::optional<std::string> asymmetric_witness;
  std::optional<std::string> transitive_witness;
  std::optional<std::string> multiplicative_witness;
  std::optional<std::string> cancellative_witness;
  std::optional<std::string> incomparability_witness;

  bool axioms_pass() const {
    return irreflexive && asymmetric && transitive && multiplicative && cancellative &&
           incomparability_transitive;
  }
};

/// Exhaustive preorder-axiom check over all monomials of bounded degree in
/// the truncation.  Equal collapses to "incomparable" when testing the
/// formal axioms.  The totality and 1-minimality flags are informational and
/// not part of axioms_pass().
inline AxiomReport check_preorder_axioms(const Order& order, Truncation trunc, int max_degree) {
  const std::vector<Monomial> monos = monomials_up_to_degree(trunc, max_degree);
  const std::size_t n = monos.size();
  AxiomReport rep;

  std::vector<Cmp> tab(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tab[i * n + j] = order.compare(monos[i], monos[j]);
  auto at = [&](std::size_t i, std::size_t j) { return tab[i * n + j]; };
  auto incomp = [&](std::size_t i, std::size_t j) {
    const Cmp c = at(i, j);
    return c == Cmp::Incomparable || c == Cmp::Equal;
  };
  auto pair_text = [&](std::size_t i, std::size_t j) {
    return monos[i].str() + " vs " + monos[j].str();
  };

  for (std::size_t i = 0; i < n && rep.irreflexive; ++i)
    if (at(i, i) != Cmp::Equal) {
      rep.irreflexive = false;
      rep.irreflexive_witness = monos[i].str();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && at(i, j) == Cmp::Equal && rep.asymmetric) {
        rep.asymmetric = false;
        rep.asymmetric_witness = pair_text(i, j) + " reported equal";
      }
      if ((at(i, j) == Cmp::Less) != (at(j, i) == Cmp::Greater) && rep.asymmetric) {
        rep.asymmetric = false;
        rep.asymmetric_witness = pair_text(i, j);
      }
      if (i != j && at(i, j) == Cmp::Incomparable && rep.total) rep.total = false;
    }

  for (std::size_t i = 0; i < n && rep.transitive; ++i)
    for (std::size_t j = 0; j < n && rep.transitive; ++j) {
      if (at(i, j) != Cmp::Less) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (at(j, k) == Cmp::Less && at(i, k) != Cmp::Less) {
          rep.transitive = false;
          rep.transitive_witness = monos[i].str() + " < " + monos[j].str() + " < " + monos[k].str();
          break;
        }
    }

  for (std::size_t i = 0; i < n && rep.incomparability_transitive; ++i)
    for (std::size_t j = 0; j < n && rep.incomparability_transitive; ++j) {
      if (i == j || !incomp(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && incomp(j, k) && !incomp(i, k)) {
          rep.incomparability_transitive = false;
          rep.incomparability_witness =
              monos[i].str() + " ~ " + monos[j].str() + " ~ " + monos[k].str();
          break;
        }
    }

  // multiplicativity and cancellativity share the (h, f, g) sweep
  for (std::size_t h = 0; h < n && (rep.multiplicative || rep.cancellative); ++h) {
    std::vector<Monomial> prod;
    prod.reserve(n);
    for (std::size_t k = 0; k < n; ++k) prod.push_back(monos[h] * monos[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Cmp base = at(i, j);
        const Cmp lifted = order.compare(prod[i], prod[j]);
        if (base == Cmp::Less && lifted != Cmp::Less && rep.multiplicative) {
          rep.multiplicative = false;
          rep.multiplicative_witness = pair_text(i, j) + " times " + monos[h].str();
        }
        if (lifted == Cmp::Less && base != Cmp::Less && rep.cancellative) {
          rep.cancellative = false;
          rep.cancellative_witness = prod[i].str() + " vs " + prod[j].str() + " over " + monos[h].str();
        }
        if (!rep.multiplicative && !rep.cancellative) break;
      }
  }

  const Monomial one = Monomial::one();
  for (const Monomial& m : monos)
    if (!(m == one) && order.compare(one, m) == Cmp::Greater) {
      rep.one_minimal = false;
      break;
    }
  return rep;
}

/// Pairwise totality to bounds: no two distinct monomials of degree
/// <= max_degree are incomparable.
inline bool totality_check(const Order& order, Truncation trunc, int max_degree) {
  const std::vector<Monomial> monos = monomials_up_to_degree(trunc, max_degree);
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i + 1; j < monos.size(); ++j)
      if (order.compare(monos[i], monos[j]) == Cmp::Incomparable) return false;
  return true;
}

struct CompatReport {
  bool compatible = true;
  std::optional<Monomial> f, g;
  std::optional<IncMap> p;
  std::string witness_text() const {
    if (compatible) return "";
    return f->str() + " < " + g->str() + " broken by " + p->text();
  }
};

/// Exhaustive Inc-compatibility check to bounds: every strict relation
/// f < g with support in [m] must survive every p in Inc(N)_{m,n}, for all
/// m <= n = trunc.n.  Reports the first violation in (m, f, g, p) scan
/// order.
inline CompatReport check_inc_compatibility(const Order& order, Truncation trunc, int max_degree) {
  CompatReport rep;
  for (int m = 1; m <= trunc.n; ++m) {
    const std::vector<Monomial> monos = monomials_up_to_degree({trunc.c, m}, max_degree);
    const std::vector<IncMap> maps = enumerate_inc(m, trunc.n);
    for (const Monomial& f : monos)
      for (const Monomial& g : monos) {
        if (order.compare(f, g) != Cmp::Less) continue;
        for (const IncMap& p : maps) {
          if (order.compare(apply(p, f), apply(p, g)) != Cmp::Less) {
            rep.compatible = false;
            rep.f = f;
            rep.g = g;
            rep.p = p;
            return rep;
          }
        }
      }
  }
  return rep;
}

struct RowConditionReport {
  bool pass = true;
  std::string detail;              // first failure, or a shape summary on success
  std::string failing_matrix;      // "A1", "A2", "B1", "B2" on rank failures
  int failing_rank = 0;
};

/// Analyzer for the first- and second-row conditions that Inc-compatibility
/// forces on a matrix representing a preorder on R_4: the rank <= 1 tests on
/// the shifted submatrices and the resulting row shapes
/// r1 in {(l,l,l,l),(l,0,0,0),(0,0,0,l)},
/// r2 in {(-u,-u,-u,3u),(3u,-u,-u,-u)} when r1 is constant.
inline RowConditionReport matrix_row_conditions_r4(const MatrixOrder& m) {
  RowConditionReport rep;
  if (m.n != 4 || m.rows.empty()) {
    rep.pass = false;
    rep.detail = "analyzer requires a nonempty matrix with 4 columns";
    return rep;
  }
  const auto& r1 = m.rows[0];
  const auto rank_check = [&rep](const std::string& name,
                                 std::vector<std::vector<QuadExt>> mat) {
    const int rank = matrix_rank(std::move(mat));
    if (rank > 1) {
      rep.pass = false;
      rep.failing_matrix = name;
      rep.failing_rank = rank;
      rep.detail = name + " has rank " + std::to_string(rank);
      return false;
    }
    return true;
  };

  if (!rank_check("A1", {{r1[0], r1[1], r1[2]}, {r1[1], r1[2], r1[3]}})) return rep;
  if (!rank_check("A2", {{r1[0], r1[1], r1[2]}, {r1[0], r1[2], r1[3]}})) return rep;

  const bool constant = r1[0] == r1[1] && r1[1] == r1[2] && r1[2] == r1[3] && !r1[0].is_zero();
  const bool leading =
      !r1[0].is_zero() && r1[1].is_zero() && r1[2].is_zero() && r1[3].is_zero();
  const bool trailing =
      r1[0].is_zero() && r1[1].is_zero() && r1[2].is_zero() && !r1[3].is_zero();
  if (!constant && !leading && !trailing) {
    rep.pass = false;
    rep.detail = "first row is not of shape (l,l,l,l), (l,0,0,0) or (0,0,0,l)";
    return rep;
  }
  std::string summary = constant ? "r1 = (l,l,l,l)" : leading ? "r1 = (l,0,0,0)" : "r1 = (0,0,0,l)";

  if (constant && m.rows.size() >= 2) {
    const auto& r2 = m.rows[1];
    // the B matrices depend only on entry differences, so they are immune to
    // components parallel to (1,1,1,1)
    if (!rank_check("B1", {{r2[0] - r2[2], r2[1] - r2[2]}, {r2[1] - r2[3], r2[2] - r2[3]}}))
      return rep;
    if (!rank_check("B2", {{r2[0] - r2[2], r2[1] - r2[2]}, {r2[0] - r2[3], r2[2] - r2[3]}}))
      return rep;
    const QuadExt mean = (r2[0] + r2[1] + r2[2] + r2[3]) / QuadExt(Rational(4));
    const QuadExt p0 = r2[0] - mean, p1 = r2[1] - mean, p2 = r2[2] - mean, p3 = r2[3] - mean;
    const bool tail3 = p0 == p1 && p1 == p2 && !p3.is_zero() && p3 == -(p0 + p1 + p2);
    const bool head3 = p1 == p2 && p2 == p3 && !p0.is_zero() && p0 == -(p1 + p2 + p3);
    if (!tail3 && !head3) {
      rep.pass = false;
      rep.detail = "second row is not of shape (-u,-u,-u,3u) or (3u,-u,-u,-u) modulo (1,1,1,1)";
      return rep;
    }
    summary += tail3 ? "; r2 = (-u,-u,-u,3u)" : "; r2 = (3u,-u,-u,-u)";
  }
  rep.detail = summary;
  return rep;
}

inline RowConditionReport matrix_row_conditions_r4(const Order& order) {
  const auto* m = std::get_if<MatrixOrder>(&order.impl());
  if (!m) {
    RowConditionReport rep;
    rep.pass = false;
    rep.detail = "analyzer requires a matrix order";
    return rep;
  }
  return matrix_row_conditions_r4(*m);
}

/// The named candidates of the R_4 classification: families (1)-(7) with
/// their column thresholds, all inverses, and the trivial preorder.
inline std::vector<std::pair<std::string, Order>> named_candidates_r4() {
  std::vector<std::pair<std::string, Order>> out;
  auto push = [&out](Order o) { out.push_back({o.display_name(), std::move(o)}); };
  for (const bool inv : {false, true}) {
    push(Order::named(Family::Deg, 0, inv));
    push(Order::named(Family::Min, 0, inv));
    push(Order::named(Family::DegMin, 0, inv));
    push(Order::named(Family::RevdegMin, 0, inv));
    for (int i = 1; i <= 4; ++i) push(Order::named(Family::Max, i, inv));
    for (int i = 2; i <= 4; ++i) push(Order::named(Family::DegMax, i, inv));
    for (int i = 2; i <= 4; ++i) push(Order::named(Family::RevdegMax, i, inv));
  }
  push(Order::named(Family::Trivial));
  return out;
}

/// Behavioral identification on R_4: compare the order against every named
/// candidate on all monomial pairs of bounded degree; the unique match is
/// returned, otherwise "unclassified".
inline std::string identify_order_on_r4(const Order& order, int max_degree) {
  const std::vector<Monomial> monos = monomials_up_to_degree({1, 4}, max_degree);
  std::vector<Cmp> behavior;
  behavior.reserve(monos.size() * monos.size());
  for (const Monomial& f : monos)
    for (const Monomial& g : monos) behavior.push_back(order.compare(f, g));

  std::string match;
  int matches = 0;
  for (const auto& [name, candidate] : named_candidates_r4()) {
    bool same = true;
    std::size_t idx = 0;
    for (const Monomial& f : monos) {
      for (const Monomial& g : monos) {
        if (candidate.compare(f, g) != behavior[idx++]) {
          same = false;
          break;
        }
      }
      if (!same) break;
    }
    if (same) {
      ++matches;
      match = name;
    }
  }
  return matches == 1 ? match : "unclassified";
}

}  // namespace equichain

#endif  // EQUICHAIN_ORDER_CHECKS_HPP
