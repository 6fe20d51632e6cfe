#ifndef EQUICHAIN_LINALG_ORACLE_HPP
#define EQUICHAIN_LINALG_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "equichain/orders.hpp"

namespace equichain {

namespace detail {

/// Reduced row echelon form of a list of polynomials viewed as vectors over
/// the monomial basis.  Columns are sorted descending by `less`, pivots are
/// normalized to 1 and cleared above and below; rows come back in pivot
/// order (largest pivot first).  The result is canonical for the span.
template <class K>
std::vector<Polynomial<K>> rref_under(const std::vector<Polynomial<K>>& rows,
                                      const std::function<bool(const Monomial&, const Monomial&)>& less) {
  std::vector<Monomial> cols;
  {
    std::map<Monomial, int, MonomialKeyLess> seen;
    for (const Polynomial<K>& f : rows)
      for (const auto& [m, c] : f.terms()) seen.emplace(m, 0);
    for (const auto& [m, c] : seen) cols.push_back(m);
  }
  std::sort(cols.begin(), cols.end(),
            [&less](const Monomial& a, const Monomial& b) { return less(b, a); });
  std::map<Monomial, std::size_t, MonomialKeyLess> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

  std::vector<std::vector<K>> mat;
  for (const Polynomial<K>& f : rows) {
    if (f.is_zero()) continue;
    std::vector<K> v(cols.size(), K());
    for (const auto& [m, c] : f.terms()) v[col_index.at(m)] = c;
    mat.push_back(std::move(v));
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols.size() && pivot_row < mat.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < mat.size() && is_zero(mat[sel][col])) ++sel;
    if (sel == mat.size()) continue;
    std::swap(mat[sel], mat[pivot_row]);
    const K inv = K(1) / mat[pivot_row][col];
    for (std::size_t c = col; c < cols.size(); ++c) mat[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == pivot_row || is_zero(mat[r][col])) continue;
      const K factor = mat[r][col];
      for (std::size_t c = col; c < cols.size(); ++c)
        mat[r][c] -= factor * mat[pivot_row][c];
    }
    ++pivot_row;
  }

  std::vector<Polynomial<K>> out;
  for (std::size_t r = 0; r < pivot_row; ++r) {
    Polynomial<K> f;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!is_zero(mat[r][c])) f.add_term(cols[c], mat[r][c]);
    out.push_back(std::move(f));
  }
  return out;
}

inline bool canonical_less(const Monomial& a, const Monomial& b) {
  return Monomial::key_compare(a, b) < 0;
}

/// Total refinement of a preorder: break Incomparable by the canonical key.
/// This is a genuine total order because incomparability classes are
/// transitive for monomial preorders.
inline std::function<bool(const Monomial&, const Monomial&)> refinement_less(const Order& order) {
  return [&order](const Monomial& a, const Monomial& b) {
    const Cmp c = order.compare(a, b);
    if (c == Cmp::Less) return true;
    if (c == Cmp::Greater) return false;
    return Monomial::key_compare(a, b) < 0;
  };
}

}  // namespace detail

/// Exact basis of the space of degree-d components of elements of <gens>,
/// within the truncation.  For homogeneous generators this is the graded
/// piece J_d; inhomogeneous generators contribute every homogeneous slice of
/// their monomial multiples.
template <class K>
struct GradedPiece {
  Truncation trunc{1, 0};
  int degree = 0;
  std::vector<Polynomial<K>> basis;  // canonical RREF rows
  int dimension() const { return static_cast<int>(basis.size()); }
};

template <class K>
GradedPiece<K> graded_piece(const std::vector<Polynomial<K>>& gens, Truncation trunc, int d) {
  if (d < 0) throw std::invalid_argument("graded_piece: negative degree");
  std::vector<Polynomial<K>> rows;
  for (const Polynomial<K>& g : gens) {
    if (g.is_zero()) continue;
    if (!g.fits(trunc)) throw std::invalid_argument("generator outside the truncation");
    for (int e = 0; e <= d; ++e) {
      const Polynomial<K> slice = g.homogeneous_component(e);
      if (slice.is_zero()) continue;
      for (const Monomial& m : monomials_of_degree(trunc, d - e))
        rows.push_back(slice.times_monomial(m));
    }
  }
  GradedPiece<K> piece;
  piece.trunc = trunc;
  piece.degree = d;
  piece.basis = detail::rref_under(rows, detail::canonical_less);
  return piece;
}

/// The degree-d part of the initial space.  Under a total order this is the
/// pivot monomial set of the echelonized piece; under a preorder the piece
/// is echelonized with respect to the canonical refinement and the span of
/// the preorder leading forms of the basis rows is returned.
template <class K>
struct InitialSpace {
  bool total = true;
  std::vector<Monomial> pivots;               // total path, descending
  std::vector<Polynomial<K>> leading_forms;   // preorder path, canonical RREF
};

template <class K>
InitialSpace<K> initial_space(const Order& order, const GradedPiece<K>& piece) {
  InitialSpace<K> space;
  space.total = order.is_total_on(piece.trunc);
  if (piece.basis.empty()) return space;
  if (space.total) {
    auto less = [&order](const Monomial& a, const Monomial& b) {
      return order.compare(a, b) == Cmp::Less;
    };
    const std::vector<Polynomial<K>> rows = detail::rref_under(piece.basis, less);
    for (const Polynomial<K>& f : rows) space.pivots.push_back(leading_monomial(order, f));
  } else {
    const auto less = detail::refinement_less(order);
    const std::vector<Polynomial<K>> rows = detail::rref_under(piece.basis, less);
    std::vector<Polynomial<K>> forms;
    for (const Polynomial<K>& f : rows) forms.push_back(leading_form(order, f));
    space.leading_forms = detail::rref_under(forms, less);
  }
  return space;
}

/// Reduce f against canonical RREF rows; rows must be echelonized with
/// respect to `less`.
template <class K>
Polynomial<K> reduce_against(Polynomial<K> f, const std::vector<Polynomial<K>>& rows,
                             const std::function<bool(const Monomial&, const Monomial&)>& less) {
  for (const Polynomial<K>& row : rows) {
    Monomial pivot = row.terms().begin()->first;
    for (const auto& [m, c] : row.terms())
      if (less(pivot, m)) pivot = m;
    const K coeff = f.coefficient(pivot);
    if (!is_zero(coeff)) f = f - row.scaled(coeff);
  }
  return f;
}

/// Membership of a monomial in the degree-deg(m) initial space: pivot
/// membership for total orders, membership in the leading-form span for
/// preorders.
template <class K>
bool monomial_in_initial(const Order& order, const std::vector<Polynomial<K>>& gens,
                         Truncation trunc, const Monomial& m) {
  const GradedPiece<K> piece = graded_piece(gens, trunc, m.degree());
  const InitialSpace<K> space = initial_space(order, piece);
  if (space.total) {
    for (const Monomial& p : space.pivots)
      if (p == m) return true;
    return false;
  }
  const Polynomial<K> r =
      reduce_against(Polynomial<K>(m), space.leading_forms, detail::refinement_less(order));
  return r.is_zero();
}

/// Full-enumeration cross-check of the refinement-echelon method over a
/// small prime field: the span of leading forms of ALL vectors of the piece
/// must equal the span produced by initial_space.  Feasible only when
/// p^dim is small.
inline bool preorder_initial_space_cross_check(const Order& order, const GradedPiece<GFp>& piece) {
  const int dim = piece.dimension();
  const long p = GFp::modulus();
  double count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= static_cast<double>(p);
    if (count > (1 << 22)) throw std::invalid_argument("vector space too large to enumerate");
  }
  const auto less = detail::refinement_less(order);
  std::vector<Polynomial<GFp>> all_forms;
  std::vector<long> odo(dim, 0);
  for (;;) {
    // advance the odometer
    int i = 0;
    while (i < dim && odo[i] == p - 1) odo[i++] = 0;
    if (i == dim) break;
    ++odo[i];
    Polynomial<GFp> v;
    for (int k = 0; k < dim; ++k)
      if (odo[k] != 0) v = v + piece.basis[k].scaled(GFp(odo[k]));
    if (!v.is_zero()) all_forms.push_back(leading_form(order, v));
  }
  const std::vector<Polynomial<GFp>> full_span = detail::rref_under(all_forms, less);
  // refinement-echelon method, computed the same way for any comparator
  const std::vector<Polynomial<GFp>> rows = detail::rref_under(piece.basis, less);
  std::vector<Polynomial<GFp>> forms;
  for (const Polynomial<GFp>& f : rows) forms.push_back(leading_form(order, f));
  const std::vector<Polynomial<GFp>> method_span = detail::rref_under(forms, less);
  return full_span == method_span;
}

}  // namespace equichain

#endif  // EQUICHAIN_LINALG_ORACLE_HPP
