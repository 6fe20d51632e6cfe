#ifndef EQUICHAIN_ORDERS_HPP
#define EQUICHAIN_ORDERS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equichain/inc.hpp"
#include "equichain/polynomial.hpp"
#include "equichain/quadratic.hpp"

namespace equichain {

/// Four-valued comparison.  Equal is reported only for identical monomials;
/// a total term order never returns Incomparable on distinct monomials.
enum class Cmp { Equal, Less, Greater, Incomparable };

inline Cmp inverted(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return c;
}

inline std::string cmp_str(Cmp c) {
  switch (c) {
    case Cmp::Equal: return "equal";
    case Cmp::Less: return "less";
    case Cmp::Greater: return "greater";
    default: return "incomparable";
  }
}

/// The named preorder families on the one-row grid.  Max, DegMax and
/// RevdegMax carry a column threshold i.
enum class Family { Deg, Min, DegMin, RevdegMin, Max, DegMax, RevdegMax, Trivial };

struct NamedC1 {
  Family family = Family::Min;
  int i = 0;
};

/// Rows of exact Q(sqrt(d)) entries; monomials compare by the lexicographic
/// order of the matrix-vector products.
struct MatrixOrder {
  std::vector<std::vector<QuadExt>> rows;
  int n = 0;   // number of variables (columns of the matrix)
  long d = 0;  // radicand shared by all entries; 0 = rational
};

/// Column-wise lexicographic construction for c >= 2: compare the exponent
/// vectors of the first differing column with an inner order on c variables.
struct ColumnLexOrder {
  MatrixOrder inner;
};

/// Lex order reading variables in the sequence sigma(1), sigma(2), ...,
/// identity beyond sigma's support.
struct PermutedLexOrder {
  Permutation sigma;
};

/// Internal block elimination order: monomials touching an "outside" column
/// dominate all monomials supported inside.  Degree-lex within each block.
struct BlockElimOrder {
  std::vector<int> outside;  // sorted column list
};

namespace detail {

struct ColDiff {
  int col;
  int fe;
  int ge;
};

/// Column exponent profiles for c = 1 comparisons: total degrees plus the
/// list of columns where the exponents differ (ascending).
inline void c1_profiles(const Monomial& f, const Monomial& g, int& degf, int& degg,
                        std::vector<ColDiff>& diffs) {
  degf = 0;
  degg = 0;
  diffs.clear();
  auto require_row1 = [](const Monomial::Entry& e) {
    if (e.first.row != 1)
      throw std::domain_error("order is defined on the one-row grid (c = 1) only");
  };
  auto fi = f.entries().begin();
  auto gi = g.entries().begin();
  const auto fend = f.entries().end();
  const auto gend = g.entries().end();
  while (fi != fend || gi != gend) {
    if (gi == gend || (fi != fend && fi->first.col < gi->first.col)) {
      require_row1(*fi);
      degf += fi->second;
      diffs.push_back({fi->first.col, fi->second, 0});
      ++fi;
    } else if (fi == fend || gi->first.col < fi->first.col) {
      require_row1(*gi);
      degg += gi->second;
      diffs.push_back({gi->first.col, 0, gi->second});
      ++gi;
    } else {
      require_row1(*fi);
      require_row1(*gi);
      degf += fi->second;
      degg += gi->second;
      if (fi->second != gi->second) diffs.push_back({fi->first.col, fi->second, gi->second});
      ++fi;
      ++gi;
    }
  }
}

inline Cmp by_int(int a, int b) { return a < b ? Cmp::Less : Cmp::Greater; }

inline Cmp named_compare(const NamedC1& spec, const Monomial& f, const Monomial& g) {
  int degf, degg;
  std::vector<ColDiff> diffs;
  c1_profiles(f, g, degf, degg, diffs);
  switch (spec.family) {
    case Family::Deg:
      return degf != degg ? by_int(degf, degg) : Cmp::Incomparable;
    case Family::Min:
      return by_int(diffs.front().fe, diffs.front().ge);
    case Family::DegMin:
      if (degf != degg) return by_int(degf, degg);
      return by_int(diffs.front().fe, diffs.front().ge);
    case Family::RevdegMin:
      if (degf != degg) return by_int(degg, degf);
      return by_int(diffs.front().fe, diffs.front().ge);
    case Family::Max:
      if (diffs.back().col < spec.i) return Cmp::Incomparable;
      return by_int(diffs.back().fe, diffs.back().ge);
    case Family::DegMax:
      if (degf != degg) return by_int(degf, degg);
      if (diffs.back().col < spec.i) return Cmp::Incomparable;
      return by_int(diffs.back().fe, diffs.back().ge);
    case Family::RevdegMax:
      if (degf != degg) return by_int(degg, degf);
      if (diffs.back().col < spec.i) return Cmp::Incomparable;
      return by_int(diffs.back().fe, diffs.back().ge);
    case Family::Trivial:
      return Cmp::Incomparable;
  }
  throw std::logic_error("unreachable");
}

inline Cmp matrix_compare(const MatrixOrder& spec, const Monomial& f, const Monomial& g) {
  int degf, degg;
  std::vector<ColDiff> diffs;
  c1_profiles(f, g, degf, degg, diffs);
  for (const ColDiff& dc : diffs)
    if (dc.col > spec.n)
      throw std::domain_error("monomial column exceeds the matrix order truncation");
  for (const auto& row : spec.rows) {
    QuadExt s;
    for (const ColDiff& dc : diffs) s = s + row[dc.col - 1] * QuadExt(Rational(dc.fe - dc.ge));
    const int sign = s.sign();
    if (sign < 0) return Cmp::Less;
    if (sign > 0) return Cmp::Greater;
  }
  return Cmp::Incomparable;
}

inline Cmp permlex_compare(const PermutedLexOrder& spec, const Monomial& f, const Monomial& g) {
  if (f.max_row() > 1 || g.max_row() > 1)
    throw std::domain_error("order is defined on the one-row grid (c = 1) only");
  const int reach = std::max({spec.sigma.n(), f.max_col(), g.max_col()});
  for (int k = 1; k <= reach; ++k) {
    const int col = spec.sigma(k);
    const int fe = f.exponent(1, col);
    const int ge = g.exponent(1, col);
    if (fe != ge) return by_int(fe, ge);
  }
  return Cmp::Equal;
}

inline Cmp columnlex_compare(const ColumnLexOrder& spec, const Monomial& f, const Monomial& g) {
  const int c = spec.inner.n;
  if (f.max_row() > c || g.max_row() > c)
    throw std::domain_error("monomial row exceeds the column-lex row count");
  const int reach = std::max(f.max_col(), g.max_col());
  for (int col = 1; col <= reach; ++col) {
    bool differ = false;
    for (int row = 1; row <= c && !differ; ++row)
      differ = f.exponent(row, col) != g.exponent(row, col);
    if (!differ) continue;
    for (const auto& mrow : spec.inner.rows) {
      QuadExt s;
      for (int row = 1; row <= c; ++row)
        s = s + mrow[row - 1] * QuadExt(Rational(f.exponent(row, col) - g.exponent(row, col)));
      const int sign = s.sign();
      if (sign < 0) return Cmp::Less;
      if (sign > 0) return Cmp::Greater;
    }
    return Cmp::Incomparable;
  }
  return Cmp::Equal;
}

inline Cmp blockelim_compare(const BlockElimOrder& spec, const Monomial& f, const Monomial& g) {
  auto is_outside = [&spec](int col) {
    return std::binary_search(spec.outside.begin(), spec.outside.end(), col);
  };
  auto block_deg = [&](const Monomial& m, bool outside) {
    int d = 0;
    for (const auto& e : m.entries())
      if (is_outside(e.first.col) == outside) d += e.second;
    return d;
  };
  // degree-lex on the outside block, then degree-lex on the inside block
  for (const bool outside : {true, false}) {
    const int df = block_deg(f, outside), dg = block_deg(g, outside);
    if (df != dg) return by_int(df, dg);
    auto fi = f.entries().begin();
    auto gi = g.entries().begin();
    const auto fend = f.entries().end();
    const auto gend = g.entries().end();
    while (fi != fend && is_outside(fi->first.col) != outside) ++fi;
    while (gi != gend && is_outside(gi->first.col) != outside) ++gi;
    while (fi != fend || gi != gend) {
      if (gi == gend || (fi != fend && fi->first < gi->first))
        return Cmp::Greater;  // f carries an earlier variable
      if (fi == fend || gi->first < fi->first) return Cmp::Less;
      if (fi->second != gi->second) return by_int(gi->second, fi->second);
      ++fi;
      ++gi;
      while (fi != fend && is_outside(fi->first.col) != outside) ++fi;
      while (gi != gend && is_outside(gi->first.col) != outside) ++gi;
    }
  }
  return Cmp::Equal;
}

/// Totality of a matrix order on monomials is kernel-freeness over the
/// integers, not real rank: a row q + r*sqrt(d) annihilates an integer
/// vector iff its rational part and its radical part both do, so stack the
/// two rational matrices and ask for full column rank.
inline bool total_on_integer_vectors(const MatrixOrder& m, int cols) {
  std::vector<std::vector<QuadExt>> stacked;
  for (const auto& row : m.rows) {
    std::vector<QuadExt> q_part, r_part;
    bool radical = false;
    for (int j = 0; j < cols; ++j) {
      q_part.push_back(QuadExt(row[j].rational_part()));
      r_part.push_back(QuadExt(row[j].radical_part()));
      radical = radical || sgn(row[j].radical_part()) != 0;
    }
    stacked.push_back(std::move(q_part));
    if (radical) stacked.push_back(std::move(r_part));
  }
  return matrix_rank(std::move(stacked)) == cols;
}

}  // namespace detail

/// A monomial preorder comparator covering the named c = 1 families, exact
/// matrix orders over Q(sqrt(d)), the column-lex construction, permuted-lex
/// orders and internal elimination orders.  Any variant can be inverted.
class Order {
 public:
  using Impl = std::variant<NamedC1, MatrixOrder, ColumnLexOrder, PermutedLexOrder, BlockElimOrder>;

  Order() : impl_(NamedC1{Family::DegMax, 2}) {}

  static Order named(Family f, int i = 0, bool inverted = false) {
    if ((f == Family::Max || f == Family::DegMax || f == Family::RevdegMax) && i < 1)
      throw std::invalid_argument("this family requires a column threshold i >= 1");
    Order o;
    o.impl_ = NamedC1{f, i};
    o.inverted_ = inverted;
    return o;
  }
  static Order matrix(MatrixOrder m, bool inverted = false) {
    QuadExt::validate_radicand(m.d);
    if (m.n < 1) throw std::invalid_argument("matrix order needs at least one variable");
    for (const auto& row : m.rows) {
      if (static_cast<int>(row.size()) != m.n)
        throw std::invalid_argument("matrix row width does not match the variable count");
      bool nonzero = false;
      for (const QuadExt& e : row) nonzero = nonzero || !e.is_zero();
      if (!nonzero) throw std::invalid_argument("matrix rows must be nonzero");
    }
    Order o;
    o.impl_ = std::move(m);
    o.inverted_ = inverted;
    return o;
  }
  static Order column_lex(MatrixOrder inner, bool inverted = false) {
    Order check = matrix(inner);  // validates
    Order o;
    o.impl_ = ColumnLexOrder{std::move(inner)};
    o.inverted_ = inverted;
    return o;
  }
  static Order permuted_lex(Permutation sigma, bool inverted = false) {
    Order o;
    o.impl_ = PermutedLexOrder{std::move(sigma)};
    o.inverted_ = inverted;
    return o;
  }
  static Order block_elimination(std::vector<int> outside_cols) {
    std::sort(outside_cols.begin(), outside_cols.end());
    outside_cols.erase(std::unique(outside_cols.begin(), outside_cols.end()), outside_cols.end());
    Order o;
    o.impl_ = BlockElimOrder{std::move(outside_cols)};
    return o;
  }

  bool is_inverted() const { return inverted_; }
  Order inverse() const {
    Order o = *this;
    o.inverted_ = !o.inverted_;
    return o;
  }
  const Impl& impl() const { return impl_; }

  Cmp compare(const Monomial& f, const Monomial& g) const {
    if (f == g) return Cmp::Equal;
    const Cmp c = std::visit([&](const auto& spec) { return dispatch(spec, f, g); }, impl_);
    return inverted_ ? inverted(c) : c;
  }

  bool less(const Monomial& f, const Monomial& g) const { return compare(f, g) == Cmp::Less; }

  /// Whether the comparator is a total order on the monomials of the given
  /// truncation.  Exact: matrix variants decide by column-restricted rank.
  bool is_total_on(const Truncation& t) const {
    return std::visit(
        [&](const auto& spec) -> bool {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, NamedC1>) {
            switch (spec.family) {
              case Family::Min:
              case Family::DegMin:
              case Family::RevdegMin:
                return true;
              case Family::Max:
                return spec.i <= 1;
              case Family::DegMax:
              case Family::RevdegMax:
                return spec.i <= 2;
              case Family::Deg:
                return t.c * t.n <= 1;
              case Family::Trivial:
                return t.n == 0;
            }
            return false;
          } else if constexpr (std::is_same_v<T, MatrixOrder>) {
            if (t.c > 1 || t.n > spec.n) return false;
            return detail::total_on_integer_vectors(spec, t.n);
          } else if constexpr (std::is_same_v<T, ColumnLexOrder>) {
            if (t.c > spec.inner.n) return false;
            return detail::total_on_integer_vectors(spec.inner, t.c);
          } else {
            return true;  // permuted lex, block elimination
          }
        },
        impl_);
  }

  std::string text() const;
  std::string display_name() const;
  static Order parse(const std::string& spec);

  friend bool operator==(const Order& a, const Order& b) { return a.text() == b.text(); }

 private:
  static Cmp dispatch(const NamedC1& s, const Monomial& f, const Monomial& g) {
    return detail::named_compare(s, f, g);
  }
  static Cmp dispatch(const MatrixOrder& s, const Monomial& f, const Monomial& g) {
    return detail::matrix_compare(s, f, g);
  }
  static Cmp dispatch(const ColumnLexOrder& s, const Monomial& f, const Monomial& g) {
    return detail::columnlex_compare(s, f, g);
  }
  static Cmp dispatch(const PermutedLexOrder& s, const Monomial& f, const Monomial& g) {
    return detail::permlex_compare(s, f, g);
  }
  static Cmp dispatch(const BlockElimOrder& s, const Monomial& f, const Monomial& g) {
    return detail::blockelim_compare(s, f, g);
  }

  Impl impl_;
  bool inverted_ = false;
};

/// The complete catalogue of Inc(N)-compatible term orders for c = 1.
inline std::vector<Order> six_term_orders() {
  return {Order::named(Family::Min),
          Order::named(Family::DegMin),
          Order::named(Family::RevdegMin, 0, /*inverted=*/true),
          Order::named(Family::Max, 1),
          Order::named(Family::DegMax, 2),
          Order::named(Family::RevdegMax, 2, /*inverted=*/true)};
}

/// Sum of all terms that are maximal with respect to the (pre)order.  For a
/// total order this is the single leading term.
template <class K>
Polynomial<K> leading_form(const Order& order, const Polynomial<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("leading form of the zero polynomial");
  Polynomial<K> result;
  for (const auto& [m, c] : f.terms()) {
    bool maximal = true;
    for (const auto& [m2, c2] : f.terms())
      if (order.compare(m, m2) == Cmp::Less) {
        maximal = false;
        break;
      }
    if (maximal) result.add_term(m, c);
  }
  return result;
}

template <class K>
std::pair<Monomial, K> leading_term(const Order& order, const Polynomial<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  auto it = f.terms().begin();
  Monomial best = it->first;
  K coeff = it->second;
  for (++it; it != f.terms().end(); ++it) {
    const Cmp c = order.compare(best, it->first);
    if (c == Cmp::Incomparable)
      throw std::domain_error("incomparable terms: the order is not total on this support");
    if (c == Cmp::Less) {
      best = it->first;
      coeff = it->second;
    }
  }
  return {best, coeff};
}

template <class K>
Monomial leading_monomial(const Order& order, const Polynomial<K>& f) {
  return leading_term(order, f).first;
}

// ---------------------------------------------------------------------------
// Text syntax (CLI round trip)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string matrix_text(const MatrixOrder& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m.rows[r].size(); ++c) {
      if (c) s += ",";
      s += m.rows[r][c].str();
    }
    s += "]";
  }
  return s + "]";
}

class OrderTextParser {
 public:
  explicit OrderTextParser(const std::string& text) : text_(text) {}

  Order parse() {
    std::string name = read_until(':');
    bool inv = false;
    if (name.size() > 4 && name.substr(name.size() - 4) == "-inv") {
      inv = true;
      name = name.substr(0, name.size() - 4);
    }
    if (name == "deg") return finish_named(Family::Deg, 0, inv);
    if (name == "min") return finish_named(Family::Min, 0, inv);
    if (name == "degmin") return finish_named(Family::DegMin, 0, inv);
    if (name == "revdegmin") return finish_named(Family::RevdegMin, 0, inv);
    if (name == "max") return finish_named(Family::Max, read_param(), inv);
    if (name == "degmax") return finish_named(Family::DegMax, read_param(), inv);
    if (name == "revdegmax") return finish_named(Family::RevdegMax, read_param(), inv);
    if (name == "trivial") return finish_named(Family::Trivial, 0, inv);
    if (name == "matrix") return Order::matrix(read_matrix(0), inv);
    if (name == "matrix-sqrt") return Order::matrix(read_matrix(read_param()), inv);
    if (name == "collex") return Order::column_lex(read_matrix(0), inv);
    if (name == "collex-sqrt") return Order::column_lex(read_matrix(read_param()), inv);
    if (name == "permlex") return Order::permuted_lex(read_permutation(), inv);
    if (name == "elim") return Order::block_elimination(read_column_set());
    throw std::invalid_argument("unknown order spec '" + text_ + "'");
  }

 private:
  Order finish_named(Family f, int i, bool inv) {
    expect_end();
    return Order::named(f, i, inv);
  }

  std::string read_until(char stop) {
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != stop) out += text_[pos_++];
    if (pos_ < text_.size()) ++pos_;  // consume the separator
    return out;
  }

  void expect_end() {
    if (pos_ < text_.size()) throw std::invalid_argument("trailing text in order spec '" + text_ + "'");
  }

  int read_param() {
    std::string tok = read_until(':');
    if (tok.empty()) throw std::invalid_argument("missing parameter in order spec '" + text_ + "'");
    return std::stoi(tok);
  }

  Permutation read_permutation() {
    std::string rest = text_.substr(pos_);
    pos_ = text_.size();
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      throw std::invalid_argument("permutation must look like (2,1,3)");
    rest = rest.substr(1, rest.size() - 2);
    std::vector<int> images;
    std::string tok;
    for (char ch : rest + ",") {
      if (ch == ',') {
        if (tok.empty()) throw std::invalid_argument("empty permutation entry");
        images.push_back(std::stoi(tok));
        tok.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        tok += ch;
      }
    }
    const int n = static_cast<int>(images.size());
    return Permutation(n, std::move(images));
  }

  std::vector<int> read_column_set() {
    std::string rest = text_.substr(pos_);
    pos_ = text_.size();
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw std::invalid_argument("column set must look like {2,4}");
    rest = rest.substr(1, rest.size() - 2);
    std::vector<int> cols;
    std::string tok;
    for (char ch : rest + ",") {
      if (ch == ',') {
        if (!tok.empty()) cols.push_back(std::stoi(tok));
        tok.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        tok += ch;
      }
    }
    return cols;
  }

  QuadExt read_entry(const std::string& tok, long d) {
    // sum of signed parts, each a rational optionally tagged with 's'
    Rational q(0), r(0);
    std::size_t i = 0;
    while (i < tok.size()) {
      int sign = 1;
      if (tok[i] == '+' || tok[i] == '-') {
        sign = tok[i] == '-' ? -1 : 1;
        ++i;
      }
      std::string num;
      while (i < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[i])) || tok[i] == '/'))
        num += tok[i++];
      bool radical = false;
      if (i < tok.size() && tok[i] == 's') {
        radical = true;
        ++i;
        if (i < tok.size() && tok[i] == '*') ++i;  // tolerate "2*s"? keep simple: no
      }
      Rational value(1);
      if (!num.empty()) {
        const auto slash = num.find('/');
        if (slash == std::string::npos)
          value = Rational(num);
        else
          value = make_rational(std::stol(num.substr(0, slash)), std::stol(num.substr(slash + 1)));
      } else if (!radical) {
        throw std::invalid_argument("bad matrix entry '" + tok + "'");
      }
      value = value * Rational(sign);
      if (radical) {
        if (d == 0) throw std::invalid_argument("entry uses 's' but no radicand was given");
        r += value;
      } else {
        q += value;
      }
    }
    return QuadExt(q, r, d);
  }

  MatrixOrder read_matrix(long d) {
    std::string rest = text_.substr(pos_);
    pos_ = text_.size();
    if (rest.size() < 4 || rest.substr(0, 2) != "[[" || rest.substr(rest.size() - 2) != "]]")
      throw std::invalid_argument("matrix must look like [[1,1],[0,1]]");
    rest = rest.substr(2, rest.size() - 4);
    MatrixOrder m;
    m.d = d;
    std::vector<std::string> row_texts;
    // after trimming "[[" and "]]", rows are separated by "],["
    std::string current;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest.compare(i, 3, "],[") == 0) {
        row_texts.push_back(current);
        current.clear();
        i += 2;
      } else {
        current += rest[i];
      }
    }
    row_texts.push_back(current);
    for (const std::string& row_text : row_texts) {
      std::vector<QuadExt> row;
      std::string tok;
      for (char ch : row_text + ",") {
        if (ch == ',') {
          if (tok.empty()) throw std::invalid_argument("empty matrix entry");
          row.push_back(read_entry(tok, d));
          tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
          tok += ch;
        }
      }
      if (m.n == 0) m.n = static_cast<int>(row.size());
      m.rows.push_back(std::move(row));
    }
    return m;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string Order::text() const {
  std::string body = std::visit(
      [](const auto& spec) -> std::string {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, NamedC1>) {
          std::string name;
          switch (spec.family) {
            case Family::Deg: name = "deg"; break;
            case Family::Min: name = "min"; break;
            case Family::DegMin: name = "degmin"; break;
            case Family::RevdegMin: name = "revdegmin"; break;
            case Family::Max: name = "max"; break;
            case Family::DegMax: name = "degmax"; break;
            case Family::RevdegMax: name = "revdegmax"; break;
            case Family::Trivial: name = "trivial"; break;
          }
          if (spec.family == Family::Max || spec.family == Family::DegMax ||
              spec.family == Family::RevdegMax)
            return name + "\x01:" + std::to_string(spec.i);
          return name + "\x01";
        } else if constexpr (std::is_same_v<T, MatrixOrder>) {
          if (spec.d == 0) return "matrix\x01:" + detail::matrix_text(spec);
          return "matrix-sqrt\x01:" + std::to_string(spec.d) + ":" + detail::matrix_text(spec);
        } else if constexpr (std::is_same_v<T, ColumnLexOrder>) {
          if (spec.inner.d == 0) return "collex\x01:" + detail::matrix_text(spec.inner);
          return "collex-sqrt\x01:" + std::to_string(spec.inner.d) + ":" +
                 detail::matrix_text(spec.inner);
        } else if constexpr (std::is_same_v<T, PermutedLexOrder>) {
          std::string s = "permlex\x01:(";
          for (std::size_t i = 0; i < spec.sigma.images().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec.sigma.images()[i]);
          }
          return s + ")";
        } else {
          std::string s = "elim\x01:{";
          for (std::size_t i = 0; i < spec.outside.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec.outside[i]);
          }
          return s + "}";
        }
      },
      impl_);
  // the \x01 marker is where "-inv" is spliced in
  const auto marker = body.find('\x01');
  std::string prefix = body.substr(0, marker);
  std::string suffix = body.substr(marker + 1);
  return prefix + (inverted_ ? "-inv" : "") + suffix;
}

inline std::string Order::display_name() const {
  if (const auto* named = std::get_if<NamedC1>(&impl_)) {
    std::string name;
    switch (named->family) {
      case Family::Deg: name = "Deg"; break;
      case Family::Min: name = "Min"; break;
      case Family::DegMin: name = "DegMin"; break;
      case Family::RevdegMin: name = "RevdegMin"; break;
      case Family::Max: name = "Max(" + std::to_string(named->i) + ")"; break;
      case Family::DegMax: name = "DegMax(" + std::to_string(named->i) + ")"; break;
      case Family::RevdegMax: name = "RevdegMax(" + std::to_string(named->i) + ")"; break;
      case Family::Trivial: name = "Trivial"; break;
    }
    return inverted_ ? name + "-inv" : name;
  }
  return text();
}

inline Order Order::parse(const std::string& spec) { return detail::OrderTextParser(spec).parse(); }

}  // namespace equichain

#endif  // EQUICHAIN_ORDERS_HPP
