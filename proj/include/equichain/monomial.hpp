#ifndef EQUICHAIN_MONOMIAL_HPP
#define EQUICHAIN_MONOMIAL_HPP

#include <algorithm>
#include <climits>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichain {

/// Position in the variable grid: x[row,col] with row in [c] and col >= 1.
/// The natural component order (row first, then column) is the canonical
/// serialization key; it is not a term order.
struct VarIndex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Truncation R_n over a c-row grid; n = 0 denotes the coefficient field.
struct Truncation {
  int c = 1;
  int n = 0;
};

// Sentinels for the support of the monomial 1: m(1) = infinity, M(1) = 0.
constexpr int kNoColumn = 0;
constexpr int kInfiniteColumn = INT_MAX;

struct SupportStats {
  int min_col = kInfiniteColumn;
  int max_col = kNoColumn;
  int min_col_exp = 0;
  int max_col_exp = 0;
  int degree = 0;
};

/// Sparse monomial over the grid [c] x N.  Stored exponents are >= 1 and the
/// variable list is kept sorted by (row, col); the empty list is 1.
class Monomial {
 public:
  using Entry = std::pair<VarIndex, int>;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial var(int row, int col, int exp = 1) {
    if (row < 1 || col < 1) throw std::invalid_argument("variable index out of range");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (exp > 0) m.entries_.push_back({VarIndex{row, col}, exp});
    return m;
  }

  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const Entry& e : entries) {
      if (e.second < 0) throw std::invalid_argument("negative exponent");
      if (e.second == 0) continue;
      if (!m.entries_.empty() && m.entries_.back().first == e.first)
        m.entries_.back().second += e.second;
      else
        m.entries_.push_back(e);
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  int degree() const {
    int d = 0;
    for (const Entry& e : entries_) d += e.second;
    return d;
  }

  int exponent(VarIndex v) const {
    for (const Entry& e : entries_)
      if (e.first == v) return e.second;
    return 0;
  }
  int exponent(int row, int col) const { return exponent(VarIndex{row, col}); }

  int max_row() const {
    int r = 0;
    for (const Entry& e : entries_) r = std::max(r, e.first.row);
    return r;
  }
  int min_col() const {
    if (entries_.empty()) return kInfiniteColumn;
    int c = kInfiniteColumn;
    for (const Entry& e : entries_) c = std::min(c, e.first.col);
    return c;
  }
  int max_col() const {
    int c = kNoColumn;
    for (const Entry& e : entries_) c = std::max(c, e.first.col);
    return c;
  }

  /// Distinct columns carrying a variable, ascending.
  std::vector<int> support_columns() const {
    std::vector<int> cols;
    for (const Entry& e : entries_) cols.push_back(e.first.col);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
  }

  int distinct_variable_count() const { return static_cast<int>(entries_.size()); }

  bool fits(const Truncation& t) const {
    for (const Entry& e : entries_)
      if (e.first.row > t.c || e.first.col > t.n) return false;
    return true;
  }

  SupportStats support_stats() const {
    SupportStats s;
    s.degree = degree();
    if (entries_.empty()) return s;
    for (const Entry& e : entries_) {
      if (e.first.col < s.min_col) {
        s.min_col = e.first.col;
        s.min_col_exp = e.second;
      } else if (e.first.col == s.min_col) {
        s.min_col_exp += e.second;  // several rows on the same column
      }
      if (e.first.col > s.max_col) {
        s.max_col = e.first.col;
        s.max_col_exp = e.second;
      } else if (e.first.col == s.max_col) {
        s.max_col_exp += e.second;
      }
    }
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() ||
          (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        r.entries_.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        r.entries_.push_back(b.entries_[j++]);
      } else {
        r.entries_.push_back({a.entries_[i].first, a.entries_[i].second + b.entries_[j].second});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Canonical serialization key: lexicographic on the (row, col, exp)
  /// triple sequence, shorter sequences first on ties.
  static std::strong_ordering key_compare(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.entries_[i].first <=> b.entries_[i].first; c != 0) return c;
      if (auto c = a.entries_[i].second <=> b.entries_[i].second; c != 0) return c;
    }
    return a.entries_.size() <=> b.entries_.size();
  }

  std::string str(bool c1_shorthand = false) const {
    if (entries_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const Entry& e : entries_) {
      if (!first) out += "*";
      first = false;
      if (c1_shorthand && e.first.row == 1)
        out += "x" + std::to_string(e.first.col);
      else
        out += "x[" + std::to_string(e.first.row) + "," + std::to_string(e.first.col) + "]";
      if (e.second != 1) out += "^" + std::to_string(e.second);
    }
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::key_compare(a, b) < 0;
  }
};

inline bool divides(const Monomial& f, const Monomial& g) {
  for (const Monomial::Entry& e : f.entries())
    if (g.exponent(e.first) < e.second) return false;
  return true;
}

inline Monomial lcm(const Monomial& f, const Monomial& g) {
  std::vector<Monomial::Entry> entries = f.entries();
  for (const Monomial::Entry& e : g.entries()) {
    bool found = false;
    for (Monomial::Entry& fe : entries)
      if (fe.first == e.first) {
        fe.second = std::max(fe.second, e.second);
        found = true;
        break;
      }
    if (!found) entries.push_back(e);
  }
  return Monomial::from_entries(std::move(entries));
}

/// Exact quotient g / f; requires divides(f, g).
inline Monomial quotient(const Monomial& g, const Monomial& f) {
  std::vector<Monomial::Entry> entries;
  for (const Monomial::Entry& e : g.entries()) {
    const int q = e.second - f.exponent(e.first);
    if (q < 0) throw std::domain_error("monomial quotient: not divisible");
    if (q > 0) entries.push_back({e.first, q});
  }
  // catch variables of f absent from g
  for (const Monomial::Entry& e : f.entries())
    if (g.exponent(e.first) < e.second) throw std::domain_error("monomial quotient: not divisible");
  return Monomial::from_entries(std::move(entries));
}

struct LcmDivideResult {
  Monomial lcm;
  bool divides = false;
  std::optional<Monomial> quotient;
};

inline LcmDivideResult lcm_divides_div(const Monomial& f, const Monomial& g) {
  LcmDivideResult r;
  r.lcm = lcm(f, g);
  r.divides = equichain::divides(f, g);
  if (r.divides) r.quotient = equichain::quotient(g, f);
  return r;
}

/// All monomials of total degree <= max_degree over the truncation grid, in
/// ascending canonical key order.
inline std::vector<Monomial> monomials_up_to_degree(Truncation t, int max_degree) {
  std::vector<VarIndex> vars;
  for (int row = 1; row <= t.c; ++row)
    for (int col = 1; col <= t.n; ++col) vars.push_back({row, col});
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> stack;
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx == vars.size()) {
      out.push_back(Monomial::from_entries(stack));
      return;
    }
    self(self, idx + 1, remaining);
    for (int e = 1; e <= remaining; ++e) {
      stack.push_back({vars[idx], e});
      self(self, idx + 1, remaining - e);
      stack.pop_back();
    }
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), MonomialKeyLess{});
  return out;
}

inline std::vector<Monomial> monomials_of_degree(Truncation t, int degree) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_up_to_degree(t, degree))
    if (m.degree() == degree) out.push_back(m);
  return out;
}

}  // namespace equichain

#endif  // EQUICHAIN_MONOMIAL_HPP
