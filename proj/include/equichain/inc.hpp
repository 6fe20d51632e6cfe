#ifndef EQUICHAIN_INC_HPP
#define EQUICHAIN_INC_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equichain/polynomial.hpp"

namespace equichain {

/// Restriction of a strictly increasing map N -> N to an initial segment
/// [m].  The action on R_m only consults columns <= m, so this restriction
/// determines the action completely.
class IncMap {
 public:
  IncMap() = default;
  IncMap(int domain, std::vector<int> images) : domain_(domain), images_(std::move(images)) {
    if (domain_ < 0 || static_cast<int>(images_.size()) != domain_)
      throw std::invalid_argument("IncMap: image list does not match domain bound");
    int prev = 0;
    for (int v : images_) {
      if (v <= prev) throw std::invalid_argument("IncMap: images must be strictly increasing");
      prev = v;
    }
  }

  static IncMap identity(int m) {
    std::vector<int> im(m);
    std::iota(im.begin(), im.end(), 1);
    return IncMap(m, std::move(im));
  }

  int domain() const { return domain_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const {
    if (i < 1 || i > domain_) throw std::out_of_range("IncMap applied outside domain bound");
    return images_[i - 1];
  }
  /// p(m) for the domain bound m; 0 for the empty map.
  int bound() const { return images_.empty() ? 0 : images_.back(); }

  bool is_identity() const {
    for (int i = 1; i <= domain_; ++i)
      if (images_[i - 1] != i) return false;
    return true;
  }

  /// Composition (outer after inner); requires inner images within the outer
  /// domain bound.
  friend IncMap compose(const IncMap& outer, const IncMap& inner) {
    std::vector<int> im;
    im.reserve(inner.domain_);
    for (int v : inner.images_) im.push_back(outer(v));
    return IncMap(inner.domain_, std::move(im));
  }

  friend bool operator==(const IncMap& a, const IncMap& b) {
    return a.domain_ == b.domain_ && a.images_ == b.images_;
  }

  /// Serialization used in JSON reports, e.g. "[2->(1,3)]".
  std::string text() const {
    std::string s = "[" + std::to_string(domain_) + "->(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(images_[i]);
    }
    return s + ")]";
  }

 private:
  int domain_ = 0;
  std::vector<int> images_;
};

/// A bijection of [n], identity beyond n.
class Permutation {
 public:
  Permutation() = default;
  Permutation(int n, std::vector<int> images) : n_(n), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != n_)
      throw std::invalid_argument("Permutation: image list does not match n");
    std::vector<bool> seen(n_, false);
    for (int v : images_) {
      if (v < 1 || v > n_ || seen[v - 1])
        throw std::invalid_argument("Permutation: images must be a bijection of [n]");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(n, std::move(im));
  }

  /// sigma_n of the paper: reverses [n], identity beyond.
  static Permutation reversal(int n) {
    std::vector<int> im(n);
    for (int j = 1; j <= n; ++j) im[j - 1] = n + 1 - j;
    return Permutation(n, std::move(im));
  }

  int n() const { return n_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const {
    if (i < 1) throw std::out_of_range("Permutation argument must be >= 1");
    return i <= n_ ? images_[i - 1] : i;
  }

 private:
  int n_ = 0;
  std::vector<int> images_;
};

inline Monomial apply(const IncMap& p, const Monomial& m) {
  std::vector<Monomial::Entry> entries;
  entries.reserve(m.entries().size());
  for (const Monomial::Entry& e : m.entries()) {
    if (e.first.col > p.domain())
      throw std::domain_error("column " + std::to_string(e.first.col) +
                              " exceeds IncMap domain bound " + std::to_string(p.domain()));
    entries.push_back({VarIndex{e.first.row, p(e.first.col)}, e.second});
  }
  return Monomial::from_entries(std::move(entries));
}

inline Monomial apply(const Permutation& s, const Monomial& m) {
  std::vector<Monomial::Entry> entries;
  entries.reserve(m.entries().size());
  for (const Monomial::Entry& e : m.entries())
    entries.push_back({VarIndex{e.first.row, s(e.first.col)}, e.second});
  return Monomial::from_entries(std::move(entries));
}

template <class K>
Polynomial<K> apply(const IncMap& p, const Polynomial<K>& f) {
  return f.map_monomials([&p](const Monomial& m) { return apply(p, m); });
}

template <class K>
Polynomial<K> apply(const Permutation& s, const Polynomial<K>& f) {
  return f.map_monomials([&s](const Monomial& m) { return apply(s, m); });
}

/// All strictly increasing maps [m] -> [n], in lexicographic order of the
/// image tuples.  These are exactly the restrictions of Inc(N)_{m,n} to [m].
inline std::vector<IncMap> enumerate_inc(int m, int n) {
  if (m < 0 || n < 0 || m > n) throw std::invalid_argument("enumerate_inc requires 0 <= m <= n");
  std::vector<IncMap> out;
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  if (m == 0) {
    out.push_back(IncMap(0, {}));
    return out;
  }
  for (;;) {
    out.push_back(IncMap(m, im));
    int i = m - 1;
    while (i >= 0 && im[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++im[i];
    for (int j = i + 1; j < m; ++j) im[j] = im[j - 1] + 1;
  }
  return out;
}

/// Gap criterion: a map p in Inc(N)_{N,n} with p(i_r) = j_r for all r exists
/// iff j_r - j_{r-1} >= i_r - i_{r-1} for all r, with the sentinels
/// i_0 = j_0 = 0 and i_{l+1} = N+1, j_{l+1} = n+1.
inline bool exists_map_through(const std::vector<std::pair<int, int>>& points, int N, int n) {
  if (N < 0 || n < N) throw std::invalid_argument("exists_map_through requires 0 <= N <= n");
  int pi = 0, pj = 0;
  for (const auto& [i, j] : points) {
    if (i <= pi || j <= pj)
      throw std::invalid_argument("point list must be strictly increasing in both coordinates");
    if (i > N || j > n) throw std::invalid_argument("points exceed (N, n) window");
    pi = i;
    pj = j;
  }
  int prev_i = 0, prev_j = 0;
  for (const auto& [i, j] : points) {
    if (j - prev_j < i - prev_i) return false;
    prev_i = i;
    prev_j = j;
  }
  return (n + 1) - prev_j >= (N + 1) - prev_i;
}

/// Build a concrete element of Inc(N)_{N,n} through the given points.  The
/// points must satisfy the gap criterion.  The map assigns k + o(k) where
/// o(k) is the largest anchor offset at or below k.
inline IncMap inc_map_through_points(const std::vector<std::pair<int, int>>& points, int N, int n) {
  if (!exists_map_through(points, N, n))
    throw std::invalid_argument("no increasing map through the given points");
  std::vector<int> im(N);
  std::size_t next = 0;
  int offset = 0;
  for (int k = 1; k <= N; ++k) {
    if (next < points.size() && points[next].first == k) {
      offset = points[next].second - k;
      ++next;
    }
    im[k - 1] = k + offset;
  }
  return IncMap(N, std::move(im));
}

/// Window replacement criterion: p, acting on f in R_m with image in R_n,
/// can be replaced by some p' in Inc(N)_{m,n} with p'.f = p.f exactly when
/// m - m' <= n - n', where m', n' are the minimal truncations of f and p.f.
template <class K>
bool can_replace_in_window(const Polynomial<K>& f, const IncMap& p, int m, int n) {
  if (f.is_zero() || f.degree() == 0)
    throw std::invalid_argument("can_replace_in_window requires deg(f) > 0");
  const int m_min = f.max_col();
  if (m_min > m) throw std::invalid_argument("f does not lie in R_m");
  const Polynomial<K> pf = apply(p, f);
  const int n_min = pf.max_col();
  if (n_min > n) throw std::invalid_argument("p.f does not lie in R_n");
  return m - m_min <= n - n_min;
}

/// Constructive decomposition Inc(N)_{l,n} = Inc(N)_{m,n} o Inc(N)_{l,m}.
/// p1 is chosen greedily as low as possible subject to the stretch bound
/// n - m, then p2 is filled in through the anchor points.
inline std::pair<IncMap, IncMap> decompose(const IncMap& p, int l, int m, int n) {
  if (!(0 <= l && l <= m && m <= n)) throw std::invalid_argument("decompose requires l <= m <= n");
  if (p.domain() != l) throw std::invalid_argument("decompose: map must be restricted to [l]");
  if (p.bound() > n) throw std::invalid_argument("decompose: p(l) exceeds n");
  std::vector<int> p1(l);
  const int stretch = n - m;
  int prev = 0;
  for (int r = 1; r <= l; ++r) {
    p1[r - 1] = std::max(prev + 1, p(r) - stretch);
    prev = p1[r - 1];
  }
  if (l > 0 && p1[l - 1] > m)
    throw std::logic_error("decompose: greedy p1 escaped [m]");  // cannot happen for valid input
  std::vector<std::pair<int, int>> anchors;
  for (int r = 1; r <= l; ++r) anchors.push_back({p1[r - 1], p(r)});
  IncMap first(l, std::move(p1));
  IncMap second = inc_map_through_points(anchors, m, n);
  return {first, second};
}

struct IncDivideWitness {
  IncMap p;
  Monomial h;
};

/// Inc-divisibility of monomials: search for p in Inc(N)_{m,n} and a
/// monomial h with h * (p . f) = g.  The search runs over increasing maps of
/// f's support columns into g's support columns and validates each candidate
/// with the gap criterion.
inline std::optional<IncDivideWitness> inc_divides(const Monomial& f, const Monomial& g, int m,
                                                   int n) {
  if (f.max_col() > m || g.max_col() > n || m > n)
    throw std::invalid_argument("inc_divides: monomials outside the (m, n) window");
  if (f.is_one()) return IncDivideWitness{IncMap::identity(m), g};
  const std::vector<int> fcols = f.support_columns();
  const std::vector<int> gcols = g.support_columns();
  const std::size_t k = fcols.size();
  if (k > gcols.size()) return std::nullopt;

  std::vector<std::size_t> choice(k);
  std::iota(choice.begin(), choice.end(), 0);
  for (;;) {
    // exponent compatibility on every row of every mapped column
    bool ok = true;
    for (std::size_t r = 0; r < k && ok; ++r) {
      const int from = fcols[r];
      const int to = gcols[choice[r]];
      for (const Monomial::Entry& e : f.entries())
        if (e.first.col == from && g.exponent(e.first.row, to) < e.second) {
          ok = false;
          break;
        }
    }
    if (ok) {
      std::vector<std::pair<int, int>> points;
      for (std::size_t r = 0; r < k; ++r) points.push_back({fcols[r], gcols[choice[r]]});
      if (exists_map_through(points, m, n)) {
        IncMap p = inc_map_through_points(points, m, n);
        const Monomial image = apply(p, f);
        if (divides(image, g)) return IncDivideWitness{p, quotient(g, image)};
      }
    }
    // next increasing selection of k indices from gcols
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && choice[i] == gcols.size() - (k - 1 - i)) --i;
    if (i < 0) break;
    ++choice[i];
    for (std::size_t j = i + 1; j < k; ++j) choice[j] = choice[j - 1] + 1;
  }
  return std::nullopt;
}

/// First pair (j, k), scanned with k ascending then j ascending, such that
/// g_{i_j} Inc-divides g_{i_k} in the (i_j, i_k) window.  Indices are
/// 1-based; absence is a legal outcome for finite input.
inline std::optional<std::pair<int, int>> find_stabilizing_pair(
    const std::vector<int>& levels, const std::vector<Monomial>& monomials) {
  if (levels.empty() || levels.size() != monomials.size())
    throw std::invalid_argument("find_stabilizing_pair: level/monomial lists mismatch");
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i] > levels[i + 1])
      throw std::invalid_argument("find_stabilizing_pair: levels must be ascending");
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (monomials[i].max_col() > levels[i])
      throw std::invalid_argument("find_stabilizing_pair: monomial outside its level");
  for (std::size_t k = 1; k < levels.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (inc_divides(monomials[j], monomials[k], levels[j], levels[k]))
        return std::make_pair(static_cast<int>(j) + 1, static_cast<int>(k) + 1);
  return std::nullopt;
}

/// Extend the restriction of p to f's support to a bijection of [n]; the
/// remaining domain is matched to the remaining codomain in ascending order.
template <class K>
Permutation extend_to_permutation(const IncMap& p, const Polynomial<K>& f, int n) {
  std::vector<int> image(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  for (const auto& [mono, coeff] : f.terms())
    for (const Monomial::Entry& e : mono.entries()) {
      const int from = e.first.col;
      const int to = p(from);
      if (to > n) throw std::domain_error("IncMap image escapes [n]");
      if (image[from] == 0) {
        image[from] = to;
        used[to] = true;
      }
    }
  std::vector<int> free_targets;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) free_targets.push_back(v);
  std::size_t next = 0;
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = image[i] != 0 ? image[i] : free_targets[next++];
  return Permutation(n, std::move(images));
}

/// Property harness for the orbit inclusion Inc(N)_{m,n} . f <= S_n . f:
/// checks that every windowed Inc image of f is realized by a finite
/// permutation.
template <class K>
bool orbit_inclusion_check(const Polynomial<K>& f, int m, int n) {
  if (f.max_col() > m || m > n)
    throw std::invalid_argument("orbit_inclusion_check requires f in R_m and m <= n");
  for (const IncMap& p : enumerate_inc(m, n)) {
    const Permutation sigma = extend_to_permutation(p, f, n);
    if (apply(sigma, f) != apply(p, f)) return false;
  }
  return true;
}

}  // namespace equichain

#endif  // EQUICHAIN_INC_HPP
