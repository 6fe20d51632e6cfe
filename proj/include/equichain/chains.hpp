#ifndef EQUICHAIN_CHAINS_HPP
#define EQUICHAIN_CHAINS_HPP

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equichain/groebner.hpp"
#include "equichain/parse.hpp"

namespace equichain {

/// An Inc(N)-invariant ideal chain presented by a seed: explicit generators
/// at levels below the seed level are taken verbatim (accumulated, never
/// spread), and from the seed level on every level is generated by the
/// windowed Inc orbits of all generator-bearing levels.  The spread rule
/// makes the chain invariant from the seed level upwards by construction;
/// levels below the seed are whatever the explicit lists say and are
/// verified, not assumed, by the invariance check.
struct ChainSpec {
  int c = 1;
  int seed_level = 1;
  std::vector<PolyQ> seed_gens;
  std::map<int, std::vector<PolyQ>> explicit_levels;  // keys strictly below seed_level

  static ChainSpec seeded(int c, int seed_level, std::vector<PolyQ> gens) {
    ChainSpec spec;
    spec.c = c;
    spec.seed_level = seed_level;
    for (PolyQ& g : gens)
      if (!g.is_zero()) spec.seed_gens.push_back(std::move(g));
    spec.validate();
    return spec;
  }

  void validate() const {
    if (c < 1 || seed_level < 1) throw std::invalid_argument("chain needs c >= 1, seed_level >= 1");
    const Truncation seed_trunc{c, seed_level};
    for (const PolyQ& g : seed_gens)
      if (!g.fits(seed_trunc)) throw std::invalid_argument("seed generator outside R_{seed_level}");
    for (const auto& [level, gens] : explicit_levels) {
      if (level < 1 || level >= seed_level)
        throw std::invalid_argument("explicit levels must satisfy 1 <= level < seed_level");
      for (const PolyQ& g : gens)
        if (!g.fits({c, level})) throw std::invalid_argument("explicit generator outside its level");
    }
  }

  /// Line-oriented text format:
  ///   c=1
  ///   seed_level=4
  ///   seed: x1+x3
  ///   level 2: x1*x2; x1^2
  /// '#' starts a comment; polynomials on one line are separated by ';'.
  static ChainSpec from_text(const std::string& text) {
    ChainSpec spec;
    std::vector<std::pair<int, std::string>> poly_lines;  // level (0 = seed), payload
    std::istringstream in(text);
    std::string line;
    bool have_seed_level = false;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      const auto end = line.find_last_not_of(" \t\r");
      line = line.substr(start, end - start + 1);
      if (line.rfind("c=", 0) == 0) {
        spec.c = std::stoi(line.substr(2));
      } else if (line.rfind("seed_level=", 0) == 0) {
        spec.seed_level = std::stoi(line.substr(11));
        have_seed_level = true;
      } else if (line.rfind("seed:", 0) == 0) {
        poly_lines.push_back({0, line.substr(5)});
      } else if (line.rfind("level", 0) == 0) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("level line needs ':'");
        const int level = std::stoi(line.substr(5, colon - 5));
        poly_lines.push_back({level, line.substr(colon + 1)});
      } else {
        throw std::invalid_argument("unrecognized chain line: " + line);
      }
    }
    for (const auto& [level, payload] : poly_lines) {
      const int trunc_level = level == 0 ? spec.seed_level : level;
      std::istringstream ps(payload);
      std::string chunk;
      while (std::getline(ps, chunk, ';')) {
        if (chunk.find_first_not_of(" \t") == std::string::npos) continue;
        PolyQ g = parse_polynomial(chunk, {spec.c, trunc_level});
        if (g.is_zero()) continue;
        if (level == 0)
          spec.seed_gens.push_back(std::move(g));
        else
          spec.explicit_levels[level].push_back(std::move(g));
      }
    }
    if (!have_seed_level && !spec.explicit_levels.empty())
      throw std::invalid_argument("chain with explicit levels needs a seed_level line");
    spec.validate();
    return spec;
  }

  static ChainSpec from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read chain file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
  }
};

struct StabilityReport {
  std::optional<int> candidate_index;  // absent: no level works up to the horizon
  int horizon = 0;
  bool certified = false;
  std::optional<int> certificate_level;  // the N of the 2N criterion; bound is 2N
};

struct InvarianceReport {
  bool invariant = true;
  int m = 0, n = 0;
  std::optional<IncMap> p;
  std::optional<PolyQ> generator;
  std::string witness_text() const {
    if (invariant) return "";
    return "p = " + p->text() + " applied to " + generator->str() + " leaves J_" +
           std::to_string(n);
  }
};

/// Shared computation cache for one chain: per-level generator lists,
/// reference-order Groebner bases and per-(order, level) initial ideals.
class ChainContext {
 public:
  explicit ChainContext(ChainSpec spec, BuchbergerOptions opts = {})
      : spec_(std::move(spec)), ref_(reference_order(spec_.c)), opts_(opts) {
    spec_.validate();
  }

  const ChainSpec& spec() const { return spec_; }
  const Order& ref_order() const { return ref_; }
  const BuchbergerOptions& options() const { return opts_; }
  Truncation trunc(int n) const { return {spec_.c, n}; }

  const std::vector<PolyQ>& level_generators(int n) {
    if (n < 1) throw std::invalid_argument("levels start at 1");
    auto it = gens_.find(n);
    if (it != gens_.end()) return it->second;

    std::vector<std::pair<int, const std::vector<PolyQ>*>> bearing;
    for (const auto& [level, gens] : spec_.explicit_levels)
      if (level <= n) bearing.push_back({level, &gens});
    if (spec_.seed_level <= n) bearing.push_back({spec_.seed_level, &spec_.seed_gens});

    std::set<PolyQ, PolyKeyLess> dedup;
    if (n < spec_.seed_level) {
      for (const auto& [level, gens] : bearing)
        for (const PolyQ& g : *gens) dedup.insert(g);
    } else {
      for (const auto& [level, gens] : bearing)
        for (const IncMap& p : enumerate_inc(level, n))
          for (const PolyQ& g : *gens) dedup.insert(apply(p, g));
    }
    return gens_.emplace(n, std::vector<PolyQ>(dedup.begin(), dedup.end())).first->second;
  }

  const GroebnerBasis& reference_basis(int n) {
    auto it = ref_gb_.find(n);
    if (it != ref_gb_.end()) return it->second;
    GroebnerBasis gb = buchberger(level_generators(n), ref_, trunc(n), opts_);
    return ref_gb_.emplace(n, std::move(gb)).first->second;
  }

  const MonomialIdeal& initial_ideal_at(const Order& order, int n) {
    const std::pair<std::string, int> key{order.text(), n};
    auto it = init_.find(key);
    if (it != init_.end()) return it->second;
    MonomialIdeal ideal = initial_ideal(level_generators(n), order, trunc(n), opts_);
    return init_.emplace(key, std::move(ideal)).first->second;
  }

  /// Ideal equality of <gens> against J_n, reusing the cached basis of J_n.
  bool equals_level(const std::vector<PolyQ>& gens, int n) {
    const GroebnerBasis& gb_level = reference_basis(n);
    for (const PolyQ& g : gens)
      if (!normal_form(g, gb_level.elements, ref_).is_zero()) return false;
    const GroebnerBasis gb_gens = buchberger(gens, ref_, trunc(n), opts_);
    for (const PolyQ& g : level_generators(n))
      if (!normal_form(g, gb_gens.elements, ref_).is_zero()) return false;
    return true;
  }

 private:
  ChainSpec spec_;
  Order ref_;
  BuchbergerOptions opts_;
  std::map<int, std::vector<PolyQ>> gens_;
  std::map<int, GroebnerBasis> ref_gb_;
  std::map<std::pair<std::string, int>, MonomialIdeal> init_;
};

/// Windowed orbit of a generator list, deduplicated canonically.
inline std::vector<PolyQ> spread_generators(const std::vector<PolyQ>& gens, int from, int to) {
  std::set<PolyQ, PolyKeyLess> dedup;
  for (const IncMap& p : enumerate_inc(from, to))
    for (const PolyQ& g : gens) dedup.insert(apply(p, g));
  return {dedup.begin(), dedup.end()};
}

inline std::vector<Monomial> spread_monomials(const std::vector<Monomial>& gens, int from, int to) {
  std::set<Monomial, MonomialKeyLess> dedup;
  for (const IncMap& p : enumerate_inc(from, to))
    for (const Monomial& m : gens) dedup.insert(apply(p, m));
  return {dedup.begin(), dedup.end()};
}

/// Invariance check Inc(N)_{m,n} . J_m <= J_n for all windows up to the
/// horizon, by normal-form membership; the first failure is reported.
inline InvarianceReport is_inc_invariant(ChainContext& ctx, int horizon) {
  InvarianceReport rep;
  for (int n = 1; n <= horizon; ++n) {
    const GroebnerBasis& gb = ctx.reference_basis(n);
    for (int m = 1; m <= n; ++m) {
      const std::vector<PolyQ> gens_m = ctx.level_generators(m);
      for (const IncMap& p : enumerate_inc(m, n))
        for (const PolyQ& g : gens_m)
          if (!normal_form(apply(p, g), gb.elements, ctx.ref_order()).is_zero()) {
            rep.invariant = false;
            rep.m = m;
            rep.n = n;
            rep.p = p;
            rep.generator = g;
            return rep;
          }
    }
  }
  return rep;
}

/// Smallest N <= horizon with <Inc(N)_{N,n} . J_N> = J_n for all
/// N <= n <= horizon; horizon-bounded evidence for the stability index.
inline StabilityReport stability_index_upto(ChainContext& ctx, int horizon) {
  StabilityReport rep;
  rep.horizon = horizon;
  for (int N = 1; N <= horizon; ++N) {
    bool ok = true;
    for (int n = N; n <= horizon && ok; ++n)
      ok = ctx.equals_level(spread_generators(ctx.level_generators(N), N, n), n);
    if (ok) {
      rep.candidate_index = N;
      return rep;
    }
  }
  return rep;
}

/// in(J_1), ..., in(J_horizon); chain inclusion of the monomial ideals is
/// asserted along the way.
inline std::vector<MonomialIdeal> initial_chain(ChainContext& ctx, const Order& order,
                                                int horizon) {
  std::vector<MonomialIdeal> out;
  for (int n = 1; n <= horizon; ++n) {
    const MonomialIdeal& ideal = ctx.initial_ideal_at(order, n);
    if (!out.empty())
      for (const Monomial& g : out.back().min_gens())
        if (!ideal.contains(g))
          throw std::domain_error("initial chain inclusion violated at level " + std::to_string(n));
    out.push_back(ideal);
  }
  return out;
}

/// Candidate stability index of the initial-ideal chain at the horizon.
inline StabilityReport initial_chain_index_upto(ChainContext& ctx, const Order& order,
                                                int horizon) {
  StabilityReport rep;
  rep.horizon = horizon;
  const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, horizon);
  for (int N = 1; N <= horizon; ++N) {
    bool ok = true;
    for (int n = N; n <= horizon && ok; ++n) {
      const MonomialIdeal spread(ctx.trunc(n), spread_monomials(chain[N - 1].min_gens(), N, n));
      ok = spread == chain[n - 1];
    }
    if (ok) {
      rep.candidate_index = N;
      return rep;
    }
  }
  return rep;
}

namespace detail {

inline std::vector<PolyQ> monomials_as_polys(const std::vector<Monomial>& monos) {
  std::vector<PolyQ> out;
  out.reserve(monos.size());
  for (const Monomial& m : monos) out.push_back(PolyQ(m));
  return out;
}

/// The 2N identity without precondition checks.
inline bool certificate_identity_holds(ChainContext& ctx, const Order& order, int N) {
  const MonomialIdeal& at_n = ctx.initial_ideal_at(order, N);
  const MonomialIdeal& at_2n = ctx.initial_ideal_at(order, 2 * N);
  const std::vector<Monomial> rhs = spread_monomials(at_n.min_gens(), N, 2 * N);
  return ideal_equal(monomials_as_polys(at_2n.min_gens()), monomials_as_polys(rhs),
                     ctx.trunc(2 * N));
}

}  // namespace detail

/// The 2N criterion: if in(J_{2N}) = <Inc(N)_{N,2N} . in(J_N)> and N is at
/// least the chain's stability index, then the initial chain stabilizes by
/// level 2N.  A successful check is a genuine bound for all levels.
inline StabilityReport certify_initial_stability(ChainContext& ctx, const Order& order, int N) {
  if (N < 1) throw std::invalid_argument("certificate level must be >= 1");
  const StabilityReport chain_rep = stability_index_upto(ctx, 2 * N);
  if (!chain_rep.candidate_index || N < *chain_rep.candidate_index)
    throw std::invalid_argument("certificate level below the chain's candidate stability index");
  StabilityReport rep;
  rep.horizon = 2 * N;
  rep.candidate_index = chain_rep.candidate_index;
  rep.certified = detail::certificate_identity_holds(ctx, order, N);
  if (rep.certified) rep.certificate_level = N;
  return rep;
}

struct ISetEntry {
  Order order;
  StabilityReport report;
};

/// Per-order stability reports on the initial chains: candidate index at the
/// horizon plus a 2N certificate attempted at increasing N.
inline std::vector<ISetEntry> compute_I_set(ChainContext& ctx, const std::vector<Order>& orders,
                                            int horizon, int max_certificate_level) {
  const StabilityReport chain_rep = stability_index_upto(ctx, horizon);
  const int start = chain_rep.candidate_index ? *chain_rep.candidate_index : horizon + 1;
  std::vector<ISetEntry> out;
  for (const Order& order : orders) {
    StabilityReport rep = initial_chain_index_upto(ctx, order, horizon);
    for (int N = start; N <= max_certificate_level; ++N) {
      if (detail::certificate_identity_holds(ctx, order, N)) {
        rep.certified = true;
        rep.certificate_level = N;
        break;
      }
    }
    out.push_back({order, rep});
  }
  return out;
}

struct ChainPartition {
  int count = 0;
  std::vector<std::vector<int>> groups;  // indices into the input order list
  std::vector<bool> group_certified;
};

/// Group orders by identical initial-chain prefixes up to the horizon.  A
/// group is flagged certified when every member holds a 2N certificate with
/// 2N <= horizon, in which case agreement to the horizon determines the
/// whole chain.
inline ChainPartition distinct_initial_chains(ChainContext& ctx, const std::vector<Order>& orders,
                                              int horizon) {
  const std::vector<ISetEntry> iset = compute_I_set(ctx, orders, horizon, horizon / 2);
  std::map<std::string, std::vector<int>> buckets;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::string key;
    for (int n = 1; n <= horizon; ++n) key += ctx.initial_ideal_at(orders[i], n).str() + "|";
    buckets[key].push_back(static_cast<int>(i));
  }
  ChainPartition part;
  part.count = static_cast<int>(buckets.size());
  for (const auto& [key, members] : buckets) {
    bool certified = true;
    for (int idx : members) {
      const StabilityReport& rep = iset[idx].report;
      certified = certified && rep.certified && 2 * *rep.certificate_level <= horizon;
    }
    part.groups.push_back(members);
    part.group_certified.push_back(certified);
  }
  return part;
}

/// The intersection decomposition: in(J_n) as the sum over all N-element
/// column subsets of the initial ideals of the corresponding intersections.
/// Each intersection is relabeled into R_N, its initial ideal taken there,
/// and the generators mapped back through the subset's IncMap (legitimate
/// for Inc-compatible orders, which commute with the action).
inline bool check_intersection_decomposition(ChainContext& ctx, const Order& order, int N, int n) {
  if (N < 1 || N > n) throw std::invalid_argument("need 1 <= N <= n");
  const MonomialIdeal& lhs = ctx.initial_ideal_at(order, n);
  const std::vector<PolyQ>& gens = ctx.level_generators(n);
  std::set<Monomial, MonomialKeyLess> rhs;
  for (const IncMap& subset : enumerate_inc(N, n)) {
    const std::vector<PolyQ> inter =
        intersect_with_columns(gens, ctx.trunc(n), subset.images(), ctx.options());
    if (inter.empty()) continue;
    std::map<int, int> down;
    for (int r = 1; r <= N; ++r) down[subset(r)] = r;
    std::vector<PolyQ> relabeled;
    for (const PolyQ& f : inter)
      relabeled.push_back(f.map_monomials([&down](const Monomial& m) {
        std::vector<Monomial::Entry> entries;
        for (const auto& e : m.entries())
          entries.push_back({VarIndex{e.first.row, down.at(e.first.col)}, e.second});
        return Monomial::from_entries(std::move(entries));
      }));
    const MonomialIdeal local = initial_ideal(relabeled, order, ctx.trunc(N), ctx.options());
    for (const Monomial& m : local.min_gens()) rhs.insert(apply(subset, m));
  }
  return ideal_equal(detail::monomials_as_polys(lhs.min_gens()),
                     detail::monomials_as_polys({rhs.begin(), rhs.end()}), ctx.trunc(n));
}

/// Maximum number of distinct variables in any element of the reduced
/// Groebner basis of J_n.
inline int gb_support_report(ChainContext& ctx, const Order& order, int n) {
  const GroebnerBasis gb = buchberger(ctx.level_generators(n), order, ctx.trunc(n), ctx.options());
  int best = 0;
  for (const PolyQ& f : gb.elements) best = std::max(best, f.distinct_variable_count());
  return best;
}

}  // namespace equichain

#endif  // EQUICHAIN_CHAINS_HPP
