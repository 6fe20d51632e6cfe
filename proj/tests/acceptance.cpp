// Acceptance suite: one line per criterion, [PASS]/[FAIL], with the wall
// time measured against the stated budget.  Everything is exact; there are
// no tolerances to tune.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "equichain/equichain.hpp"

using namespace equichain;

namespace {

Monomial x(int col, int exp = 1) { return Monomial::var(1, col, exp); }

std::vector<PolyQ> orbit_cubics(int n) {
  std::vector<PolyQ> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PolyQ f;
      f.add_term(x(i, 2) * x(j), make_rational(1));
      f.add_term(x(i) * x(j, 2), make_rational(1));
      out.push_back(f);
    }
  return out;
}

ChainSpec remark32_chain() {
  PolyQ seed;
  seed.add_term(x(1), make_rational(1));
  seed.add_term(x(3), make_rational(1));
  return ChainSpec::seeded(1, 4, {seed});
}

// --- criterion bodies -------------------------------------------------------

bool criterion01_gap_oracle() {
  for (int N = 1; N <= 5; ++N)
    for (int n = N; n <= 9; ++n) {
      const std::vector<IncMap> window = enumerate_inc(N, n);
      auto brute = [&window](const std::vector<std::pair<int, int>>& pts) {
        for (const IncMap& p : window) {
          bool hit = true;
          for (const auto& [i, j] : pts)
            if (p(i) != j) {
              hit = false;
              break;
            }
          if (hit) return true;
        }
        return false;
      };
      std::vector<std::vector<std::pair<int, int>>> lists;
      lists.push_back({});
      for (int i1 = 1; i1 <= N; ++i1)
        for (int j1 = 1; j1 <= n; ++j1) {
          lists.push_back({{i1, j1}});
          for (int i2 = i1 + 1; i2 <= N; ++i2)
            for (int j2 = j1 + 1; j2 <= n; ++j2) {
              lists.push_back({{i1, j1}, {i2, j2}});
              for (int i3 = i2 + 1; i3 <= N; ++i3)
                for (int j3 = j2 + 1; j3 <= n; ++j3)
                  lists.push_back({{i1, j1}, {i2, j2}, {i3, j3}});
            }
        }
      for (const auto& pts : lists)
        if (exists_map_through(pts, N, n) != brute(pts)) return false;
    }
  return true;
}

bool criterion02_replacement_oracle() {
  std::mt19937 rng(20260810);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> mdist(1, 5);
    const int m = mdist(rng);
    std::uniform_int_distribution<int> ndist(m, 8);
    const int n = ndist(rng);
    std::uniform_int_distribution<int> col(1, m);
    std::uniform_int_distribution<int> coeff(1, 3);
    std::uniform_int_distribution<int> deg(1, 3);
    PolyQ f;
    while (f.is_zero() || f.degree() < 1) {
      for (int t = 0; t < 3; ++t) {
        Monomial mono;
        for (int d = deg(rng); d > 0; --d) mono = mono * x(col(rng));
        f.add_term(mono, make_rational(coeff(rng)));
      }
    }
    const std::vector<IncMap> candidates = enumerate_inc(f.max_col(), n);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const IncMap q = candidates[pick(rng)];
    const PolyQ qf = apply(q, f);
    bool brute = false;
    for (const IncMap& p : enumerate_inc(m, n))
      if (apply(p, f) == qf) {
        brute = true;
        break;
      }
    if (can_replace_in_window(f, q, m, n) != brute) return false;
  }
  return true;
}

bool criterion03_linear_chain_reproduction() {
  ChainContext ctx(remark32_chain());
  const Order order = Order::named(Family::DegMax, 2);
  if (!(ctx.initial_ideal_at(order, 4) == MonomialIdeal({1, 4}, {x(3)}))) return false;
  if (!ctx.initial_ideal_at(order, 5).contains(x(2))) return false;
  const StabilityReport init_rep = initial_chain_index_upto(ctx, order, 10);
  if (!init_rep.candidate_index || *init_rep.candidate_index < 5) return false;
  const StabilityReport chain_rep = stability_index_upto(ctx, 10);
  if (chain_rep.candidate_index != 4) return false;
  int cert = 0;
  for (int N = 4; N <= 8 && cert == 0; ++N)
    if (certify_initial_stability(ctx, order, N).certified) cert = N;
  if (cert == 0) return false;
  const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, 12);
  for (int n = 2 * cert; n <= 12; ++n) {
    const MonomialIdeal spread(ctx.trunc(n),
                               spread_monomials(chain[2 * cert - 1].min_gens(), 2 * cert, n));
    if (!(spread == chain[n - 1])) return false;
  }
  return true;
}

bool criterion04_six_order_catalogue() {
  const std::vector<Order> six = six_term_orders();
  for (const Order& o : six) {
    const AxiomReport ar = check_preorder_axioms(o, {1, 6}, 4);
    if (!(ar.axioms_pass() && ar.total && ar.one_minimal)) return false;
    if (!check_inc_compatibility(o, {1, 6}, 4).compatible) return false;
  }
  const std::vector<Monomial> monos = monomials_up_to_degree({1, 4}, 3);
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      bool found = false;
      for (const Monomial& f : monos) {
        for (const Monomial& g : monos)
          if (six[i].compare(f, g) != six[j].compare(f, g)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool criterion05_preorder_families() {
  std::vector<Order> catalogue;
  for (const bool inv : {false, true}) {
    catalogue.push_back(Order::named(Family::Deg, 0, inv));
    catalogue.push_back(Order::named(Family::Min, 0, inv));
    catalogue.push_back(Order::named(Family::DegMin, 0, inv));
    catalogue.push_back(Order::named(Family::RevdegMin, 0, inv));
    for (int i = 1; i <= 4; ++i) catalogue.push_back(Order::named(Family::Max, i, inv));
    for (int i = 2; i <= 4; ++i) catalogue.push_back(Order::named(Family::DegMax, i, inv));
    for (int i = 2; i <= 4; ++i) catalogue.push_back(Order::named(Family::RevdegMax, i, inv));
  }
  catalogue.push_back(Order::named(Family::Trivial));
  for (const Order& o : catalogue) {
    if (!check_preorder_axioms(o, {1, 4}, 4).axioms_pass()) return false;
    if (!check_inc_compatibility(o, {1, 4}, 4).compatible) return false;
  }
  return Order::named(Family::Max, 2).compare(x(1), x(1, 2)) == Cmp::Incomparable;
}

bool criterion06_row_conditions() {
  MatrixOrder good;
  good.n = 4;
  good.rows = {{QuadExt(Rational(1)), QuadExt(Rational(1)), QuadExt(Rational(1)),
                QuadExt(Rational(1))},
               {QuadExt(Rational(3)), QuadExt(Rational(-1)), QuadExt(Rational(-1)),
                QuadExt(Rational(-1))}};
  if (!matrix_row_conditions_r4(good).pass) return false;

  MatrixOrder tail;
  tail.n = 4;
  tail.rows = {{QuadExt(Rational(0)), QuadExt(Rational(0)), QuadExt(Rational(0)),
                QuadExt(Rational(1))}};
  if (!matrix_row_conditions_r4(tail).pass) return false;

  MatrixOrder bad;
  bad.n = 4;
  bad.rows = {{QuadExt(Rational(1)), QuadExt(Rational(2)), QuadExt(Rational(3)),
               QuadExt(Rational(4))}};
  const RowConditionReport rep = matrix_row_conditions_r4(bad);
  return !rep.pass && rep.failing_matrix == "A1" && rep.failing_rank == 2;
}

bool criterion07_permuted_lex_reproduction() {
  for (const auto& [n, np] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
    const int T = np + 1;
    const std::vector<PolyQ> gens = orbit_cubics(T);
    const Monomial probe = x(1, 2) * x(np);
    if (!monomial_in_initial(Order::permuted_lex(Permutation::reversal(n)), gens, {1, T}, probe))
      return false;
    if (monomial_in_initial(Order::permuted_lex(Permutation::reversal(np)), gens, {1, T}, probe))
      return false;
  }
  return true;
}

bool criterion08_max_preorder_reproduction() {
  const std::vector<PolyQ> gens = orbit_cubics(3);
  const Monomial probe = x(1) * x(2, 2);
  if (!monomial_in_initial(Order::named(Family::Max, 2), gens, {1, 3}, probe)) return false;
  return !monomial_in_initial(Order::named(Family::Max, 3), gens, {1, 3}, probe);
}

bool criterion09_groebner_oracle_cross_validation() {
  std::vector<std::vector<PolyQ>> ideals;
  {
    // level 5 of the linear chain
    std::vector<PolyQ> linears;
    for (const IncMap& p : enumerate_inc(4, 5)) {
      PolyQ f;
      f.add_term(x(p(1)), make_rational(1));
      f.add_term(x(p(3)), make_rational(1));
      linears.push_back(f);
    }
    ideals.push_back(linears);
  }
  ideals.push_back(orbit_cubics(4));
  ideals.push_back(orbit_cubics(5));
  {
    std::vector<PolyQ> quadrics;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) quadrics.push_back(PolyQ(x(i) * x(j)));
    ideals.push_back(quadrics);
  }
  {
    std::vector<PolyQ> linears;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        PolyQ f;
        f.add_term(x(i), make_rational(1));
        f.add_term(x(j), make_rational(1));
        linears.push_back(f);
      }
    ideals.push_back(linears);
  }
  {
    // orbit of x1*x2 - x2*x3 within R_4
    std::vector<PolyQ> mixed;
    for (const IncMap& p : enumerate_inc(3, 4)) {
      PolyQ f;
      f.add_term(x(p(1)) * x(p(2)), make_rational(1));
      f.add_term(x(p(2)) * x(p(3)), make_rational(-1));
      mixed.push_back(f);
    }
    ideals.push_back(mixed);
  }

  for (const auto& gens : ideals) {
    const int n = 5;
    for (const Order& order : six_term_orders()) {
      const MonomialIdeal in_gb = initial_ideal(gens, order, {1, n});
      for (int d = 0; d <= 5; ++d) {
        const InitialSpace<Rational> sp = initial_space(order, graded_piece(gens, {1, n}, d));
        if (!sp.total) return false;
        std::vector<Monomial> pivots = sp.pivots;
        std::sort(pivots.begin(), pivots.end(), MonomialKeyLess{});
        if (pivots != in_gb.degree_slice(d)) return false;
      }
    }
  }
  return true;
}

bool criterion10_gf2_soundness() {
  GFp::set_modulus(2);
  std::mt19937 rng(4242);
  const std::vector<Order> orders = {
      Order::named(Family::Max, 2),    Order::named(Family::Max, 3),
      Order::named(Family::Max, 4),    Order::named(Family::Deg),
      Order::named(Family::DegMax, 3), Order::named(Family::RevdegMax, 3),
      Order::named(Family::Trivial),   Order::parse("matrix:[[1,1,1,1],[3,-1,-1,-1]]"),
  };
  int done = 0;
  while (done < 50) {
    std::uniform_int_distribution<int> ndist(3, 4);
    const int n = ndist(rng);
    const std::vector<Monomial> monos = monomials_of_degree({1, n}, 2);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<Polynomial<GFp>> gens;
    const int count = 1 + (done % 2);
    for (int g = 0; g < count; ++g) {
      Polynomial<GFp> f;
      while (f.is_zero())
        for (const Monomial& m : monos)
          if (bit(rng)) f.add_term(m, GFp(1));
      gens.push_back(f);
    }
    const GradedPiece<GFp> piece = graded_piece(gens, {1, n}, 3);
    if (piece.dimension() == 0 || piece.dimension() > 12) continue;
    const Order& order = orders[done % orders.size()];
    if (!preorder_initial_space_cross_check(order, piece)) return false;
    ++done;
  }
  return true;
}

bool criterion11_intersection_decomposition() {
  ChainContext ctx(remark32_chain());
  const Order order = Order::named(Family::DegMax, 2);
  return check_intersection_decomposition(ctx, order, 5, 6) &&
         check_intersection_decomposition(ctx, order, 5, 7);
}

bool criterion12_iset_certificates() {
  std::vector<ChainSpec> chains;
  chains.push_back(remark32_chain());                               // seed level 4
  chains.push_back(ChainSpec::seeded(1, 2, {PolyQ(x(1) * x(2))}));  // monomial seed
  {
    PolyQ f;
    f.add_term(x(1), make_rational(1));
    f.add_term(x(2), make_rational(1));
    chains.push_back(ChainSpec::seeded(1, 2, {f}));  // linear seed
  }
  for (const ChainSpec& spec : chains) {
    ChainContext ctx(spec);
    const int horizon = 2 * spec.seed_level + 2;
    const int max_cert = 4 * spec.seed_level;
    const std::vector<ISetEntry> iset = compute_I_set(ctx, six_term_orders(), horizon, max_cert);
    int max_index = 0;
    for (const ISetEntry& e : iset) {
      if (!e.report.certified) return false;
      if (*e.report.certificate_level > 4 * spec.seed_level) return false;
      if (e.report.candidate_index) max_index = std::max(max_index, *e.report.candidate_index);
    }
    if (max_index < 1) return false;
  }
  return true;
}

bool criterion13_orbit_and_commutation() {
  std::mt19937 rng(777);
  // orbit inclusion
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> col(1, 3);
    std::uniform_int_distribution<int> coeff(1, 4);
    PolyQ f;
    while (f.is_zero()) {
      for (int t = 0; t < 2; ++t) {
        Monomial mono;
        std::uniform_int_distribution<int> deg(1, 3);
        for (int d = deg(rng); d > 0; --d) mono = mono * x(col(rng));
        f.add_term(mono, make_rational(coeff(rng)));
      }
    }
    std::uniform_int_distribution<int> ndist(3, 6);
    if (!orbit_inclusion_check(f, 3, ndist(rng))) return false;
  }
  // commutation of the action with initial ideals
  const std::vector<Order> six = six_term_orders();
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> ndist(2, 4);
    const int n = ndist(rng);
    std::uniform_int_distribution<int> col(1, n);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<PolyQ> gens;
    const int count = 1 + (iter % 2);
    for (int g = 0; g < count; ++g) {
      PolyQ f;
      while (f.is_zero()) {
        for (int t = 0; t < 2; ++t) {
          Monomial mono;
          std::uniform_int_distribution<int> deg(1, 2);
          for (int d = deg(rng); d > 0; --d) mono = mono * x(col(rng));
          const int cf = coeff(rng);
          f.add_term(mono, make_rational(cf == 0 ? 1 : cf));
        }
      }
      gens.push_back(f);
    }
    const std::vector<IncMap> maps = enumerate_inc(n, n + 2);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    if (!check_in_commutes_with_inc(gens, maps[pick(rng)], six[iter % six.size()], {1, n}))
      return false;
  }
  return true;
}

bool criterion14_quadratic_matrix_orders() {
  const Order a2 = Order::parse("matrix-sqrt:2:[[1,s]]");
  const Order a3 = Order::parse("matrix-sqrt:3:[[1,s]]");
  const Order b2 = Order::parse("matrix-sqrt:2:[[1,1,1],[1+s,-1,-s]]");
  const Order b3 = Order::parse("matrix-sqrt:3:[[1,1,1],[1+s,-1,-s]]");
  if (!totality_check(a2, {1, 2}, 6)) return false;
  if (!totality_check(b2, {1, 3}, 6)) return false;
  if (!totality_check(a3, {1, 2}, 6)) return false;
  if (!totality_check(b3, {1, 3}, 6)) return false;
  if (!check_inc_compatibility(a2, {1, 2}, 4).compatible) return false;
  if (!check_inc_compatibility(b2, {1, 3}, 3).compatible) return false;
  bool split_a = false;
  for (const Monomial& f : monomials_up_to_degree({1, 2}, 6)) {
    for (const Monomial& g : monomials_up_to_degree({1, 2}, 6))
      if (a2.compare(f, g) != a3.compare(f, g)) {
        split_a = true;
        break;
      }
    if (split_a) break;
  }
  bool split_b = false;
  for (const Monomial& f : monomials_up_to_degree({1, 3}, 8)) {
    for (const Monomial& g : monomials_up_to_degree({1, 3}, 8))
      if (b2.compare(f, g) != b3.compare(f, g)) {
        split_b = true;
        break;
      }
    if (split_b) break;
  }
  return split_a && split_b;
}

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  std::function<bool()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gap-criterion oracle equivalence (N<=5, n<=9, lists<=3)", 10, criterion01_gap_oracle},
      {2, "replacement-criterion oracle equivalence (200 random polynomials)", 30,
       criterion02_replacement_oracle},
      {3, "linear-seed chain reproduction under degmax:2 (certificate + spot check)", 60,
       criterion03_linear_chain_reproduction},
      {4, "six-order catalogue: axioms, compatibility, pairwise distinction", 120,
       criterion04_six_order_catalogue},
      {5, "named preorder families pass axioms and compatibility on R_4", 300,
       criterion05_preorder_families},
      {6, "matrix row-condition analyzer on the three reference matrices", 1,
       criterion06_row_conditions},
      {7, "reversed-prefix lex orders: initial-space membership flips", 10,
       criterion07_permuted_lex_reproduction},
      {8, "max-type preorders: initial-space membership flips", 10,
       criterion08_max_preorder_reproduction},
      {9, "buchberger initial ideals match oracle pivots degreewise (6 ideals, 6 orders)", 300,
       criterion09_groebner_oracle_cross_validation},
      {10, "gf(2) full enumeration validates refinement leading-form spans (50 instances)", 120,
       criterion10_gf2_soundness},
      {11, "intersection decomposition identity at (N,n) = (5,6) and (5,7)", 120,
       criterion11_intersection_decomposition},
      {12, "per-order stability certificates on three seed chains (N <= 4x seed level)", 600,
       criterion12_iset_certificates},
      {13, "orbit inclusion and initial/inc commutation (100 random instances each)", 120,
       criterion13_orbit_and_commutation},
      {14, "quadratic-irrational matrix orders: totality, compatibility, d=2 vs d=3 split", 30,
       criterion14_quadratic_matrix_orders},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = crit.body();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" [exception: ") + e.what() + "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > crit.budget_seconds) {
      ok = false;
      note += " [over budget]";
    }
    std::printf("[%s] criterion %02d (%6.2fs / %gs): %s%s\n", ok ? "PASS" : "FAIL", crit.number,
                seconds, crit.budget_seconds, crit.description.c_str(), note.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
