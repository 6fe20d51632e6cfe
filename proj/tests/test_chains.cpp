#include <catch2/catch_amalgamated.hpp>

#include "equichain/chains.hpp"
#include "equichain/parse.hpp"

using namespace equichain;

namespace {

Monomial x(int col, int exp = 1) { return Monomial::var(1, col, exp); }

/// J_1 = J_2 = J_3 = 0, J_4 = <x1+x3>, spread upwards.
ChainSpec linear_chain() {
  return ChainSpec::seeded(1, 4, {parse_polynomial("x1+x3", {1, 4})});
}

ChainSpec zero_chain() { return ChainSpec::seeded(1, 1, {}); }

/// J_2 = <x2>, J_4 = <x2, x3+x4>, J_8 adds x5+x6+x7+x8; no spreading below
/// the (never reached) seed level, so the chain is an ideal chain but not
/// Inc-invariant.
ChainSpec doubling_chain() {
  return ChainSpec::from_text(
      "c=1\n"
      "seed_level=16\n"
      "level 2: x2\n"
      "level 4: x3+x4\n"
      "level 8: x5+x6+x7+x8\n");
}

const Order kDegMax2 = Order::named(Family::DegMax, 2);

}  // namespace

TEST_CASE("chain file parsing") {
  const ChainSpec spec = ChainSpec::from_text(
      "# the running example\n"
      "c=1\n"
      "seed_level=4\n"
      "seed: x1+x3\n");
  CHECK(spec.c == 1);
  CHECK(spec.seed_level == 4);
  REQUIRE(spec.seed_gens.size() == 1);
  CHECK(spec.seed_gens[0] == parse_polynomial("x1+x3", {1, 4}));

  CHECK_THROWS_AS(ChainSpec::from_text("c=1\nseed_level=3\nlevel 3: x1\n"), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec::from_text("c=1\nseed_level=2\nseed: x5\n"), ParseError);
}

TEST_CASE("level generators of the linear chain") {
  ChainContext ctx(linear_chain());
  CHECK(ctx.level_generators(3).empty());
  REQUIRE(ctx.level_generators(4).size() == 1);
  CHECK(ctx.level_generators(4)[0] == parse_polynomial("x1+x3", {1, 4}));

  const std::vector<PolyQ> expected5 = {parse_polynomial("x1+x3", {1, 5}),
                                        parse_polynomial("x1+x4", {1, 5}),
                                        parse_polynomial("x2+x4", {1, 5})};
  std::vector<PolyQ> got5 = ctx.level_generators(5);
  CHECK(got5.size() == 3);
  for (const PolyQ& f : expected5)
    CHECK(std::count(got5.begin(), got5.end(), f) == 1);
}

TEST_CASE("invariance checks") {
  ChainContext good(linear_chain());
  CHECK(is_inc_invariant(good, 7).invariant);

  ChainContext zero(zero_chain());
  CHECK(is_inc_invariant(zero, 5).invariant);

  ChainSpec bad_spec = ChainSpec::from_text(
      "c=1\n"
      "seed_level=3\n"
      "level 1: x1\n"
      "level 2: x1\n");
  ChainContext bad(bad_spec);
  const InvarianceReport rep = is_inc_invariant(bad, 2);
  REQUIRE_FALSE(rep.invariant);
  CHECK(rep.m == 1);
  CHECK(rep.n == 2);
  CHECK(rep.p->images() == std::vector<int>{2});

  ChainContext doubling(doubling_chain());
  CHECK_FALSE(is_inc_invariant(doubling, 4).invariant);
}

TEST_CASE("stability index of the chain itself") {
  ChainContext ctx(linear_chain());
  const StabilityReport rep = stability_index_upto(ctx, 8);
  CHECK(rep.candidate_index == 4);

  ChainContext zero(zero_chain());
  CHECK(stability_index_upto(zero, 5).candidate_index == 1);

  ChainContext quad(ChainSpec::seeded(1, 2, {PolyQ(x(1) * x(2))}));
  CHECK(stability_index_upto(quad, 6).candidate_index == 2);
}

TEST_CASE("initial chains of the linear chain") {
  ChainContext ctx(linear_chain());
  const std::vector<MonomialIdeal> degmax = initial_chain(ctx, kDegMax2, 5);
  CHECK(degmax[0].is_zero());
  CHECK(degmax[1].is_zero());
  CHECK(degmax[2].is_zero());
  CHECK(degmax[3] == MonomialIdeal({1, 4}, {x(3)}));
  CHECK(degmax[4] == MonomialIdeal({1, 5}, {x(2), x(3), x(4)}));

  const std::vector<MonomialIdeal> min = initial_chain(ctx, Order::named(Family::Min), 5);
  CHECK(min[3] == MonomialIdeal({1, 4}, {x(1)}));
  CHECK(min[4] == MonomialIdeal({1, 5}, {x(1), x(2), x(3)}));

  ChainContext zero(zero_chain());
  for (const MonomialIdeal& ideal : initial_chain(zero, kDegMax2, 4)) CHECK(ideal.is_zero());
}

TEST_CASE("the 2N certificate on the linear chain") {
  ChainContext ctx(linear_chain());
  // in(J_8) contains x2 but the spread of in(J_4) = <x3> does not reach it
  const StabilityReport at4 = certify_initial_stability(ctx, kDegMax2, 4);
  CHECK_FALSE(at4.certified);

  // in(J_10) = <x1,...,x9> while the spread of in(J_5) = <x2,x3,x4> misses x1
  const StabilityReport at5 = certify_initial_stability(ctx, kDegMax2, 5);
  CHECK_FALSE(at5.certified);

  // from level 6 on, J_n is the full linear ideal <x1,...,x_{n-1}> and the
  // identity closes
  const StabilityReport at6 = certify_initial_stability(ctx, kDegMax2, 6);
  CHECK(at6.certified);
  CHECK(at6.certificate_level == 6);  // certified bound 12

  CHECK_THROWS_AS(certify_initial_stability(ctx, kDegMax2, 2), std::invalid_argument);

  ChainContext zero(zero_chain());
  const StabilityReport z = certify_initial_stability(zero, kDegMax2, 1);
  CHECK(z.certified);
  CHECK(z.certificate_level == 1);
}

TEST_CASE("certificate soundness spot-check") {
  // whenever the 2N identity certifies, direct verification from level 2N
  // holds at every computed level
  ChainContext ctx(linear_chain());
  const int N = 6;
  REQUIRE(certify_initial_stability(ctx, kDegMax2, N).certified);
  const std::vector<MonomialIdeal> chain = initial_chain(ctx, kDegMax2, 14);
  for (int n = 2 * N; n <= 14; ++n) {
    const MonomialIdeal spread(ctx.trunc(n),
                               spread_monomials(chain[2 * N - 1].min_gens(), 2 * N, n));
    REQUIRE(spread == chain[n - 1]);
  }
}

TEST_CASE("I set over the six orders") {
  ChainContext ctx(linear_chain());
  const std::vector<ISetEntry> iset = compute_I_set(ctx, six_term_orders(), 8, 8);
  int max_index = 0;
  for (const ISetEntry& e : iset) {
    REQUIRE(e.report.candidate_index.has_value());
    max_index = std::max(max_index, *e.report.candidate_index);
    CHECK(e.report.certified);
  }
  // the paper's orders with x_n < x_{n+1} all exceed the chain index 4
  for (const ISetEntry& e : iset)
    if (e.order.text() == "degmax:2" || e.order.text() == "max:1" ||
        e.order.text() == "revdegmin-inv")
      CHECK(*e.report.candidate_index >= 5);
  CHECK(max_index >= 5);

  ChainContext zero(zero_chain());
  for (const ISetEntry& e : compute_I_set(zero, six_term_orders(), 4, 4))
    CHECK(e.report.candidate_index == 1);

  ChainContext mono(ChainSpec::seeded(1, 1, {PolyQ(x(1))}));
  for (const ISetEntry& e : compute_I_set(mono, six_term_orders(), 4, 4)) {
    CHECK(e.report.candidate_index == 1);
    CHECK(e.report.certified);
  }
}

TEST_CASE("distinct initial chains") {
  ChainContext zero(zero_chain());
  CHECK(distinct_initial_chains(zero, six_term_orders(), 4).count == 1);

  ChainContext mono(ChainSpec::seeded(1, 2, {PolyQ(x(1) * x(2))}));
  const ChainPartition mono_part = distinct_initial_chains(mono, six_term_orders(), 6);
  CHECK(mono_part.count == 1);
  CHECK(mono_part.group_certified[0]);

  ChainContext ctx(linear_chain());
  const ChainPartition part = distinct_initial_chains(ctx, six_term_orders(), 8);
  CHECK(part.count >= 2);
  CHECK(part.count <= 6);
  int members = 0;
  for (const auto& g : part.groups) members += static_cast<int>(g.size());
  CHECK(members == 6);
}

TEST_CASE("intersection decomposition identity") {
  ChainContext ctx(linear_chain());
  CHECK(check_intersection_decomposition(ctx, kDegMax2, 5, 6));
  CHECK(check_intersection_decomposition(ctx, kDegMax2, 6, 6));  // N = n is trivial
  // at n = 5 the singleton intersections are all zero but in(J_5) is not
  CHECK_FALSE(check_intersection_decomposition(ctx, kDegMax2, 1, 5));
}

TEST_CASE("initial chains are inc-invariant monomial chains") {
  // spread of the initial ideal of a low level lands inside higher levels
  for (const ChainSpec& spec :
       {linear_chain(), ChainSpec::seeded(1, 2, {parse_polynomial("x1^2*x2+x1*x2^2", {1, 2})})}) {
    ChainContext ctx(spec);
    for (const Order& order : {Order::named(Family::DegMax, 2), Order::named(Family::Min)}) {
      const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, 6);
      for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n)
          for (const Monomial& g : spread_monomials(chain[m - 1].min_gens(), m, n))
            REQUIRE(chain[n - 1].contains(g));
    }
  }
}

TEST_CASE("stability condition is monotone above the candidate") {
  ChainContext ctx(linear_chain());
  const int candidate = *stability_index_upto(ctx, 8).candidate_index;
  for (int N = candidate; N <= 6; ++N)
    for (int n = N; n <= 8; ++n)
      REQUIRE(ctx.equals_level(spread_generators(ctx.level_generators(N), N, n), n));
}

TEST_CASE("monomial seed chains are their own initial chains") {
  ChainContext ctx(ChainSpec::seeded(1, 2, {PolyQ(x(1) * x(2))}));
  for (const Order& order : six_term_orders()) {
    const std::vector<MonomialIdeal> chain = initial_chain(ctx, order, 5);
    for (int n = 1; n <= 5; ++n) {
      std::vector<Monomial> gens;
      for (const PolyQ& g : ctx.level_generators(n))
        gens.push_back(g.terms().begin()->first);
      REQUIRE(chain[n - 1] == MonomialIdeal(ctx.trunc(n), std::move(gens)));
    }
  }
}

TEST_CASE("groebner support width") {
  ChainContext ctx(linear_chain());
  // level 5: reduced basis {x2-x1, x3+x1, x4+x1}, two variables apiece;
  // from level 6 on the ideal collapses to single variables
  CHECK(gb_support_report(ctx, kDegMax2, 5) == 2);
  CHECK(gb_support_report(ctx, kDegMax2, 6) == 1);

  ChainContext mono(ChainSpec::seeded(1, 1, {PolyQ(x(1))}));
  CHECK(gb_support_report(mono, kDegMax2, 5) == 1);

  ChainContext doubling(doubling_chain());
  CHECK(gb_support_report(doubling, kDegMax2, 8) >= 4);
}
