#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "equichain/groebner.hpp"
#include "equichain/linalg_oracle.hpp"
#include "equichain/parse.hpp"

using namespace equichain;

namespace {

Monomial x(int col, int exp = 1) { return Monomial::var(1, col, exp); }

/// The Inc-orbit spread of x1^2 x2 + x1 x2^2 within R_n.
std::vector<PolyQ> remark_orbit(int n) {
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

Polynomial<GFp> random_homogeneous_gf2(std::mt19937& rng, int n, int d) {
  const std::vector<Monomial> monos = monomials_of_degree({1, n}, d);
  std::uniform_int_distribution<int> bit(0, 1);
  Polynomial<GFp> f;
  while (f.is_zero())
    for (const Monomial& m : monos)
      if (bit(rng)) f.add_term(m, GFp(1));
  return f;
}

}  // namespace

TEST_CASE("graded pieces") {
  const auto orbit3 = remark_orbit(3);
  const GradedPiece<Rational> piece = graded_piece(orbit3, {1, 3}, 3);
  CHECK(piece.dimension() == 3);

  CHECK(graded_piece(std::vector<PolyQ>{}, {1, 3}, 2).dimension() == 0);

  const GradedPiece<Rational> principal = graded_piece(std::vector<PolyQ>{PolyQ(x(1))}, {1, 2}, 2);
  CHECK(principal.dimension() == 2);  // x1^2 and x1 x2
}

TEST_CASE("graded piece dimension is monotone in n") {
  for (int d = 1; d <= 3; ++d) {
    int prev = -1;
    for (int n = 2; n <= 5; ++n) {
      const int dim = graded_piece(remark_orbit(n), {1, n}, d).dimension();
      CHECK(dim >= prev);
      prev = dim;
    }
  }
}

TEST_CASE("permuted-lex initial spaces of the orbit ideal") {
  // truncation n'+1 with (n, n') = (1, 2)
  const auto orbit3 = remark_orbit(3);
  const GradedPiece<Rational> piece3 = graded_piece(orbit3, {1, 3}, 3);

  const Order sigma1 = Order::permuted_lex(Permutation::reversal(1));
  const InitialSpace<Rational> sp1 = initial_space(sigma1, piece3);
  REQUIRE(sp1.total);
  const Monomial probe = x(1, 2) * x(2);  // x1^2 x2
  CHECK(std::count(sp1.pivots.begin(), sp1.pivots.end(), probe) == 1);

  const Order sigma2 = Order::permuted_lex(Permutation::reversal(2));
  const InitialSpace<Rational> sp2 = initial_space(sigma2, piece3);
  REQUIRE(sp2.total);
  CHECK(std::count(sp2.pivots.begin(), sp2.pivots.end(), probe) == 0);

  CHECK(monomial_in_initial(sigma1, orbit3, {1, 3}, probe));
  CHECK_FALSE(monomial_in_initial(sigma2, orbit3, {1, 3}, probe));

  // (n, n') = (2, 3) at truncation 4
  const auto orbit4 = remark_orbit(4);
  const Monomial probe2 = x(1, 2) * x(3);  // x1^2 x3
  const Order sigma3 = Order::permuted_lex(Permutation::reversal(3));
  CHECK(monomial_in_initial(sigma2, orbit4, {1, 4}, probe2));
  CHECK_FALSE(monomial_in_initial(sigma3, orbit4, {1, 4}, probe2));
}

TEST_CASE("preorder initial spaces of the orbit ideal") {
  const auto orbit3 = remark_orbit(3);
  const GradedPiece<Rational> piece = graded_piece(orbit3, {1, 3}, 3);

  const Order max3 = Order::named(Family::Max, 3);
  const InitialSpace<Rational> sp = initial_space(max3, piece);
  REQUIRE_FALSE(sp.total);
  CHECK(sp.leading_forms.size() == 3);

  // x1 x2^2 is the Max(2) leading form of the (1,2) orbit element
  CHECK(monomial_in_initial(Order::named(Family::Max, 2), orbit3, {1, 3}, x(1) * x(2, 2)));
  // under Max(3) any element containing x1 x2^2 also contains x1^2 x2
  CHECK_FALSE(monomial_in_initial(max3, orbit3, {1, 3}, x(1) * x(2, 2)));
  // the x1 x3^2 leading form of the (1,3) element is in the Max(3) space
  CHECK(monomial_in_initial(max3, orbit3, {1, 3}, x(1) * x(3, 2)));

  CHECK_FALSE(monomial_in_initial(max3, std::vector<PolyQ>{}, {1, 3}, x(1)));
}

TEST_CASE("oracle pivots match buchberger initial ideals") {
  const std::vector<std::vector<PolyQ>> ideals = {
      remark_orbit(4),
      {parse_polynomial("x1+x3", {1, 4})},
      {PolyQ(x(1) * x(2)), PolyQ(x(2) * x(3))},
  };
  for (const Order& order : six_term_orders())
    for (const auto& gens : ideals) {
      const MonomialIdeal in_gb = initial_ideal(gens, order, {1, 4});
      for (int d = 0; d <= 4; ++d) {
        const InitialSpace<Rational> sp = initial_space(order, graded_piece(gens, {1, 4}, d));
        REQUIRE(sp.total);
        std::vector<Monomial> pivots = sp.pivots;
        std::sort(pivots.begin(), pivots.end(), MonomialKeyLess{});
        REQUIRE(pivots == in_gb.degree_slice(d));
      }
    }
}

TEST_CASE("gf(2) full enumeration validates the refinement method") {
  GFp::set_modulus(2);
  std::mt19937 rng(123);
  const std::vector<Order> orders = {Order::named(Family::Max, 2), Order::named(Family::Max, 3),
                                     Order::named(Family::Deg),
                                     Order::parse("matrix:[[1,1,1,1],[3,-1,-1,-1]]")};
  for (int iter = 0; iter < 10; ++iter) {
    std::uniform_int_distribution<int> ndist(3, 4);
    const int n = ndist(rng);
    std::vector<Polynomial<GFp>> gens = {random_homogeneous_gf2(rng, n, 2)};
    if (iter % 2) gens.push_back(random_homogeneous_gf2(rng, n, 2));
    const GradedPiece<GFp> piece = graded_piece(gens, {1, n}, 3);
    if (piece.dimension() > 12) continue;
    for (const Order& order : orders) REQUIRE(preorder_initial_space_cross_check(order, piece));
  }
}

TEST_CASE("gf(2) piece dimensions stay exact") {
  GFp::set_modulus(2);
  // over GF(2) the orbit polynomial keeps both terms; dimensions match Q
  std::vector<Polynomial<GFp>> gens;
  for (const PolyQ& f : remark_orbit(3)) gens.push_back(to_gfp(f));
  CHECK(graded_piece(gens, {1, 3}, 3).dimension() == 3);
}
