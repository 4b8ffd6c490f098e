#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "uea/fp.hpp"
#include "uea/linalg.hpp"
#include "uea/monomial.hpp"
#include "uea/poly.hpp"

using namespace uea;

TEST_CASE("field context validates the modulus") {
  CHECK_THROWS_AS(Fp(1), std::invalid_argument);
  CHECK_THROWS_AS(Fp(4), std::invalid_argument);
  CHECK_THROWS_AS(Fp(2026), std::invalid_argument);
  CHECK_NOTHROW(Fp(2));
  CHECK_NOTHROW(Fp(3));
  CHECK_NOTHROW(Fp(1009));
}

TEST_CASE("field arithmetic wraps and inverts") {
  Fp f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-14) == 0);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(3) == 4);
  CHECK(f.mul(5, 5) == 4);
  CHECK(f.pow(3, 6) == 1); // Fermat
  for (uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.inv(14), std::domain_error);
}

TEST_CASE("monomial accessors and partial products") {
  Monomial m = Monomial::var(0, 2) * Monomial::var(2);
  CHECK(m.degree() == 3);
  CHECK(m.min_var() == 0);
  CHECK(m.max_var() == 2);
  CHECK(to_string(m) == "x1^2*x3");
  CHECK(to_string(Monomial::one()) == "1");
  CHECK(m.times_var(2).e[2] == 2);
  CHECK(m.div_var(0).degree() == 2);
  CHECK_THROWS_AS(m.div_var(1), std::domain_error);
  CHECK_THROWS_AS(Monomial::var(kMaxVars), std::out_of_range);
}

TEST_CASE("grlex order: degree first, then lex with x1 largest") {
  Monomial x1 = Monomial::var(0), x2 = Monomial::var(1), x3 = Monomial::var(2);
  CHECK(grlex_cmp(x1, x2) > 0);
  CHECK(grlex_cmp(x2, x3) > 0);
  CHECK(grlex_cmp(x1 * x2 * x3, x1 * x1) > 0); // degree dominates
  CHECK(grlex_cmp(x1 * x1, x1 * x2) > 0);
  CHECK(grlex_cmp(x1 * x2, x2 * x2) > 0);
  CHECK(grlex_cmp(x1, x1) == 0);
}

TEST_CASE("monomial enumeration is complete and grlex-descending") {
  auto deg2 = monomials_of_degree(2, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(to_string(deg2[0]) == "x1^2");
  CHECK(to_string(deg2[1]) == "x1*x2");
  CHECK(to_string(deg2[2]) == "x2^2");

  auto upto = monomials_up_to(3, 2); // C(5,3) = 10
  REQUIRE(upto.size() == 10);
  CHECK(to_string(upto.front()) == "x1^2");
  CHECK(upto.back().is_one());
  for (size_t i = 0; i + 1 < upto.size(); ++i) CHECK(grlex_cmp(upto[i], upto[i + 1]) > 0);

  CHECK_THROWS_AS(monomials_of_degree(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(monomials_of_degree(2, -1), std::invalid_argument);
}

TEST_CASE("polynomial construction validates context") {
  CHECK_THROWS_AS(Poly(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Poly(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(Poly(5, kMaxVars + 1), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic over F_5") {
  uint32_t p = 5;
  Poly x1 = Poly::variable(p, 3, 0), x2 = Poly::variable(p, 3, 1);
  Poly f = x1 * x1 - x2.scaled(2);
  CHECK(f.str() == "x1^2 + 3*x2");
  CHECK(f.total_degree() == 2);
  CHECK(f.coeff(Monomial::var(1)) == 3);
  CHECK((f - f).is_zero());
  CHECK((f - f).str() == "0");
  CHECK((f - f).total_degree() == -1);

  Poly g = (x1 + x2) * (x1 - x2);
  CHECK(g == x1 * x1 - x2 * x2);
  CHECK((-g + g).is_zero());

  CHECK(f.leading_term().second == 1);
  CHECK(to_string(f.leading_term().first) == "x1^2");

  // Cancellation never leaves explicit zero terms behind.
  Poly h = x1;
  h.add_term(Monomial::var(0), -1);
  CHECK(h.term_count() == 0);
}

TEST_CASE("pow matches repeated multiplication and the binomial pattern") {
  Poly x1 = Poly::variable(2, 2, 0), x2 = Poly::variable(2, 2, 1);
  Poly sq = (x1 + x2).pow(2);
  CHECK(sq == x1 * x1 + x2 * x2); // cross terms vanish mod 2

  Poly c = Poly::constant(7, 2, 3);
  CHECK(c.pow(0).str() == "1");
  Poly f = x1 * x1 + x2;
  CHECK(f.pow(3) == f * f * f);
}

TEST_CASE("derivative reduces exponent coefficients mod p") {
  uint32_t p = 5;
  Poly x1 = Poly::variable(p, 2, 0);
  CHECK(Poly::variable(p, 2, 0, 3).derivative(0).str() == "3*x1^2");
  CHECK(Poly::variable(p, 2, 0, 5).derivative(0).is_zero());
  CHECK(x1.derivative(1).is_zero());
  Poly f = Poly::variable(p, 2, 0, 2) * Poly::variable(p, 2, 1, 3);
  CHECK(f.derivative(1).str() == "3*x1^2*x2^2");
}

TEST_CASE("evaluation and support") {
  uint32_t p = 7;
  Poly f = Poly::variable(p, 3, 0) * Poly::variable(p, 3, 2) + Poly::constant(p, 3, 4);
  CHECK(f.eval({2, 0, 3}) == 3); // 2*3 + 4 = 10 = 3 mod 7
  auto sv = f.support_vars();
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == 0);
  CHECK(sv[1] == 2);
}

TEST_CASE("rref ranks and kernels are canonical") {
  Fp f(5);
  FpMat A(f, 1, 2);
  A.at(0, 0) = 1;
  A.at(0, 1) = 1;
  auto ker = kernel_basis(A);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<uint32_t>{4, 1}); // -1 at the pivot, 1 at the free column

  FpMat B(f, 3, 3);
  // rows (1,2,3), (2,4,6), (0,1,1): rank 2
  uint32_t rows[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) B.at(r, c) = rows[r][c];
  CHECK(B.rank() == 2);
  auto kerB = kernel_basis(B);
  REQUIRE(kerB.size() == 1);
  // Every kernel vector must actually annihilate the rows.
  for (size_t r = 0; r < 3; ++r) {
    uint32_t dot = 0;
    for (size_t c = 0; c < 3; ++c) dot = f.add(dot, f.mul(rows[r][c], kerB[0][c]));
    CHECK(dot == 0);
  }

  CHECK(in_row_space(B, {1, 2, 3}));
  CHECK(in_row_space(B, {3, 7, 10})); // row0 + row2 scaled
  CHECK_FALSE(in_row_space(B, {0, 0, 1}));
}

TEST_CASE("echelon span is a canonical form for subspaces") {
  Fp f(7);
  std::vector<std::vector<uint32_t>> u = {{1, 2, 0}, {0, 0, 1}};
  std::vector<std::vector<uint32_t>> v = {{2, 4, 1}, {3, 6, 6}};
  CHECK(echelon_span(f, u, 3) == echelon_span(f, v, 3));
  std::vector<std::vector<uint32_t>> w = {{1, 0, 0}};
  CHECK(echelon_span(f, u, 3) != echelon_span(f, w, 3));
  CHECK(echelon_span(f, {}, 3).empty());
}

TEST_CASE("polynomial determinants expand exactly") {
  uint32_t p = 5;
  auto X = [&](int i) { return Poly::variable(p, 4, i); };

  PolyMatrix m = PolyMatrix::zeros(p, 4, 2, 2);
  m.at(0, 0) = X(0);
  m.at(0, 1) = X(1);
  m.at(1, 0) = X(2);
  m.at(1, 1) = X(3);
  CHECK(poly_det(m) == X(0) * X(3) - X(1) * X(2));

  PolyMatrix z = PolyMatrix::zeros(p, 4, 3, 3);
  CHECK(poly_det(z).is_zero());

  // Antisymmetric 2x2 with a common factor.
  PolyMatrix a = PolyMatrix::zeros(p, 4, 2, 2);
  a.at(0, 1) = X(2);
  a.at(1, 0) = -X(2);
  CHECK(poly_det(a) == X(2) * X(2));
}

TEST_CASE("polynomial matrix rank over the function field") {
  uint32_t p = 5;
  auto X = [&](int i) { return Poly::variable(p, 3, i); };

  PolyMatrix z = PolyMatrix::zeros(p, 3, 3, 3);
  CHECK(poly_matrix_rank(z) == 0);

  PolyMatrix a = PolyMatrix::zeros(p, 3, 3, 3);
  a.at(0, 1) = X(2);
  a.at(1, 0) = -X(2);
  CHECK(poly_matrix_rank(a) == 2);

  // Proportional rows collapse to rank 1 even though entries are nonzero.
  PolyMatrix b = PolyMatrix::zeros(p, 3, 2, 2);
  b.at(0, 0) = X(0);
  b.at(0, 1) = X(1);
  b.at(1, 0) = X(0).scaled(2);
  b.at(1, 1) = X(1).scaled(2);
  CHECK(poly_matrix_rank(b) == 1);

  // Full rank needs a nonzero top minor somewhere, not everywhere.
  PolyMatrix c = PolyMatrix::zeros(p, 3, 2, 3);
  c.at(0, 0) = X(0);
  c.at(1, 2) = X(1);
  CHECK(poly_matrix_rank(c) == 2);
}
