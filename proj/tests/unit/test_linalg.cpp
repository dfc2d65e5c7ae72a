#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace divpow;
using testing_support::rat_matrix;
using testing_support::xi;

namespace {

PolyMatrix generic(unsigned k, unsigned n) {
  PolyMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = xi(k, i + 1, j + 1);
  return m;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<long> c(-2, 2);
  std::uniform_int_distribution<unsigned> pick(1, 3);
  PolyMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m(i, j) = xi(1, 1, pick(rng)) * c(rng) + c(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  for (unsigned n = 0; n <= 5; ++n) CHECK(det(PolyMatrix::identity(n)) == MultiPoly(1));
  CHECK(det(generic(1, 2)) == xi(1, 1, 1) * xi(1, 2, 2) - xi(1, 1, 2) * xi(1, 2, 1));
  CHECK(det(generic(1, 2) * generic(2, 2)) == det(generic(1, 2)) * det(generic(2, 2)));
  CHECK_THROWS_AS(det(PolyMatrix(2, 3)), Error);
  CHECK(det(rat_matrix({{1, 2}, {3, 4}})) == -2);
}

TEST_CASE("cofactor, Bareiss and Laplace agree") {
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      const PolyMatrix m = random_poly_matrix(rng, n);
      const MultiPoly d = det_cofactor(m);
      CHECK(det_bareiss(m) == d);
      CHECK(laplace_det(m, [](const MultiPoly& a, const MultiPoly& b) { return a * b; }) == d);
    }
  // the generic 3 x 3 determinant has 6 terms
  CHECK(det_bareiss(generic(1, 3)).size() == 6);
  CHECK(det_bareiss(generic(1, 3)) == det_cofactor(generic(1, 3)));
}

TEST_CASE("characteristic coefficients") {
  const PolyMatrix x = generic(1, 2);
  CHECK(char_coeff(x, 1) == xi(1, 1, 1) + xi(1, 2, 2));
  CHECK(char_coeff(x, 2) == det(x));
  CHECK_THROWS_AS(char_coeff(x, 0), Error);
  CHECK_THROWS_AS(char_coeff(x, 3), Error);

  // t^n + sum (-1)^i e_i t^(n-i) against a direct expansion of det(tI - M)
  std::mt19937_64 rng(22);
  const MultiPoly t = MultiPoly::variable(VarId::t(1));
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix m = testing_support::random_rat_matrix(rng, 3, -6, 6);
    PolyMatrix shifted(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) shifted(i, j) = (i == j ? t : MultiPoly()) - MultiPoly(m(i, j).get_num());
    MultiPoly expected = pow(t, 3);
    for (std::size_t i = 1; i <= 3; ++i) {
      const Int e = char_coeff(m, i).get_num();
      expected += pow(t, static_cast<unsigned>(3 - i)) * (i % 2 ? Int(-e) : e);
    }
    CHECK(det_cofactor(shifted) == expected);
  }
}

TEST_CASE("characteristic coefficients are conjugation invariant") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      RatMatrix m = testing_support::random_rat_matrix(rng, n, -5, 5);
      m(0, 0) = make_rat(1, 3);
      const RatMatrix g = testing_support::random_invertible(rng, n);
      const RatMatrix c = g * m * inverse(g);
      for (std::size_t i = 1; i <= n; ++i) CHECK(char_coeff(c, i) == char_coeff(m, i));
    }
}

TEST_CASE("compound matrices") {
  std::mt19937_64 rng(24);
  const RatMatrix a = testing_support::random_rat_matrix(rng, 4, -3, 3);
  const RatMatrix b = testing_support::random_rat_matrix(rng, 4, -3, 3);
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(compound(a * b, i) == compound(a, i) * compound(b, i));
    CHECK(trace(compound(a, i)) == char_coeff(a, i));
  }
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(3, 0).size() == 1);
}

TEST_CASE("rank, inverse and linear systems") {
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(rat_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(rat_matrix({{1, 2, 3}, {4, 5, 6}})) == 2);
  RatMatrix half = rat_matrix({{1, 1}, {1, 1}});
  half(0, 1) = make_rat(1, 2);
  CHECK(rank(half) == 2);

  const RatMatrix m = rat_matrix({{2, 1}, {7, 4}});
  CHECK(inverse(m) * m == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(rat_matrix({{1, 2}, {2, 4}})), Error);

  const RatMatrix s = rat_matrix({{1, 2, 3}, {2, 4, 6}});
  const auto kernel = nullspace(s);
  CHECK(kernel.size() == 2);
  for (const auto& k : kernel) CHECK(apply(s, k) == std::vector<Rat>{0, 0});

  const auto sol = solve_affine(s, {Rat(1), Rat(2)});
  REQUIRE(sol.has_value());
  CHECK(apply(s, sol->particular) == std::vector<Rat>{1, 2});
  CHECK(sol->kernel.size() == 2);
  CHECK_FALSE(solve_affine(s, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(RatMatrix(2, 3) * RatMatrix(2, 3), Error);
  CHECK_THROWS_AS(RatMatrix(2, 2) + RatMatrix(3, 3), Error);
  CHECK_THROWS_AS(trace(RatMatrix(2, 3)), Error);
}
