#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"

using namespace divpow;
using testing_support::basis;
using testing_support::det2;
using testing_support::tr2;
using testing_support::tr2_product;
using testing_support::w;
using testing_support::xi;

TEST_CASE("generic matrices and word evaluation") {
  const GenericMatrixContext ctx(2, 2);
  CHECK(eval_word(ctx, Word()) == PolyMatrix::identity(2));
  CHECK(eval_word(ctx, w("x1")) == ctx.generic(1));
  const PolyMatrix p = eval_word(ctx, w("x1.x2"));
  for (unsigned i = 1; i <= 2; ++i)
    for (unsigned j = 1; j <= 2; ++j) CHECK(p(i - 1, j - 1) == xi(1, i, 1) * xi(2, 1, j) + xi(1, i, 2) * xi(2, 2, j));
  CHECK_THROWS_AS(eval_word(ctx, w("x3")), Error);
  CHECK_THROWS_AS(GenericMatrixContext(0, 1), Error);
  CHECK_THROWS_AS(ctx.compound(1, 3), Error);
}

TEST_CASE("characteristic generators") {
  const GenericMatrixContext ctx(2, 2);
  CHECK(char_gen(ctx, w("x1"), 1).poly == tr2(1));
  CHECK(char_gen(ctx, w("x1"), 2).poly == det2(1));
  for (std::uint32_t i = 1; i <= 2; ++i) CHECK(char_gen(ctx, w("x1.x2"), i) == char_gen(ctx, w("x2.x1"), i));
  CHECK(char_gen(ctx, w("x1.x2"), 1).poly == tr2_product(1, 2));
  CHECK(char_gen(ctx, Word(), 1).poly == MultiPoly(2));
  CHECK_THROWS_AS(char_gen(ctx, w("x1"), 3), Error);

  // trace-of-compound route against principal minors of the word product
  const GenericMatrixContext ctx3(3, 2);
  for (const char* mu : {"x1", "x1.x2", "x2.x1.x1"})
    for (std::uint32_t i = 1; i <= 3; ++i) CHECK(char_gen(ctx3, w(mu), i).poly == char_coeff(eval_word(ctx3, w(mu)), i));
}

TEST_CASE("e_i is the t^i coefficient of det(I + tM)") {
  std::mt19937_64 rng(81);
  const MultiPoly t = MultiPoly::variable(VarId::t(1));
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const RatMatrix m = testing_support::random_rat_matrix(rng, n, -4, 4);
      PolyMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = t * MultiPoly(m(i, j).get_num()) + (i == j ? 1 : 0);
      const MultiPoly d = det(a);
      for (std::size_t i = 1; i <= n; ++i)
        CHECK(d.coefficient(Monomial::of(VarId::t(1), static_cast<std::uint32_t>(i))) == char_coeff(m, i).get_num());
    }
}

TEST_CASE("norm of basis elements") {
  const GenericMatrixContext ctx(2, 2);
  CHECK(norm_basis(ctx, GammaBasisElem::unit(2)).poly == MultiPoly(1));
  CHECK(norm_basis(ctx, basis(2, {{"x1", 2}})).poly == det2(1));
  CHECK(norm_basis(ctx, basis(2, {{"x1", 1}, {"x2", 1}})).poly == tr2(1) * tr2(2) - tr2_product(1, 2));
  for (std::uint32_t i = 1; i <= 2; ++i)
    for (const char* mu : {"x1", "x2.x1", "x1.x1.x2"})
      CHECK(norm_basis(ctx, generator(2, i, w(mu))) == char_gen(ctx, w(mu), i));
  // (tr xi1)^2 = 2 det xi1 + tr(xi1^2)
  const GammaElem sq = star(GammaElem(generator(2, 1, w("x1"))), GammaElem(generator(2, 1, w("x1"))));
  CHECK(sq == GammaElem(basis(2, {{"x1", 2}}), 2) + GammaElem(basis(2, {{"x1.x1", 1}})));
  CHECK(norm(ctx, sq).poly == tr2(1) * tr2(1));
  CHECK(tr2(1) * tr2(1) == det2(1) * 2 + tr2_product(1, 1));
  CHECK_THROWS_AS(norm_basis(ctx, GammaBasisElem::unit(3)), Error);
  CHECK_THROWS_AS(norm_basis(ctx, basis(2, {{"x3", 1}})), Error);
  CHECK_THROWS_AS(norm(ctx, GammaElem(3)), Error);
}

TEST_CASE("extraction route matches the single-part route") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const GenericMatrixContext ctx(n, 2);
    for (std::uint32_t i = 1; i <= n; ++i)
      for (const Word& mu : words_up_to(2, n == 3 ? 2 : 3))
        CHECK(norm_basis_by_extraction(ctx, generator(n, i, mu)) == char_gen(ctx, mu, i));
    CHECK(norm_basis_by_extraction(ctx, GammaBasisElem::unit(n)).poly == MultiPoly(1));
  }
}

TEST_CASE("norm is multiplicative and lands in a commutative ring") {
  std::mt19937_64 rng(82);
  const GenericMatrixContext ctx(2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    const GammaElem u = random_gamma_elem(rng, 2, 2, 2), v = random_gamma_elem(rng, 2, 2, 2);
    const InvariantPoly nu = norm(ctx, u), nv = norm(ctx, v);
    CHECK(norm(ctx, star(u, v)) == nu * nv);
    CHECK(norm(ctx, star(u, v)) == norm(ctx, star(v, u)));
  }
  CHECK(norm(ctx, GammaElem(GammaBasisElem::unit(2))).poly == MultiPoly(1));
}

TEST_CASE("norm agrees with symbol-wise evaluation of decompositions") {
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const GenericMatrixContext ctx(n, 2);
    for (const auto& b : basis_elements(n, 2, 2)) {
      const GenPoly g = reduce_powers(decompose(b));
      const InvariantPoly direct = norm_basis(ctx, b);
      CHECK(norm_of_generators(ctx, g) == direct);
      CHECK(norm_of_generators(ctx, abelianize(g)) == direct);
      CHECK(norm(ctx, expand(g)) == direct);
    }
  }
  CHECK_THROWS_AS(norm_of_generators(GenericMatrixContext(2, 2), GenPoly::unit(3)), Error);
}

TEST_CASE("basis elements have nonzero norms") {
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const GenericMatrixContext ctx(n, 2);
    for (const auto& b : basis_elements(n, 2, 2)) CHECK_FALSE(norm_basis(ctx, b).poly.is_zero());
  }
}

TEST_CASE("conjugation invariance check") {
  const GenericMatrixContext ctx(2, 2);
  CHECK(check_conj_invariance(ctx, tr2(1), 20, 1));
  CHECK_FALSE(check_conj_invariance(ctx, xi(1, 1, 1), 20, 1));
  CHECK_FALSE(check_conj_invariance(ctx, xi(1, 1, 2) * xi(2, 2, 1), 20, 1));
  CHECK_THROWS_AS(check_conj_invariance(ctx, MultiPoly::variable(VarId::t(1)), 5, 1), Error);
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const GammaBasisElem b = random_basis_elem(rng, 2, 2, 3);
    CHECK(check_conj_invariance(ctx, norm_basis(ctx, b).poly, 20, 7));
  }
  // repeated runs with one seed agree
  const MultiPoly p = norm_basis(ctx, basis(2, {{"x1.x2", 1}, {"x2", 1}})).poly;
  CHECK(check_conj_invariance(ctx, p, 5, 99) == check_conj_invariance(ctx, p, 5, 99));
}
