#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace divpow;
using testing_support::basis;
using testing_support::w;

namespace {

MultiPoly x(unsigned j) { return MultiPoly::variable(VarId::x(1, j)); }
MultiPoly e(unsigned i) { return MultiPoly::variable(VarId::e(i)); }

// symmetrization of a random monomial: sum over its orbit, built by
// running over all permutations of the exponent vector
SymPoly random_symmetric(std::mt19937_64& rng, std::uint32_t n, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> ex(0, 2);
  std::uniform_int_distribution<long> c(-3, 3);
  MultiPoly sum;
  for (int k = 0; k < 2; ++k) {
    std::vector<unsigned> exps(n);
    unsigned total = 0;
    for (auto& v : exps) {
      v = ex(rng);
      total += v;
    }
    if (total > max_degree) continue;
    std::sort(exps.begin(), exps.end());
    const long coeff = c(rng);
    do {
      std::vector<Monomial::Factor> fs;
      for (unsigned j = 0; j < n; ++j)
        if (exps[j]) fs.emplace_back(VarId::x(1, j + 1), exps[j]);
      sum += MultiPoly::term(Monomial(fs), coeff);
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  return {n, sum};
}

}  // namespace

TEST_CASE("elementary and power sums") {
  CHECK(elementary(1, 2).poly == x(1) + x(2));
  CHECK(elementary(2, 2).poly == x(1) * x(2));
  CHECK(power_sum(2, 2).poly == x(1) * x(1) + x(2) * x(2));
  CHECK(elementary(3, 4).poly.size() == 4);
  CHECK_THROWS_AS(elementary(0, 2), Error);
  CHECK_THROWS_AS(elementary(3, 2), Error);
  CHECK_THROWS_AS(power_sum(0, 2), Error);
}

TEST_CASE("expressing in the elementary basis") {
  CHECK(express_in_elementary(elementary(1, 2)).poly == e(1));
  CHECK(express_in_elementary(power_sum(2, 2)).poly == e(1) * e(1) - 2 * e(2));
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t i = 1; i <= n; ++i) CHECK(express_in_elementary(elementary(i, n)).poly == e(i));
  CHECK_THROWS_AS(express_in_elementary({2, x(1)}), Error);
  CHECK_THROWS_AS(express_in_elementary({2, x(1) * x(1) * x(2)}), Error);
  CHECK(express_in_elementary({3, MultiPoly(5)}).poly == MultiPoly(5));
}

TEST_CASE("elementary rewriting inverts substitution") {
  std::mt19937_64 rng(61);
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const SymPoly f = random_symmetric(rng, n, 6);
      REQUIRE(is_symmetric(f.poly, n));
      const EPoly p = express_in_elementary(f);
      CHECK(substitute_elementary(p) == f);
      CHECK(express_in_elementary(substitute_elementary(p)) == p);
    }
}

TEST_CASE("Newton identities") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t r = 1; r <= 6; ++r) {
      MultiPoly sum = power_sum(r, n).poly;
      for (std::uint32_t i = 1; i < r; ++i) {
        if (i > n) break;
        const MultiPoly t = elementary(i, n).poly * power_sum(r - i, n).poly;
        sum += (i % 2 ? Int(-1) : Int(1)) * t;
      }
      if (r <= n) sum += (r % 2 ? Int(-1) : Int(1)) * Int(r) * elementary(r, n).poly;
      CHECK(sum.is_zero());
    }
}

TEST_CASE("plethysm with power sums") {
  CHECK(plethysm_pk(elementary(1, 3), 2) == power_sum(2, 3));
  CHECK(plethysm_pk(power_sum(2, 3), 3) == power_sum(6, 3));
  CHECK(plethysm_pk(elementary(2, 2), 2).poly == x(1) * x(1) * x(2) * x(2));
  CHECK_THROWS_AS(plethysm_pk(elementary(1, 2), 0), Error);
}

TEST_CASE("P_hk") {
  CHECK(P_hk(1, 1, 3).poly == e(1));
  CHECK(P_hk(1, 2, 2).poly == e(1) * e(1) - 2 * e(2));
  CHECK(P_hk(2, 2, 2).poly == e(2) * e(2));
  CHECK(P_hk(2, 2, 3).poly == e(2) * e(2) - 2 * e(1) * e(3));
  CHECK_THROWS_AS(P_hk(0, 1, 2), Error);
  CHECK_THROWS_AS(P_hk(3, 1, 2), Error);
  CHECK_THROWS_AS(P_hk(1, 0, 2), Error);
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t h = 1; h <= n; ++h)
      for (std::uint32_t k = 1; k <= 3; ++k)
        CHECK(substitute_elementary(P_hk(h, k, n)) == plethysm_pk(elementary(h, n), k));
}

TEST_CASE("index sequences") {
  const auto seqs = index_sequences({3, e(1) * e(1) * e(3) - 2 * e(2)});
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].first == std::vector<std::uint32_t>{1, 1, 3});
  CHECK(seqs[0].second == 1);
  CHECK(seqs[1].first == std::vector<std::uint32_t>{2});
  CHECK(seqs[1].second == -2);
  CHECK_THROWS_AS(index_sequences({2, e(3)}), Error);
}

TEST_CASE("evaluation at generators") {
  // 1^(1) x (x1^2)^(1) = E(1,x1) * E(1,x1) - 2 E(2,x1)
  const GammaElem lhs(basis(2, {{"x1.x1", 1}}));
  const GammaElem rhs = star(GammaElem(generator(2, 1, w("x1"))), GammaElem(generator(2, 1, w("x1")))) -
                        GammaElem(generator(2, 2, w("x1"))) * Int(2);
  CHECK(lhs == rhs);
  CHECK(evaluate_at_generators(P_hk(1, 2, 2), w("x1")) == lhs);
  CHECK(evaluate_at_generators({2, MultiPoly(3)}, w("x1")) == GammaElem(GammaBasisElem::unit(2), 3));
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint32_t h = 1; h <= n; ++h)
      for (std::uint32_t k = 1; k <= 2; ++k)
        CHECK(evaluate_at_generators(P_hk(h, k, n), w("x1.x2")) ==
              GammaElem(generator(n, h, power(w("x1.x2"), k))));
}
