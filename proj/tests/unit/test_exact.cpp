#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace divpow;
using testing_support::xi;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, unsigned vars, unsigned terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> var(1, vars), ex(0, max_exp);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<MultiPoly::Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> fs;
    for (unsigned v = 1; v <= vars; ++v)
      if (unsigned e = ex(rng); e > 0) fs.emplace_back(VarId::xi(1, v, var(rng)), e);
    ts.emplace_back(Monomial(fs), Int(coeff(rng)));
  }
  return MultiPoly::from_terms(ts);
}

}  // namespace

TEST_CASE("difference of squares") {
  const MultiPoly a = xi(1, 1, 1);
  CHECK((a + 1) * (a - 1) == a * a - 1);
  CHECK(to_string((a + 1) * (a - 1)) == "xi(1,1,1)^2 - 1");
  CHECK((a * 0).is_zero());
  CHECK(to_string(MultiPoly()) == "0");
}

TEST_CASE("evaluation") {
  const MultiPoly p = pow(xi(1, 1, 1), 2) - 1;
  CHECK(poly_eval(p, {{VarId::xi(1, 1, 1), Rat(3)}}) == 8);
  CHECK(poly_eval(MultiPoly(7), {}) == 7);
  try {
    poly_eval(p + xi(2, 1, 2), {{VarId::xi(1, 1, 1), Rat(3)}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("xi(2,1,2)") != std::string::npos);
  }
}

TEST_CASE("rationals and binomials") {
  CHECK(parse_rat("-3/6") == make_rat(-1, 2));
  CHECK(parse_rat("4") == 4);
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(Rat(-5)) == "-5");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(make_rat(1, 0), Error);
  // Pascal's rule as the oracle
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("variable order and grlex") {
  CHECK(VarId::xi(3, 2, 2) < VarId::t(1));
  CHECK(VarId::t(9) < VarId::x(1, 1));
  CHECK(VarId::x(1, 4) < VarId::e(1));
  CHECK(VarId::xi(1, 1, 2) < VarId::xi(1, 2, 1));
  const Monomial a = Monomial::of(VarId::xi(1, 1, 1));
  const Monomial b = Monomial::of(VarId::xi(1, 1, 2));
  // higher degree first, then the earlier variable wins
  CHECK(grlex_compare(b * b, a) > 0);
  CHECK(grlex_compare(a, b) > 0);
  CHECK(grlex_compare(a * b, a * b) == 0);
  const MultiPoly p = xi(1, 1, 2) + xi(1, 1, 1) * xi(1, 1, 1) + 3;
  CHECK(to_string(p) == "xi(1,1,1)^2 + xi(1,1,2) + 3");
  CHECK(to_string(VarId::t(2)) == "t(2)");
  CHECK(to_string(VarId::e(3)) == "e(3)");
  CHECK(to_string(VarId::x(1, 2)) == "x(1,2)");
}

TEST_CASE("monomial arithmetic") {
  const Monomial a({{VarId::xi(1, 1, 1), 2}, {VarId::xi(1, 2, 1), 1}, {VarId::xi(1, 1, 1), 1}});
  CHECK(a.exponent(VarId::xi(1, 1, 1)) == 3);
  CHECK(a.degree() == 4);
  const Monomial b = Monomial::of(VarId::xi(1, 1, 1), 2);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a / b) * b == a);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 4, 2), q = random_poly(rng, 3, 4, 2), r = random_poly(rng, 3, 3, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == MultiPoly());
    CHECK(pow(p, 3) == p * p * p);
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 3, 2), q = random_poly(rng, 3, 3, 2);
    if (q.is_zero()) continue;
    CHECK(divide_exact(p * q, q) == p);
  }
  CHECK_THROWS_AS(divide_exact(xi(1, 1, 1) + 1, xi(1, 1, 2)), Error);
  CHECK_THROWS_AS(divide_exact(xi(1, 1, 1), MultiPoly()), Error);
}

TEST_CASE("truncated product agrees with filtering the full product") {
  std::mt19937_64 rng(13);
  const Monomial caps({{VarId::xi(1, 1, 1), 2}, {VarId::xi(1, 1, 2), 1}});
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(rng, 2, 5, 3), q = random_poly(rng, 2, 5, 3);
    std::vector<MultiPoly::Term> kept;
    const MultiPoly full = p * q;
    for (const auto& [m, c] : full.terms()) {
      bool ok = true;
      for (const auto& [v, cap] : caps.factors()) ok = ok && m.exponent(v) <= cap;
      if (ok) kept.emplace_back(m, c);
    }
    CHECK(mul_truncated(p, q, caps) == MultiPoly::from_terms(kept));
  }
}

TEST_CASE("substitution") {
  const MultiPoly p = xi(1, 1, 1) * xi(1, 1, 2) + 2;
  const MultiPoly s = poly_substitute(p, {{VarId::xi(1, 1, 1), xi(2, 1, 1) + 1}});
  CHECK(s == xi(2, 1, 1) * xi(1, 1, 2) + xi(1, 1, 2) + 2);
  CHECK(p.variables().size() == 2);
  CHECK(MultiPoly(5).is_constant());
  CHECK(MultiPoly(5).constant_value() == 5);
  CHECK(p.coefficient(Monomial()) == 2);
}
