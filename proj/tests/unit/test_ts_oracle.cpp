#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace divpow;
using testing_support::basis;
using testing_support::w;

namespace {

SymTensor tensor(std::uint32_t n, std::initializer_list<std::vector<const char*>> rows) {
  SymTensor s(n);
  for (const auto& row : rows) {
    SymTensor::Slots slots;
    for (const char* t : row) slots.push_back(parse_word(t));
    s.add_term(slots, 1);
  }
  return s;
}

// f (x) ... (x) f expanded slot by slot
SymTensor tensor_power(const FreeElem& f, std::uint32_t n) {
  SymTensor out(n);
  std::vector<std::pair<Word, Int>> terms(f.terms().begin(), f.terms().end());
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    SymTensor::Slots slots;
    Int c = 1;
    for (auto i : idx) {
      slots.push_back(terms[i].first);
      c *= terms[i].second;
    }
    out.add_term(slots, c);
    std::size_t k = 0;
    while (k < n && ++idx[k] == terms.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("embedding examples") {
  CHECK(embed(basis(2, {{"x1", 1}})) == tensor(2, {{"x1", "1"}, {"1", "x1"}}));
  CHECK(embed(basis(2, {{"x1", 2}})) == tensor(2, {{"x1", "x1"}}));
  CHECK(embed(basis(2, {{"x1", 1}, {"x2", 1}})) == tensor(2, {{"x1", "x2"}, {"x2", "x1"}}));
  CHECK(embed(GammaBasisElem::unit(3)) == tensor(3, {{"1", "1", "1"}}));
  // 3!/(1!2!) arrangements
  CHECK(embed(basis(3, {{"x2", 1}, {"x1", 2}})).terms().size() == 3);
}

TEST_CASE("slot-wise product") {
  const SymTensor p = ts_mul(embed(basis(2, {{"x1", 1}})), embed(basis(2, {{"x2", 1}})));
  CHECK(p == tensor(2, {{"x1", "x2"}, {"x2", "x1"}, {"x1.x2", "1"}, {"1", "x1.x2"}}));
  CHECK(to_string(tensor(2, {{"x1", "1"}})) == "x1 (x) 1");
  CHECK_THROWS_AS(ts_mul(SymTensor(2), SymTensor(3)), Error);
  CHECK_THROWS_AS(SymTensor(2).add_term({w("x1")}, 1), Error);
}

TEST_CASE("unit and grading") {
  std::mt19937_64 rng(51);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const SymTensor one = embed(GammaBasisElem::unit(n));
    for (int trial = 0; trial < 20; ++trial) {
      const GammaElem u = random_gamma_elem(rng, n, 2, 3), v = random_gamma_elem(rng, n, 2, 2);
      const SymTensor s = embed(u), t = embed(v);
      CHECK(ts_mul(one, s) == s);
      CHECK(ts_mul(s, one) == s);
      CHECK(s.is_symmetric());
      // homogeneous inputs give homogeneous outputs of the summed degree
      for (const auto& [sa, ca] : s.terms())
        for (const auto& [tb, cb] : t.terms()) {
          std::size_t da = 0, db = 0;
          for (const auto& x : sa) da += x.degree();
          for (const auto& x : tb) db += x.degree();
          SymTensor a(n), b(n);
          a.add_term(sa, 1);
          b.add_term(tb, 1);
          const SymTensor ab = ts_mul(a, b);
          for (const auto& [pc, c] : ab.terms()) {
            std::size_t d = 0;
            for (const auto& x : pc) d += x.degree();
            CHECK(d == da + db);
          }
        }
    }
  }
}

TEST_CASE("equality") {
  const SymTensor s = embed(basis(2, {{"x1", 1}}));
  CHECK(ts_equal(s, s));
  CHECK_FALSE(ts_equal(s, s + tensor(2, {{"x1", "x1"}})));
  CHECK_FALSE(tensor(2, {{"x1", "1"}}).is_symmetric());
}

TEST_CASE("embedding is injective on the basis") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::set<SymTensor::Terms> seen;
    const auto all = basis_elements(n, 2, 3);
    for (const auto& b : all) seen.insert(embed(b).terms());
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("gamma^n(f) maps to f^(x)n") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      FreeElem f;
      for (int k = 0; k < 3; ++k) f.add_term(random_word(rng, 2, 0, 2), coeff(rng));
      if (f.is_zero()) continue;
      CHECK(embed(gamma_power(f, n)) == tensor_power(f, n));
    }
}

TEST_CASE("star matches the tensor model on small pairs") {
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const auto all = basis_elements(n, 2, 2);
    for (const auto& a : all)
      for (const auto& b : all) CHECK(embed(star(a, b)) == ts_mul(embed(a), embed(b)));
  }
}
