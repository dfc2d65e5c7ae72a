#pragma once

#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "divpow/divpow.hpp"

namespace testing_support {

using namespace divpow;

inline Word w(std::string_view text) { return parse_word(text); }

// basis(2, {{"x1", 1}, {"x2", 1}}) is D(2; x1, x2)
inline GammaBasisElem basis(std::uint32_t n, std::initializer_list<std::pair<const char*, std::uint32_t>> parts) {
  std::vector<Part> ps;
  for (const auto& [text, mult] : parts) ps.emplace_back(parse_word(text), mult);
  return GammaBasisElem(n, std::move(ps));
}

inline MultiPoly xi(unsigned k, unsigned i, unsigned j) { return MultiPoly::variable(VarId::xi(k, i, j)); }

inline MultiPoly tr2(unsigned k) { return xi(k, 1, 1) + xi(k, 2, 2); }

inline MultiPoly det2(unsigned k) { return xi(k, 1, 1) * xi(k, 2, 2) - xi(k, 1, 2) * xi(k, 2, 1); }

// tr(xi_k xi_l) for 2 x 2 generic matrices, written out entrywise
inline MultiPoly tr2_product(unsigned k, unsigned l) {
  MultiPoly sum;
  for (unsigned i = 1; i <= 2; ++i)
    for (unsigned j = 1; j <= 2; ++j) sum += xi(k, i, j) * xi(l, j, i);
  return sum;
}

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

inline RatMatrix random_rat_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

inline RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RatMatrix g = random_rat_matrix(rng, n, -3, 3);
    if (det(g) != 0) return g;
  }
}

}  // namespace testing_support
