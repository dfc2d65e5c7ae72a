#pragma once

// Symmetric polynomials in x(1,1)..x(1,n): elementary and power-sum bases,
// rewriting in the elementary basis, plethysm with p_r and the polynomials
// P_{h,k} = e_h . p_k expressed in the e's.

#include <cstdint>
#include <utility>
#include <vector>

#include "divpow/exact.hpp"
#include "divpow/gamma.hpp"

namespace divpow {

/// Symmetric polynomial in the n variables x(1,1)..x(1,n).
struct SymPoly {
  std::uint32_t n = 0;
  MultiPoly poly;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

/// Polynomial in the formal symbols e(1)..e(n).
struct EPoly {
  std::uint32_t n = 0;
  MultiPoly poly;

  friend bool operator==(const EPoly&, const EPoly&) = default;
};

SymPoly elementary(std::uint32_t i, std::uint32_t n);
SymPoly power_sum(std::uint32_t r, std::uint32_t n);

/// Checks that only x(1,1..n) occur and that every adjacent transposition
/// fixes p.
bool is_symmetric(const MultiPoly& p, std::uint32_t n);

/// Leading-term reduction; throws Error on non-symmetric input.
EPoly express_in_elementary(const SymPoly& f);

/// P(e_1..e_n) with e_i the elementary symmetric polynomials.
SymPoly substitute_elementary(const EPoly& p);

/// g(x_1^r, ..., x_n^r).
SymPoly plethysm_pk(const SymPoly& g, std::uint32_t r);

/// e_h . p_k in the e-basis, for 1 <= h <= n and k >= 1. Memoized.
EPoly P_hk(std::uint32_t h, std::uint32_t k, std::uint32_t n);

/// Each monomial e_1^a1 ... e_n^an as the index sequence 1^a1 2^a2 ... n^an,
/// with its coefficient.
std::vector<std::pair<std::vector<std::uint32_t>, Int>> index_sequences(const EPoly& p);

/// Evaluates p in Gamma^n(F) at e_j -> 1^(n-j) x f^(j), multiplying the
/// factors of each monomial left to right with star.
GammaElem evaluate_at_generators(const EPoly& p, const Word& f);

}  // namespace divpow
