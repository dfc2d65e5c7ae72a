#pragma once

// Generic matrices and the norm map Gamma^n(F) -> Z[xi], the unique ring
// homomorphism sending gamma^n(f) to det(pi(f)), where pi sends x_k to the
// generic n x n matrix xi_k.

#include <cstdint>
#include <vector>

#include "divpow/gamma.hpp"
#include "divpow/gen_decomp.hpp"
#include "divpow/linalg.hpp"

namespace divpow {

/// The m generic n x n matrices xi_k = (xi(k,i,j)) and their compound
/// matrices. Immutable once built.
class GenericMatrixContext {
 public:
  GenericMatrixContext(std::uint32_t n, std::uint32_t m);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  /// 1-based letter index.
  const PolyMatrix& generic(std::uint32_t k) const;
  /// i-th compound of xi_k, 1 <= i <= n.
  const PolyMatrix& compound(std::uint32_t k, std::uint32_t i) const;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<PolyMatrix> generic_;
  std::vector<std::vector<PolyMatrix>> compounds_;
};

/// A polynomial in the xi variables produced by the norm map; these lie in
/// the ring generated by the characteristic coefficients of words.
struct InvariantPoly {
  MultiPoly poly;

  friend InvariantPoly operator*(const InvariantPoly& l, const InvariantPoly& r) { return {l.poly * r.poly}; }
  friend InvariantPoly operator+(const InvariantPoly& l, const InvariantPoly& r) { return {l.poly + r.poly}; }
  friend bool operator==(const InvariantPoly&, const InvariantPoly&) = default;
};

/// Ordered product of generic matrices; the empty word gives the identity.
PolyMatrix eval_word(const GenericMatrixContext& ctx, const Word& w);

/// e_i(pi(w)), computed as the trace of the product of i-th compounds
/// (the compound is multiplicative and its trace is the sum of principal
/// i-minors).
InvariantPoly char_gen(const GenericMatrixContext& ctx, const Word& w, std::uint32_t i);

/// Image of a basis element 1^(n-|a|) x r1^(a1) x ... x rh^(ah): the
/// coefficient of t1^a1...th^ah in det(I + sum_s t_s pi(r_s)). Single-part
/// elements go through char_gen.
InvariantPoly norm_basis(const GenericMatrixContext& ctx, const GammaBasisElem& b);

/// The determinant-coefficient route for every basis element, computed over
/// Z[xi][t] with truncation at the target multidegree.
InvariantPoly norm_basis_by_extraction(const GenericMatrixContext& ctx, const GammaBasisElem& b);

InvariantPoly norm(const GenericMatrixContext& ctx, const GammaElem& u);

/// Symbol-wise image of a generator polynomial, E(i, mu) -> e_i(pi(mu)).
InvariantPoly norm_of_generators(const GenericMatrixContext& ctx, const GenPoly& g);

/// Compares p at random integer specializations of the xi and at their
/// conjugates g xi g^-1 by random invertible rational g. Singular samples of
/// g are redrawn a bounded number of times, then Error is thrown.
bool check_conj_invariance(const GenericMatrixContext& ctx, const MultiPoly& p, unsigned trials,
                           std::uint64_t seed);

}  // namespace divpow
