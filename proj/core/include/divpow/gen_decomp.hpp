#pragma once

// Rewriting Gamma^n(F) basis elements as noncommutative integer polynomials
// in the generators E(i, mu) = 1^(n-i) x mu^(i), followed by reduction to
// primitive mu and to cyclic representatives.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divpow/gamma.hpp"

namespace divpow {

/// The symbol E(i, mu); the ambient n is carried by the enclosing GenPoly.
struct GenSymbol {
  std::uint32_t i = 1;
  Word mu;

  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

/// Integer combination of ordered products of generator symbols. The empty
/// sequence is the unit 1^(n).
class GenPoly {
 public:
  using Sequence = std::vector<GenSymbol>;
  using Terms = std::map<Sequence, Int>;

  explicit GenPoly(std::uint32_t n = 0) : n_(n) {}
  static GenPoly unit(std::uint32_t n);
  static GenPoly symbol(std::uint32_t n, GenSymbol s);

  std::uint32_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Sequence& seq, const Int& c);

  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  GenPoly& operator*=(const Int& c);
  friend GenPoly operator+(GenPoly l, const GenPoly& r) { return l += r; }
  friend GenPoly operator-(GenPoly l, const GenPoly& r) { return l -= r; }
  friend GenPoly operator*(GenPoly l, const Int& c) { return l *= c; }
  /// Concatenation product.
  friend GenPoly operator*(const GenPoly& l, const GenPoly& r);
  friend bool operator==(const GenPoly&, const GenPoly&) = default;

 private:
  void require_same_n(const GenPoly& o) const;

  std::uint32_t n_ = 0;
  Terms terms_;
};

/// Splits off the first part r1^(a1) as E(a1, r1), multiplies by the
/// remaining parts and subtracts the lower-weight correction terms, recursing
/// on strictly smaller weight.
GenPoly decompose(const GammaBasisElem& b);
GenPoly decompose(const GammaElem& u);

/// Replaces every E(i, f^k) with k >= 2 and f primitive by P_{i,k} evaluated
/// at E(1, f)..E(n, f).
GenPoly reduce_powers(const GenPoly& g);

/// Cyclic-canonical words and sorted (commutative) sequences.
GenPoly abelianize(const GenPoly& g);

/// Evaluates each sequence with star in the written order.
GammaElem expand(const GenPoly& g);

bool all_primitive(const GenPoly& g);

/// Evaluation in a commutative ring given the image of each symbol.
template <class R, class Image>
R evaluate_commutative(const GenPoly& g, Image image) {
  R sum(0);
  std::map<GenSymbol, R> cache;
  for (const auto& [seq, c] : g.terms()) {
    R term(c);
    for (const auto& s : seq) {
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, image(s)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

/// "E(1,x1)*E(1,x2) - E(1,x1.x2)"; the unit sequence prints as "1".
std::string to_string(const GenSymbol& s);
std::string to_string(const GenPoly& g);

}  // namespace divpow
