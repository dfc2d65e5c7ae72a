#pragma once

// The degree-n divided powers algebra of the free algebra F = Z<x1..xm>,
// in the monomial basis 1^(n-|a|) x r1^(a1) x ... x rh^(ah).

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divpow/exact.hpp"
#include "divpow/words.hpp"

namespace divpow {

/// (word, multiplicity) inside a basis element.
using Part = std::pair<Word, std::uint32_t>;

/// Basis element of Gamma^n(F). The unit-word factor 1^(n - weight) is kept
/// implicit. Parts hold distinct non-empty words in Word order, each with
/// multiplicity >= 1, and weight() <= n.
class GammaBasisElem {
 public:
  GammaBasisElem() = default;
  /// Validates and sorts; throws on repeated or empty words, zero
  /// multiplicities or weight above n.
  GammaBasisElem(std::uint32_t n, std::vector<Part> parts);
  static GammaBasisElem unit(std::uint32_t n) { return GammaBasisElem(n, {}); }

  std::uint32_t n() const { return n_; }
  const std::vector<Part>& parts() const { return parts_; }
  std::uint32_t weight() const;
  /// Largest letter index used (0 for the unit).
  Word::Letter max_letter() const;
  /// Largest word degree among the parts.
  std::size_t max_word_degree() const;

  friend bool operator==(const GammaBasisElem&, const GammaBasisElem&) = default;
  friend std::strong_ordering operator<=>(const GammaBasisElem& l, const GammaBasisElem& r) {
    if (auto c = l.parts_ <=> r.parts_; c != 0) return c;
    return l.n_ <=> r.n_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Part> parts_;
};

/// Integer combination of basis elements of a fixed Gamma^n(F).
class GammaElem {
 public:
  using Terms = std::map<GammaBasisElem, Int>;

  explicit GammaElem(std::uint32_t n = 0) : n_(n) {}
  GammaElem(const GammaBasisElem& b, Int c = 1);  // NOLINT(google-explicit-constructor)

  std::uint32_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const GammaBasisElem& b) const;

  void add_term(const GammaBasisElem& b, const Int& c);

  GammaElem& operator+=(const GammaElem& o);
  GammaElem& operator-=(const GammaElem& o);
  GammaElem& operator*=(const Int& c);
  GammaElem operator-() const;
  friend GammaElem operator+(GammaElem l, const GammaElem& r) { return l += r; }
  friend GammaElem operator-(GammaElem l, const GammaElem& r) { return l -= r; }
  friend GammaElem operator*(GammaElem l, const Int& c) { return l *= c; }
  friend GammaElem operator*(const Int& c, GammaElem r) { return r *= c; }
  friend bool operator==(const GammaElem&, const GammaElem&) = default;

 private:
  void require_same_n(const GammaElem& o) const;

  std::uint32_t n_ = 0;
  Terms terms_;
};

/// Element of F: integer combination of words (the empty word is 1).
class FreeElem {
 public:
  using Terms = std::map<Word, Int>;

  FreeElem() = default;
  FreeElem(const Word& w, Int c = 1);  // NOLINT(google-explicit-constructor)

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Int& c);

  FreeElem& operator+=(const FreeElem& o);
  friend FreeElem operator+(FreeElem l, const FreeElem& r) { return l += r; }
  friend FreeElem operator*(const FreeElem& l, const FreeElem& r);
  friend bool operator==(const FreeElem&, const FreeElem&) = default;

 private:
  Terms terms_;
};

/// Collapses repeated words with r^(i) x r^(j) = C(i+j, i) r^(i+j). The result
/// is zero when the total weight exceeds n, otherwise one scaled basis term.
/// Empty words are absorbed into the implicit unit factor.
GammaElem merge_parts(std::uint32_t n, std::span<const Part> raw);

/// Product in Gamma^n(F), from the sum over matrices gamma whose row sums
/// and column sums reproduce the two multiplicity vectors.
GammaElem star(const GammaBasisElem& u, const GammaBasisElem& v);
GammaElem star(const GammaElem& u, const GammaElem& v);

/// n-th divided power of f expanded in the basis.
GammaElem gamma_power(const FreeElem& f, std::uint32_t n);

/// The generator 1^(n-i) x mu^(i).
GammaBasisElem generator(std::uint32_t n, std::uint32_t i, const Word& mu);

/// "D(2; x1, x2^2)"; the unit prints as "D(2;)".
std::string to_string(const GammaBasisElem& b);
/// "D(2; x1, x2) - 3*D(2; x1.x2)"; zero prints as "0".
std::string to_string(const GammaElem& u);
std::string to_string(const FreeElem& f);

}  // namespace divpow
