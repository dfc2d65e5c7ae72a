#pragma once

// Exact arithmetic substrate: big integers and rationals (GMP), tagged
// polynomial variables, sparse multivariate polynomials over Z, and dense
// matrices over any of these.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divpow {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised for every domain error in the library (bad ranges, shape
/// mismatches, non-symmetric input, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);
/// Accepts "p", "-p" or "p/q".
Rat parse_rat(std::string_view text);
std::string to_string(const Int& v);
/// "p" when integral, otherwise "p/q".
std::string to_string(const Rat& v);

/// Binomial coefficient C(n, k); zero when k > n.
Int binomial(std::uint64_t n, std::uint64_t k);

// ---------------------------------------------------------------------------
// Variables

/// Variable families in their fixed order: generic-matrix entries xi(k,i,j),
/// then coefficient-extraction dummies t(s), then multisymmetric x(i,j), then
/// the formal elementary symbols e(i). Within a family the order is
/// lexicographic on the indices.
enum class VarTag : std::uint8_t { xi = 0, t = 1, x = 2, e = 3 };

struct VarId {
  VarTag tag = VarTag::xi;
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t c = 0;

  static VarId xi(unsigned k, unsigned i, unsigned j);
  static VarId t(unsigned s);
  static VarId x(unsigned i, unsigned j);
  static VarId e(unsigned i);

  std::uint64_t key() const {
    return (std::uint64_t(tag) << 48) | (std::uint64_t(a) << 32) |
           (std::uint64_t(b) << 16) | std::uint64_t(c);
  }
  friend bool operator==(const VarId&, const VarId&) = default;
  friend std::strong_ordering operator<=>(const VarId& l, const VarId& r) {
    return l.key() <=> r.key();
  }
};

std::string to_string(const VarId& v);

// ---------------------------------------------------------------------------
// Monomials

/// A finite-support exponent vector, stored as (variable, exponent) pairs
/// sorted by variable, exponents strictly positive.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Factors may be unsorted and contain repeats; they are normalized.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarId v, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& l, const Monomial& r);
  /// Requires `r.divides(l)`.
  friend Monomial operator/(const Monomial& l, const Monomial& r);

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic comparison under the VarId order (earlier variables
/// are larger). Returns <0, 0, >0.
int grlex_compare(const Monomial& l, const Monomial& r);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

std::string to_string(const Monomial& m);

// ---------------------------------------------------------------------------
// Polynomials

/// Sparse polynomial with integer coefficients. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients, so equality is
/// structural.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Int>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Int& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(VarId v);
  static MultiPoly term(Monomial m, Int c);
  /// Sums duplicate monomials and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  const Term& leading_term() const;
  Int coefficient(const Monomial& m) const;
  std::set<VarId> variables() const;
  /// True when the polynomial is a constant (possibly zero).
  bool is_constant() const;
  Int constant_value() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Int& c);

  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  friend MultiPoly operator*(MultiPoly l, const Int& c) { return l *= c; }
  friend MultiPoly operator*(const Int& c, MultiPoly r) { return r *= c; }
  // plain integers would otherwise match both the Int and the MultiPoly forms
  friend MultiPoly operator*(MultiPoly l, long c) { return l *= Int(c); }
  friend MultiPoly operator*(long c, MultiPoly r) { return r *= Int(c); }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

/// Product that discards every monomial whose exponent of some variable in
/// `caps` exceeds the exponent recorded there.
MultiPoly mul_truncated(const MultiPoly& l, const MultiPoly& r,
                        const Monomial& caps);

/// Exact quotient; throws Error when `den` does not divide `num` in Z[vars].
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Substitutes rationals for every variable. Throws Error naming the first
/// variable missing from the assignment.
Rat poly_eval(const MultiPoly& p, const std::map<VarId, Rat>& assignment);

/// Replaces each variable through `subst` (variables not in the map stay).
MultiPoly poly_substitute(const MultiPoly& p,
                          const std::map<VarId, MultiPoly>& subst);

std::string to_string(const MultiPoly& p);

}  // namespace divpow
