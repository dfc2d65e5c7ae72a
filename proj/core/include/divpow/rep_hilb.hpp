#pragma once

// Field points of the representation space of F over Q, cyclic triples
// (points of the noncommutative Hilbert scheme) and the Hilbert-Chow map.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "divpow/linalg.hpp"
#include "divpow/words.hpp"

namespace divpow {

/// m rational n x n matrices, the images of x1..xm.
class RepPoint {
 public:
  RepPoint() = default;
  /// When `commutative` is set the matrices must pairwise commute.
  RepPoint(std::uint32_t n, std::vector<RatMatrix> matrices, bool commutative = false);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return static_cast<std::uint32_t>(matrices_.size()); }
  const std::vector<RatMatrix>& matrices() const { return matrices_; }
  bool flagged_commutative() const { return commutative_; }

  /// Word product of the matrices; the empty word gives the identity.
  RatMatrix eval_word(const Word& w) const;

  friend bool operator==(const RepPoint&, const RepPoint&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<RatMatrix> matrices_;
  bool commutative_ = false;
};

struct Triple {
  RepPoint rep;
  std::vector<Rat> v;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Coordinates e_i(rho(mu)) for primitive necklaces mu of degree <= D and
/// 1 <= i <= n, keyed by (necklace, i); the Word order makes iteration run by
/// (degree, necklace, i).
struct HCPoint {
  std::uint32_t max_degree = 0;
  std::map<std::pair<Word, std::uint32_t>, Rat> coords;

  friend bool operator==(const HCPoint&, const HCPoint&) = default;
};

enum class Equivalence { equivalent, not_equivalent, indeterminate };

/// Whether v generates Q^n under the algebra generated by the matrices.
bool is_cyclic(const Triple& t);

/// (g X_i g^-1, g v). Throws on singular g.
Triple conjugate(const Triple& t, const RatMatrix& g);

/// Searches for an invertible a with a X_i = X'_i a and a v = v'. The affine
/// solution space is probed at its particular solution and at up to 32
/// seeded random points; if none is invertible the answer is indeterminate
/// (unless the space is a single point, when it is decided exactly).
Equivalence triples_equivalent(const Triple& a, const Triple& b, std::uint64_t seed = 0);

/// Rank of g -> ([g,X_1], ..., [g,X_m], g v) on n x n matrices.
std::size_t stabilizer_rank(const Triple& t);

HCPoint hc_eval(const RepPoint& r, std::uint32_t max_degree);
HCPoint hc_eval(const Triple& t, std::uint32_t max_degree);

bool check_commuting(const RepPoint& r);

}  // namespace divpow
