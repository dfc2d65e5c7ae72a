#pragma once

// Symmetric tensors TS^n(F) inside F^{(x)n}. Since F is free, Gamma^n(F) is
// isomorphic to TS^n(F); this module is an independent model used to check
// the Gamma^n product.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divpow/gamma.hpp"

namespace divpow {

class SymTensor {
 public:
  using Slots = std::vector<Word>;
  using Terms = std::map<Slots, Int>;

  explicit SymTensor(std::uint32_t n = 0) : n_(n) {}

  std::uint32_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the pure tensor `slots` (no symmetrization).
  void add_term(const Slots& slots, const Int& c);

  /// Invariance under every slot permutation.
  bool is_symmetric() const;

  SymTensor& operator+=(const SymTensor& o);
  friend SymTensor operator+(SymTensor l, const SymTensor& r) { return l += r; }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  std::uint32_t n_ = 0;
  Terms terms_;
};

/// The basis element maps to the sum, with coefficient one each, of the
/// distinct arrangements of its word multiset (padded with 1's) into n slots.
SymTensor embed(const GammaBasisElem& b);
SymTensor embed(const GammaElem& u);

/// Slot-wise product in F^{(x)n}.
SymTensor ts_mul(const SymTensor& s, const SymTensor& t);

bool ts_equal(const SymTensor& s, const SymTensor& t);

std::string to_string(const SymTensor& s);

}  // namespace divpow
