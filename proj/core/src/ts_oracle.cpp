#include "divpow/ts_oracle.hpp"

#include <algorithm>
#include <cassert>

namespace divpow {

void SymTensor::add_term(const Slots& slots, const Int& c) {
  if (slots.size() != n_)
    throw Error("tensor with " + std::to_string(slots.size()) + " slots added to degree " + std::to_string(n_));
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(slots, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymTensor::is_symmetric() const {
  // adjacent transpositions generate S_n
  for (const auto& [slots, c] : terms_)
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
      Slots swapped = slots;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != c) return false;
    }
  return true;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.n_ != n_) throw Error("adding symmetric tensors of different degrees");
  for (const auto& [slots, c] : o.terms_) add_term(slots, c);
  return *this;
}

SymTensor embed(const GammaBasisElem& b) {
  SymTensor::Slots multiset;
  multiset.reserve(b.n());
  for (std::uint32_t i = b.weight(); i < b.n(); ++i) multiset.emplace_back();
  for (const auto& [w, mult] : b.parts())
    for (std::uint32_t i = 0; i < mult; ++i) multiset.push_back(w);
  std::sort(multiset.begin(), multiset.end());
  SymTensor out(b.n());
  do {
    out.add_term(multiset, 1);
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return out;
}

SymTensor embed(const GammaElem& u) {
  SymTensor out(u.n());
  for (const auto& [b, c] : u.terms()) {
    SymTensor e = embed(b);
    for (const auto& [slots, v] : e.terms()) out.add_term(slots, v * c);
  }
  assert(out.is_symmetric());
  return out;
}

SymTensor ts_mul(const SymTensor& s, const SymTensor& t) {
  if (s.n() != t.n()) throw Error("ts_mul: mismatched degrees");
  SymTensor out(s.n());
  SymTensor::Slots slots(s.n());
  for (const auto& [a, ca] : s.terms())
    for (const auto& [b, cb] : t.terms()) {
      for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = concat(a[i], b[i]);
      out.add_term(slots, ca * cb);
    }
  return out;
}

bool ts_equal(const SymTensor& s, const SymTensor& t) { return s == t; }

std::string to_string(const SymTensor& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [slots, c] : s.terms()) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (i > 0) out += " (x) ";
      out += to_string(slots[i]);
    }
  }
  return out;
}

}  // namespace divpow
