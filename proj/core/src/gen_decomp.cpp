#include "divpow/gen_decomp.hpp"

#include <algorithm>

#include "divpow/symfun.hpp"

namespace divpow {

GenPoly GenPoly::unit(std::uint32_t n) {
  GenPoly g(n);
  g.terms_.emplace(Sequence{}, 1);
  return g;
}

GenPoly GenPoly::symbol(std::uint32_t n, GenSymbol s) {
  if (s.i < 1 || s.i > n)
    throw Error("generator index " + std::to_string(s.i) + " outside 1.." + std::to_string(n));
  if (s.mu.empty()) throw Error("generator word must have positive degree");
  GenPoly g(n);
  g.terms_.emplace(Sequence{std::move(s)}, 1);
  return g;
}

void GenPoly::add_term(const Sequence& seq, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(seq, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GenPoly::require_same_n(const GenPoly& o) const {
  if (o.n_ != n_) throw Error("mismatched generator polynomial degrees");
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  require_same_n(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  require_same_n(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

GenPoly& GenPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [s, v] : terms_) v *= c;
  }
  return *this;
}

GenPoly operator*(const GenPoly& l, const GenPoly& r) {
  l.require_same_n(r);
  GenPoly out(l.n_);
  for (const auto& [a, ca] : l.terms_)
    for (const auto& [b, cb] : r.terms_) {
      GenPoly::Sequence seq = a;
      seq.insert(seq.end(), b.begin(), b.end());
      out.add_term(seq, ca * cb);
    }
  return out;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(std::size_t depth_bound) : depth_bound_(depth_bound) {}

  GenPoly run(const GammaBasisElem& b, std::size_t depth) {
    if (depth > depth_bound_) throw Error("decompose: recursion depth bound exceeded");
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
    const std::uint32_t n = b.n();
    const auto& parts = b.parts();
    GenPoly result(n);
    if (parts.empty()) {
      result = GenPoly::unit(n);
    } else if (parts.size() == 1) {
      result = GenPoly::symbol(n, {parts[0].second, parts[0].first});
    } else {
      const auto& [head, head_mult] = parts.front();
      const GammaBasisElem first = generator(n, head_mult, head);
      const GammaBasisElem rest(n, std::vector<Part>(parts.begin() + 1, parts.end()));
      GammaElem corrections = star(first, rest);
      if (corrections.coefficient(b) != 1) throw Error("decompose: leading product term has unexpected coefficient");
      corrections -= GammaElem(b);
      result = GenPoly::symbol(n, {head_mult, head}) * run(rest, depth + 1);
      for (const auto& [term, c] : corrections.terms()) {
        if (term.weight() >= b.weight()) throw Error("decompose: correction term does not lower the weight");
        result -= run(term, depth + 1) * c;
      }
    }
    memo_.emplace(b, result);
    return result;
  }

 private:
  std::size_t depth_bound_;
  std::map<GammaBasisElem, GenPoly> memo_;
};

}  // namespace

GenPoly decompose(const GammaBasisElem& b) {
  const std::size_t bound = std::size_t{b.n()} * std::max<std::size_t>(1, b.parts().size());
  return Decomposer(bound).run(b, 0);
}

GenPoly decompose(const GammaElem& u) {
  std::size_t max_parts = 1;
  for (const auto& [b, c] : u.terms()) max_parts = std::max(max_parts, b.parts().size());
  Decomposer d(std::size_t{u.n()} * max_parts);
  GenPoly out(u.n());
  for (const auto& [b, c] : u.terms()) out += d.run(b, 0) * c;
  return out;
}

GenPoly reduce_powers(const GenPoly& g) {
  const std::uint32_t n = g.n();
  std::map<GenSymbol, GenPoly> replacement;
  auto replace = [&](const GenSymbol& s) -> const GenPoly& {
    auto it = replacement.find(s);
    if (it != replacement.end()) return it->second;
    auto [root, k] = primitive_root(s.mu);
    GenPoly value(n);
    if (k == 1) {
      value = GenPoly::symbol(n, s);
    } else {
      for (const auto& [seq, c] : index_sequences(P_hk(s.i, k, n))) {
        GenPoly::Sequence mapped;
        mapped.reserve(seq.size());
        for (auto j : seq) mapped.push_back({j, root});
        value.add_term(mapped, c);
      }
    }
    return replacement.emplace(s, std::move(value)).first->second;
  };
  GenPoly out(n);
  for (const auto& [seq, c] : g.terms()) {
    GenPoly product = GenPoly::unit(n);
    for (const auto& s : seq) product = product * replace(s);
    out += product * c;
  }
  return out;
}

GenPoly abelianize(const GenPoly& g) {
  GenPoly out(g.n());
  for (const auto& [seq, c] : g.terms()) {
    GenPoly::Sequence canon;
    canon.reserve(seq.size());
    for (const auto& s : seq) canon.push_back({s.i, cyclic_canonical(s.mu)});
    std::sort(canon.begin(), canon.end());
    out.add_term(canon, c);
  }
  return out;
}

GammaElem expand(const GenPoly& g) {
  const std::uint32_t n = g.n();
  GammaElem out(n);
  for (const auto& [seq, c] : g.terms()) {
    GammaElem product(GammaBasisElem::unit(n));
    for (const auto& s : seq) product = star(product, GammaElem(generator(n, s.i, s.mu)));
    out += product * c;
  }
  return out;
}

bool all_primitive(const GenPoly& g) {
  for (const auto& [seq, c] : g.terms())
    for (const auto& s : seq)
      if (!is_primitive(s.mu)) return false;
  return true;
}

std::string to_string(const GenSymbol& s) {
  return "E(" + std::to_string(s.i) + "," + to_string(s.mu) + ")";
}

std::string to_string(const GenPoly& g) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [seq, c] : g.terms()) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (seq.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0) out += "*";
      out += to_string(seq[k]);
    }
  }
  return out;
}

}  // namespace divpow
