#include "divpow/symfun.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "divpow/linalg.hpp"

namespace divpow {

namespace {

void require_index(std::uint32_t i, std::uint32_t n, const char* what) {
  if (i < 1 || i > n)
    throw Error(std::string(what) + ": index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace

SymPoly elementary(std::uint32_t i, std::uint32_t n) {
  require_index(i, n, "elementary");
  std::vector<MultiPoly::Term> terms;
  for (const auto& s : subsets_of_size(n, i)) {
    std::vector<Monomial::Factor> f;
    for (auto j : s) f.emplace_back(VarId::x(1, static_cast<unsigned>(j + 1)), 1);
    terms.emplace_back(Monomial(std::move(f)), 1);
  }
  return {n, MultiPoly::from_terms(std::move(terms))};
}

SymPoly power_sum(std::uint32_t r, std::uint32_t n) {
  if (r < 1) throw Error("power_sum: r must be positive");
  MultiPoly p;
  for (std::uint32_t j = 1; j <= n; ++j) p += MultiPoly::term(Monomial::of(VarId::x(1, j), r), 1);
  return {n, p};
}

bool is_symmetric(const MultiPoly& p, std::uint32_t n) {
  for (const auto& v : p.variables())
    if (v.tag != VarTag::x || v.a != 1 || v.b < 1 || v.b > n) return false;
  for (std::uint32_t j = 1; j < n; ++j) {
    std::map<VarId, MultiPoly> swap{{VarId::x(1, j), MultiPoly::variable(VarId::x(1, j + 1))},
                                    {VarId::x(1, j + 1), MultiPoly::variable(VarId::x(1, j))}};
    if (poly_substitute(p, swap) != p) return false;
  }
  return true;
}

EPoly express_in_elementary(const SymPoly& f) {
  if (!is_symmetric(f.poly, f.n)) throw Error("express_in_elementary: input is not symmetric");
  const std::uint32_t n = f.n;
  std::vector<MultiPoly> e(n + 1);
  for (std::uint32_t i = 1; i <= n; ++i) e[i] = elementary(i, n).poly;

  std::vector<MultiPoly::Term> result;
  MultiPoly rest = f.poly;
  while (!rest.is_zero()) {
    const auto [lead, c] = rest.leading_term();
    std::vector<std::uint32_t> lambda(n + 2, 0);
    for (std::uint32_t j = 1; j <= n; ++j) lambda[j] = lead.exponent(VarId::x(1, j));
    MultiPoly product(c);
    std::vector<Monomial::Factor> emono;
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (lambda[j] < lambda[j + 1]) throw Error("express_in_elementary: leading exponent is not a partition");
      const std::uint32_t a = lambda[j] - lambda[j + 1];
      if (a == 0) continue;
      product *= pow(e[j], a);
      emono.emplace_back(VarId::e(j), a);
    }
    result.emplace_back(Monomial(std::move(emono)), c);
    rest -= product;
  }
  return {n, MultiPoly::from_terms(std::move(result))};
}

SymPoly substitute_elementary(const EPoly& p) {
  std::map<VarId, MultiPoly> subst;
  for (std::uint32_t i = 1; i <= p.n; ++i) subst.emplace(VarId::e(i), elementary(i, p.n).poly);
  for (const auto& v : p.poly.variables())
    if (!subst.count(v)) throw Error("substitute_elementary: unexpected variable " + to_string(v));
  return {p.n, poly_substitute(p.poly, subst)};
}

SymPoly plethysm_pk(const SymPoly& g, std::uint32_t r) {
  if (r < 1) throw Error("plethysm_pk: r must be positive");
  std::vector<MultiPoly::Term> terms;
  terms.reserve(g.poly.size());
  for (const auto& [m, c] : g.poly.terms()) {
    std::vector<Monomial::Factor> f = m.factors();
    for (auto& [v, e] : f) e *= r;
    terms.emplace_back(Monomial(std::move(f)), c);
  }
  return {g.n, MultiPoly::from_terms(std::move(terms))};
}

EPoly P_hk(std::uint32_t h, std::uint32_t k, std::uint32_t n) {
  require_index(h, n, "P_hk");
  if (k < 1) throw Error("P_hk: k must be positive");
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, EPoly> memo;
  const auto key = std::make_tuple(h, k, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  EPoly value = express_in_elementary(plethysm_pk(elementary(h, n), k));
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(value)).first->second;
}

std::vector<std::pair<std::vector<std::uint32_t>, Int>> index_sequences(const EPoly& p) {
  std::vector<std::pair<std::vector<std::uint32_t>, Int>> out;
  for (const auto& [m, c] : p.poly.terms()) {
    std::vector<std::uint32_t> seq;
    for (const auto& [v, e] : m.factors()) {
      if (v.tag != VarTag::e || v.a < 1 || v.a > p.n) throw Error("index_sequences: unexpected variable " + to_string(v));
      seq.insert(seq.end(), e, v.a);
    }
    out.emplace_back(std::move(seq), c);
  }
  return out;
}

GammaElem evaluate_at_generators(const EPoly& p, const Word& f) {
  GammaElem out(p.n);
  for (const auto& [seq, c] : index_sequences(p)) {
    GammaElem product(GammaBasisElem::unit(p.n));
    for (auto j : seq) product = star(product, GammaElem(generator(p.n, j, f)));
    out += product * c;
  }
  return out;
}

}  // namespace divpow
