#include "divpow/norm_map.hpp"

#include <map>
#include <random>

namespace divpow {

GenericMatrixContext::GenericMatrixContext(std::uint32_t n, std::uint32_t m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw Error("generic matrices need n >= 1 and m >= 1");
  generic_.reserve(m);
  compounds_.reserve(m);
  for (std::uint32_t k = 1; k <= m; ++k) {
    PolyMatrix x(n, n);
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = 1; j <= n; ++j) x(i - 1, j - 1) = MultiPoly::variable(VarId::xi(k, i, j));
    std::vector<PolyMatrix> comps;
    comps.reserve(n);
    for (std::uint32_t i = 1; i <= n; ++i) comps.push_back(divpow::compound(x, i));
    compounds_.push_back(std::move(comps));
    generic_.push_back(std::move(x));
  }
}

const PolyMatrix& GenericMatrixContext::generic(std::uint32_t k) const {
  if (k < 1 || k > m_) throw Error("letter x" + std::to_string(k) + " outside the alphabet x1..x" + std::to_string(m_));
  return generic_[k - 1];
}

const PolyMatrix& GenericMatrixContext::compound(std::uint32_t k, std::uint32_t i) const {
  if (i < 1 || i > n_) throw Error("compound index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  generic(k);
  return compounds_[k - 1][i - 1];
}

PolyMatrix eval_word(const GenericMatrixContext& ctx, const Word& w) {
  PolyMatrix out = PolyMatrix::identity(ctx.n());
  bool first = true;
  for (auto letter : w.letters()) {
    out = first ? ctx.generic(letter) : out * ctx.generic(letter);
    first = false;
  }
  return out;
}

InvariantPoly char_gen(const GenericMatrixContext& ctx, const Word& w, std::uint32_t i) {
  if (i < 1 || i > ctx.n())
    throw Error("char_gen: index " + std::to_string(i) + " outside 1.." + std::to_string(ctx.n()));
  if (w.empty()) return {MultiPoly(binomial(ctx.n(), i))};
  PolyMatrix product = ctx.compound(w.letters()[0], i);
  for (std::size_t s = 1; s < w.degree(); ++s) product = product * ctx.compound(w.letters()[s], i);
  return {trace(product)};
}

namespace {

void require_context(const GenericMatrixContext& ctx, const GammaBasisElem& b) {
  if (b.n() != ctx.n())
    throw Error("element of Gamma^" + std::to_string(b.n()) + " evaluated in a context with n=" + std::to_string(ctx.n()));
  if (b.max_letter() > ctx.m())
    throw Error("letter x" + std::to_string(b.max_letter()) + " outside the alphabet x1..x" + std::to_string(ctx.m()));
}

}  // namespace

InvariantPoly norm_basis_by_extraction(const GenericMatrixContext& ctx, const GammaBasisElem& b) {
  require_context(ctx, b);
  const std::uint32_t n = ctx.n();
  PolyMatrix m = PolyMatrix::identity(n);
  std::vector<Monomial::Factor> cap_factors;
  unsigned s = 0;
  for (const auto& [word, mult] : b.parts()) {
    ++s;
    const MultiPoly t = MultiPoly::variable(VarId::t(s));
    const PolyMatrix image = eval_word(ctx, word);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) m(i, j) += t * image(i, j);
    cap_factors.emplace_back(VarId::t(s), mult);
  }
  const Monomial target(cap_factors);
  const MultiPoly full = laplace_det(m, [&](const MultiPoly& l, const MultiPoly& r) {
    return mul_truncated(l, r, target);
  });
  // keep the terms whose t-part is exactly the target and strip it
  std::vector<MultiPoly::Term> coeff;
  for (const auto& [mono, c] : full.terms()) {
    std::vector<Monomial::Factor> xi_part;
    std::vector<Monomial::Factor> t_part;
    for (const auto& f : mono.factors()) (f.first.tag == VarTag::t ? t_part : xi_part).push_back(f);
    if (Monomial(t_part) == target) coeff.emplace_back(Monomial(std::move(xi_part)), c);
  }
  return {MultiPoly::from_terms(std::move(coeff))};
}

InvariantPoly norm_basis(const GenericMatrixContext& ctx, const GammaBasisElem& b) {
  require_context(ctx, b);
  if (b.parts().empty()) return {MultiPoly(1)};
  if (b.parts().size() == 1) return char_gen(ctx, b.parts()[0].first, b.parts()[0].second);
  return norm_basis_by_extraction(ctx, b);
}

InvariantPoly norm(const GenericMatrixContext& ctx, const GammaElem& u) {
  if (u.n() != ctx.n())
    throw Error("element of Gamma^" + std::to_string(u.n()) + " evaluated in a context with n=" + std::to_string(ctx.n()));
  MultiPoly sum;
  for (const auto& [b, c] : u.terms()) sum += norm_basis(ctx, b).poly * c;
  return {sum};
}

InvariantPoly norm_of_generators(const GenericMatrixContext& ctx, const GenPoly& g) {
  if (g.n() != ctx.n()) throw Error("generator polynomial degree does not match the context");
  return {evaluate_commutative<MultiPoly>(g, [&](const GenSymbol& s) { return char_gen(ctx, s.mu, s.i).poly; })};
}

bool check_conj_invariance(const GenericMatrixContext& ctx, const MultiPoly& p, unsigned trials,
                           std::uint64_t seed) {
  const std::uint32_t n = ctx.n(), m = ctx.m();
  for (const auto& v : p.variables())
    if (v.tag != VarTag::xi || v.a < 1 || v.a > m || v.b < 1 || v.b > n || v.c < 1 || v.c > n)
      throw Error("check_conj_invariance: variable " + to_string(v) + " is not a generic-matrix entry");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> conj_entry(-3, 3);
  constexpr unsigned kMaxRetries = 32;

  for (unsigned trial = 0; trial < trials; ++trial) {
    std::vector<RatMatrix> xs;
    for (std::uint32_t k = 0; k < m; ++k) {
      RatMatrix x(n, n);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) x(i, j) = entry(rng);
      xs.push_back(std::move(x));
    }
    RatMatrix g(n, n);
    unsigned attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxRetries) throw Error("check_conj_invariance: could not sample an invertible matrix");
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) g(i, j) = conj_entry(rng);
      if (det(g) != 0) break;
    }
    const RatMatrix g_inv = inverse(g);
    std::map<VarId, Rat> plain, conjugated;
    for (std::uint32_t k = 0; k < m; ++k) {
      const RatMatrix c = g * xs[k] * g_inv;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          plain.emplace(VarId::xi(k + 1, i + 1, j + 1), xs[k](i, j));
          conjugated.emplace(VarId::xi(k + 1, i + 1, j + 1), c(i, j));
        }
    }
    if (poly_eval(p, plain) != poly_eval(p, conjugated)) return false;
  }
  return true;
}

}  // namespace divpow
