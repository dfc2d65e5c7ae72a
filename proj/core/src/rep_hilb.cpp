#include "divpow/rep_hilb.hpp"

#include <random>

namespace divpow {

RepPoint::RepPoint(std::uint32_t n, std::vector<RatMatrix> matrices, bool commutative)
    : n_(n), matrices_(std::move(matrices)), commutative_(commutative) {
  for (const auto& x : matrices_)
    if (x.rows() != n || x.cols() != n) throw Error("representation matrices must be " + std::to_string(n) + "x" + std::to_string(n));
  if (commutative_ && !check_commuting(*this)) throw Error("representation flagged commutative has non-commuting matrices");
}

RatMatrix RepPoint::eval_word(const Word& w) const {
  RatMatrix out = RatMatrix::identity(n_);
  for (auto letter : w.letters()) {
    if (letter < 1 || letter > m())
      throw Error("letter x" + std::to_string(letter) + " outside the alphabet x1..x" + std::to_string(m()));
    out = out * matrices_[letter - 1];
  }
  return out;
}

namespace {

void require_vector(const Triple& t) {
  if (t.v.size() != t.rep.n())
    throw Error("vector of length " + std::to_string(t.v.size()) + " for a rep of dimension " + std::to_string(t.rep.n()));
}

bool is_invertible(const RatMatrix& a) { return det(a) != 0; }

}  // namespace

bool is_cyclic(const Triple& t) {
  require_vector(t);
  const std::size_t n = t.rep.n();
  std::vector<std::vector<Rat>> basis{t.v};
  auto dimension = [&](const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return std::size_t{0};
    RatMatrix m(vecs.size(), n);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = vecs[i][j];
    return rank(m);
  };
  std::size_t dim = dimension(basis);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<Rat>> grown = basis;
    for (const auto& x : t.rep.matrices())
      for (const auto& b : basis) grown.push_back(apply(x, b));
    const std::size_t next = dimension(grown);
    basis = std::move(grown);
    if (next == dim) break;
    dim = next;
  }
  return dim == n;
}

Triple conjugate(const Triple& t, const RatMatrix& g) {
  require_vector(t);
  const RatMatrix g_inv = inverse(g);
  std::vector<RatMatrix> xs;
  xs.reserve(t.rep.m());
  for (const auto& x : t.rep.matrices()) xs.push_back(g * x * g_inv);
  return {RepPoint(t.rep.n(), std::move(xs), t.rep.flagged_commutative()), apply(g, t.v)};
}

Equivalence triples_equivalent(const Triple& a, const Triple& b, std::uint64_t seed) {
  require_vector(a);
  require_vector(b);
  if (a.rep.n() != b.rep.n() || a.rep.m() != b.rep.m()) throw Error("triples_equivalent: shapes differ");
  const std::size_t n = a.rep.n(), m = a.rep.m();
  // unknown alpha(p, q) at column p * n + q
  RatMatrix system(m * n * n + n, n * n);
  std::vector<Rat> rhs(m * n * n + n, Rat(0));
  for (std::size_t k = 0; k < m; ++k) {
    const auto& x = a.rep.matrices()[k];
    const auto& y = b.rep.matrices()[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (alpha X)_ij - (Y alpha)_ij = 0
        const std::size_t row = k * n * n + i * n + j;
        for (std::size_t l = 0; l < n; ++l) {
          system(row, i * n + l) += x(l, j);
          system(row, l * n + j) -= y(i, l);
        }
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = m * n * n + i;
    for (std::size_t l = 0; l < n; ++l) system(row, i * n + l) = a.v[l];
    rhs[row] = b.v[i];
  }
  const auto sol = solve_affine(system, rhs);
  if (!sol) return Equivalence::not_equivalent;

  auto as_matrix = [&](const std::vector<Rat>& flat) {
    RatMatrix alpha(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) alpha(p, q) = flat[p * n + q];
    return alpha;
  };
  if (is_invertible(as_matrix(sol->particular))) return Equivalence::equivalent;
  if (sol->kernel.empty()) return Equivalence::not_equivalent;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-8, 8);
  constexpr unsigned kMaxRetries = 32;
  for (unsigned attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Rat> point = sol->particular;
    for (const auto& dir : sol->kernel) {
      const Rat c = coeff(rng);
      for (std::size_t idx = 0; idx < point.size(); ++idx) point[idx] += c * dir[idx];
    }
    if (is_invertible(as_matrix(point))) return Equivalence::equivalent;
  }
  return Equivalence::indeterminate;
}

std::size_t stabilizer_rank(const Triple& t) {
  require_vector(t);
  const std::size_t n = t.rep.n(), m = t.rep.m();
  RatMatrix map(m * n * n + n, n * n);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& x = t.rep.matrices()[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (g X - X g)_ij
        const std::size_t row = k * n * n + i * n + j;
        for (std::size_t l = 0; l < n; ++l) {
          map(row, i * n + l) += x(l, j);
          map(row, l * n + j) -= x(i, l);
        }
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) map(m * n * n + i, i * n + l) = t.v[l];
  return rank(map);
}

HCPoint hc_eval(const RepPoint& r, std::uint32_t max_degree) {
  if (max_degree < 1) throw Error("hc_eval: degree cutoff must be at least 1");
  HCPoint point;
  point.max_degree = max_degree;
  if (r.m() == 0) return point;
  for (const auto& neck : necklaces_up_to(r.m(), max_degree)) {
    const RatMatrix image = r.eval_word(neck.word);
    for (std::uint32_t i = 1; i <= r.n(); ++i) point.coords.emplace(std::make_pair(neck.word, i), char_coeff(image, i));
  }
  return point;
}

HCPoint hc_eval(const Triple& t, std::uint32_t max_degree) { return hc_eval(t.rep, max_degree); }

bool check_commuting(const RepPoint& r) {
  const auto& xs = r.matrices();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] * xs[j] != xs[j] * xs[i]) return false;
  return true;
}

}  // namespace divpow
