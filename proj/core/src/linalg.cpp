#include "divpow/linalg.hpp"

#include <numeric>

namespace divpow {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  return laplace_det(m, [](const MultiPoly& a, const MultiPoly& b) { return a * b; });
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  PolyMatrix a = m;
  MultiPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return MultiPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = MultiPoly();
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

MultiPoly det(const PolyMatrix& m) {
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

Int det(const Matrix<Int>& m) {
  return laplace_det(m, [](const Int& a, const Int& b) -> Int { return a * b; });
}

namespace {

// Integer matrix with the same row space as m: each row scaled by the lcm of
// its denominators.
Matrix<Int> clear_denominators(const RatMatrix& m) {
  Matrix<Int> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    Rat inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  Matrix<Int> a = clear_denominators(m);
  const std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int v = a(r, col) * a(i, j) - a(i, col) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, const std::vector<Rat>& rhs) {
  if (rhs.size() != m.rows()) throw Error("solve_affine: right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, m.cols());
  sol.kernel = nullspace(m);
  return sol;
}

std::vector<Rat> apply(const RatMatrix& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols()) throw Error("matrix-vector product: length mismatch");
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

RatMatrix to_rat(const Matrix<Int>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

}  // namespace divpow
