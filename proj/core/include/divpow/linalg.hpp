#pragma once

// Dense matrices over the exact scalar types, determinants, characteristic
// coefficients and exact linear algebra over Q.

#include "divpow/exact.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace divpow {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
  friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }

  friend Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.cols_ != r.rows_) throw Error("matrix product: inner dimensions differ");
    Matrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        const T& a = l(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) out(i, j) += a * r(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Submatrix on the given (sorted) row and column index lists.
template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  Matrix<T> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

/// Laplace expansion with shared minors (row by row over column subsets).
/// Division-free, so valid over any commutative ring. `mul` lets callers
/// plug in truncated multiplication.
template <class T, class Mul>
T laplace_det(const Matrix<T>& m, Mul mul) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 20) throw Error("laplace_det: matrix too large");
  // minors[mask] = det of rows 0..popcount(mask)-1 on the columns in mask
  std::vector<std::optional<T>> minors(std::size_t{1} << n);
  minors[0] = T(1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    T acc(0);
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const T& entry = m(row, c);
      const auto& minor = minors[mask & ~(std::size_t{1} << c)];
      if (!(entry == T(0)) && !(*minor == T(0))) {
        T prod = mul(entry, *minor);
        // sign of column c when expanding the last row of the k x k block
        if ((row + position) % 2 == 0)
          acc += prod;
        else
          acc -= prod;
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return std::move(*minors.back());
}

MultiPoly det_cofactor(const PolyMatrix& m);
/// Bareiss fraction-free elimination with exact polynomial division.
MultiPoly det_bareiss(const PolyMatrix& m);
/// Cofactor expansion up to size 4, fraction-free elimination beyond.
MultiPoly det(const PolyMatrix& m);
Rat det(const RatMatrix& m);
Int det(const Matrix<Int>& m);

/// e_i(M): the sum of the principal i x i minors. e_1 is the trace and e_n
/// the determinant.
template <class T>
T char_coeff(const Matrix<T>& m, std::size_t i) {
  if (!m.is_square()) throw Error("char_coeff: matrix is not square");
  if (i < 1 || i > m.rows())
    throw Error("char_coeff: index " + std::to_string(i) + " outside 1.." +
                std::to_string(m.rows()));
  T sum(0);
  for (const auto& s : subsets_of_size(m.rows(), i)) sum += det(submatrix(m, s, s));
  return sum;
}

/// The i-th compound matrix: entries are the i x i minors, rows and columns
/// indexed by i-subsets in lexicographic order. Its trace is e_i, and
/// compound(AB) = compound(A) compound(B).
template <class T>
Matrix<T> compound(const Matrix<T>& m, std::size_t i) {
  auto row_sets = subsets_of_size(m.rows(), i);
  auto col_sets = subsets_of_size(m.cols(), i);
  Matrix<T> out(row_sets.size(), col_sets.size());
  for (std::size_t a = 0; a < row_sets.size(); ++a)
    for (std::size_t b = 0; b < col_sets.size(); ++b)
      out(a, b) = det(submatrix(m, row_sets[a], col_sets[b]));
  return out;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw Error("trace of a non-square matrix");
  T sum(0);
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

/// Rank by fraction-free elimination after clearing row denominators.
std::size_t rank(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

struct AffineSolution {
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;
};

/// All solutions of m x = rhs, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, const std::vector<Rat>& rhs);

std::vector<Rat> apply(const RatMatrix& m, const std::vector<Rat>& v);

RatMatrix to_rat(const Matrix<Int>& m);

}  // namespace divpow
