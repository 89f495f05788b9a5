// Copyright 2026 The distdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distdet/error.hpp"

namespace distdet {

/// Dense row-major matrix over an exact scalar type.
///
/// Arithmetic operators check conformability and throw DimensionError on a
/// mismatch. Entries are plain values; copying a Matrix copies all of them.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, T(1));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  /// Copy of the nr x nc submatrix whose top-left corner is (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw DimensionError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
      throw DimensionError("block out of range");
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j)
        (*this)(r0 + i, c0 + j) = src(i, j);
  }

  /// Copy with row i and column j removed.
  Matrix minor_matrix(std::size_t i, std::size_t j) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, orow = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, ocol = 0; c < cols_; ++c) {
        if (c == j) continue;
        out(orow, ocol++) = (*this)(r, c);
      }
      ++orow;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  return a += b;
}
template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  return a -= b;
}
template <typename T>
Matrix<T> operator-(Matrix<T> a) {
  return a *= T(-1);
}
template <typename T>
Matrix<T> operator*(Matrix<T> a, const T& s) {
  return a *= s;
}
template <typename T>
Matrix<T> operator*(const T& s, Matrix<T> a) {
  return a *= s;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product not conformable");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Entrywise conversion, e.g. Matrix<long long> -> Matrix<mpz_class>.
template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Block matrix [[a, b], [c, d]].
template <typename T>
Matrix<T> block_matrix(const Matrix<T>& a, const Matrix<T>& b,
                        const Matrix<T>& c, const Matrix<T>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw DimensionError("block partition not conformable");
  Matrix<T> out(a.rows() + c.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  out.set_block(a.rows(), 0, c);
  out.set_block(a.rows(), a.cols(), d);
  return out;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

/// Reduced rational num/den.
inline mpq_class rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Determinant and cofactor sum of one square matrix.
struct DetCof {
  mpz_class det;
  mpz_class cof;

  friend bool operator==(const DetCof& a, const DetCof& b) {
    return a.det == b.det && a.cof == b.cof;
  }
};

inline std::ostream& operator<<(std::ostream& os, const DetCof& dc) {
  return os << "(det=" << dc.det << ", cof=" << dc.cof << ')';
}

/// Fraction-free Gaussian elimination (Bareiss). Every division in the
/// recurrence is exact; a nonzero remainder raises InvariantError.
/// The 0x0 determinant is 1.
inline mpz_class bareiss_det(IntMatrix a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  int sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    const mpz_class& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class& lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), a(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a(k, j).get_mpz_t());
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw InvariantError("Bareiss step left a fraction");
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  mpz_class det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

/// Sum of all n^2 signed cofactors, as det(A + J) - det(A). The map
/// x -> det(A + xJ) is affine because J has rank one, and its slope is the
/// cofactor sum.
inline mpz_class cof_sum(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw DimensionError("cofactor sum needs a square matrix with n >= 1");
  return bareiss_det(a + IntMatrix::ones(a.rows(), a.cols())) - bareiss_det(a);
}

/// Cofactor sum straight from the definition: n^2 minors. Limited to n <= 8.
inline mpz_class cof_sum_minors(const IntMatrix& a) {
  if (!a.is_square() || a.rows() < 1 || a.rows() > 8)
    throw DimensionError("cof_sum_minors supports square matrices with 1 <= n <= 8");
  mpz_class total = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_class m = bareiss_det(a.minor_matrix(i, j));
      if ((i + j) % 2) total -= m;
      else total += m;
    }
  return total;
}

inline DetCof det_cof(const IntMatrix& a) {
  return {bareiss_det(a), cof_sum(a)};
}

/// Determinant over the rationals by Gaussian elimination.
inline mpq_class rat_det(RatMatrix a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      mpq_class f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
inline RatMatrix rat_inverse(RatMatrix a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError();
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    mpq_class scale = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      mpq_class f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline RatMatrix rat_inverse(const IntMatrix& a) {
  return rat_inverse(matrix_cast<mpq_class>(a));
}

}  // namespace distdet
