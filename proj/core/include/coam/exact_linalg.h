// Copyright 2026 The Authors.
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

#ifndef COAM_EXACT_LINALG_H_
#define COAM_EXACT_LINALG_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace coam {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense row-major matrix with exact entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const;
  std::vector<T> col(std::size_t c) const;
  std::vector<std::vector<T>> row_list() const;
  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

IntVector to_int_vector(std::initializer_list<long> values);
Int dot(std::span<const Int> a, std::span<const Int> b);
Rat dot(std::span<const Int> a, std::span<const Rat> b);
Int content(std::span<const Int> v);  // gcd of the entries, 0 for zero
bool is_zero(std::span<const Int> v);
// Divides by the content; orientation is preserved.
IntVector primitive(std::span<const Int> v);
// Clears denominators and divides by the content.
IntVector primitive(std::span<const Rat> v);
Rat rat_pow(const Rat& base, long exponent);

struct LatticeBasis {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> vectors;
  std::vector<bool> primitive;  // per vector
  bool saturated = false;

  static LatticeBasis make(std::size_t ambient_rank,
                           std::vector<IntVector> vectors, bool saturated);
  std::size_t rank() const { return vectors.size(); }
  IntMatrix as_rows() const;
};

struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};

std::size_t rank_rational(const RatMatrix& m);
std::size_t rank_rational(const IntMatrix& m);

// Row-style HNF: u unimodular, u * m = h, h upper echelon with positive
// pivots and entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

// Saturated basis of {v : m v = 0}, in Hermite normal form.
LatticeBasis integer_kernel(const IntMatrix& m);

// Rows descend to a basis of Z^ambient_rank / sub.
IntMatrix quotient_projection(std::size_t ambient_rank,
                              const LatticeBasis& sub);

// Saturation of the lattice spanned by the rows of `generators`.
LatticeBasis saturation(const IntMatrix& generators);

// Indices of the pivot columns of an echelon matrix, one per nonzero row.
std::vector<std::size_t> pivot_columns(const IntMatrix& echelon);

// Unique solution x of m x = rhs, if one exists and is unique.
std::optional<RatVector> solve_unique(const RatMatrix& m,
                                      std::span<const Rat> rhs);

// Rational row space with fast membership queries.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t ambient_rank) : ambient_(ambient_rank) {}
  RationalSpan(std::size_t ambient_rank, const std::vector<IntVector>& rows);

  // Returns false if v was already in the span.
  bool add(std::span<const Int> v);
  bool contains(std::span<const Int> v) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_rank() const { return ambient_; }

 private:
  RatVector reduce(std::span<const Int> v) const;

  std::size_t ambient_;
  std::vector<RatVector> basis_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace coam

#endif  // COAM_EXACT_LINALG_H_
