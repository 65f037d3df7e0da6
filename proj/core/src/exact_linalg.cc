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

#include "coam/exact_linalg.h"

#include <algorithm>
#include <utility>

#include "coam/error.h"

namespace coam {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kInvalidInput, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kInvalidInput, "row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + r * cols_,
                        data_.begin() + (r + 1) * cols_);
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <typename T>
std::vector<std::vector<T>> Matrix<T>::row_list() const {
  std::vector<std::vector<T>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <typename T>
Matrix<T> Matrix<T>::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
  }
  return out;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
}

template class Matrix<Int>;
template class Matrix<Rat>;

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kInvalidInput, "matrix shape mismatch");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

// row[target] -= q * row[source]
void subtract_row(IntMatrix& m, std::size_t target, std::size_t source,
                  const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return multiply(a, b);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  return multiply(a, b);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
  }
  return out;
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(std::span<const Int> a, std::span<const Rat> b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Int& x) { return sgn(x) == 0; });
}

IntVector primitive(std::span<const Int> v) {
  IntVector out(v.begin(), v.end());
  Int g = content(v);
  if (g > 1) {
    for (Int& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntVector primitive(std::span<const Rat> v) {
  Int l = 1;
  for (const Rat& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector scaled;
  scaled.reserve(v.size());
  for (const Rat& x : v) scaled.push_back(x.get_num() * (l / x.get_den()));
  return primitive(std::span<const Int>(scaled));
}

Rat rat_pow(const Rat& base, long exponent) {
  Rat b = base;
  if (exponent < 0) {
    if (sgn(b) == 0) throw Error(ErrorCode::kInvalidInput, "0 to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

LatticeBasis LatticeBasis::make(std::size_t ambient_rank,
                                std::vector<IntVector> vectors,
                                bool saturated) {
  LatticeBasis b;
  b.ambient_rank = ambient_rank;
  b.saturated = saturated;
  for (const IntVector& v : vectors) {
    if (v.size() != ambient_rank) {
      throw Error(ErrorCode::kInvalidInput, "lattice vector length mismatch");
    }
    b.primitive.push_back(content(v) == 1);
  }
  b.vectors = std::move(vectors);
  return b;
}

IntMatrix LatticeBasis::as_rows() const {
  return IntMatrix::from_rows(vectors, ambient_rank);
}

std::size_t rank_rational(const RatMatrix& input) {
  RatMatrix m = input;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  return rank_rational(to_rational(m));
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t p = 0;
  for (std::size_t c = 0; c < h.cols() && p < h.rows(); ++c) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = p; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(p, best);
      u.swap_rows(p, best);
      bool cleared = true;
      for (std::size_t i = p + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Int q = h(i, c) / h(p, c);
        subtract_row(h, i, p, q);
        subtract_row(u, i, p, q);
        if (sgn(h(i, c)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(h(p, c)) == 0) continue;
    if (sgn(h(p, c)) < 0) {
      negate_row(h, p);
      negate_row(u, p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(p, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      subtract_row(h, i, p, q);
      subtract_row(u, i, p, q);
    }
    ++p;
  }
  return {std::move(h), std::move(u)};
}

std::vector<std::size_t> pivot_columns(const IntMatrix& echelon) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    for (std::size_t c = 0; c < echelon.cols(); ++c) {
      if (sgn(echelon(r, c)) != 0) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

LatticeBasis integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HermiteResult t = hermite_normal_form(m.transpose());
  std::size_t r = pivot_columns(t.h).size();
  std::vector<IntVector> kernel;
  for (std::size_t i = r; i < n; ++i) kernel.push_back(t.u.row(i));
  if (kernel.empty()) return LatticeBasis::make(n, {}, true);
  IntMatrix canonical =
      hermite_normal_form(IntMatrix::from_rows(kernel, n)).h;
  return LatticeBasis::make(n, canonical.row_list(), true);
}

IntMatrix quotient_projection(std::size_t ambient_rank,
                              const LatticeBasis& sub) {
  if (!sub.saturated) {
    throw Error(ErrorCode::kNotSaturated, "quotient needs a saturated sublattice");
  }
  if (sub.ambient_rank != ambient_rank) {
    throw Error(ErrorCode::kInvalidInput, "ambient rank mismatch");
  }
  if (sub.rank() == 0) return IntMatrix::identity(ambient_rank);
  return integer_kernel(sub.as_rows()).as_rows();
}

LatticeBasis saturation(const IntMatrix& generators) {
  const std::size_t n = generators.cols();
  if (rank_rational(generators) == 0) return LatticeBasis::make(n, {}, true);
  LatticeBasis perp = integer_kernel(generators);
  return integer_kernel(perp.as_rows());
}

std::optional<RatVector> solve_unique(const RatMatrix& input,
                                      std::span<const Rat> rhs) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  if (rhs.size() != rows) {
    throw Error(ErrorCode::kInvalidInput, "right-hand side length mismatch");
  }
  RatMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = input(r, c);
    m(r, cols) = rhs[r];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(rank, p);
    Rat inv = 1 / m(rank, c);
    for (std::size_t k = c; k <= cols; ++k) m(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k <= cols; ++k) m(r, k) -= f * m(rank, k);
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (sgn(m(r, cols)) != 0) return std::nullopt;
  }
  if (rank != cols) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = m(i, cols);
  return x;
}

RationalSpan::RationalSpan(std::size_t ambient_rank,
                           const std::vector<IntVector>& rows)
    : ambient_(ambient_rank) {
  for (const IntVector& r : rows) add(r);
}

RatVector RationalSpan::reduce(std::span<const Int> v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::kInvalidInput, "vector length mismatch");
  }
  RatVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rat f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) w[k] -= f * basis_[i][k];
  }
  return w;
}

bool RationalSpan::add(std::span<const Int> v) {
  RatVector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(),
                         [](const Rat& x) { return sgn(x) != 0; });
  if (it == w.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - w.begin());
  Rat inv = 1 / w[pivot];
  for (Rat& x : w) x *= inv;
  basis_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

bool RationalSpan::contains(std::span<const Int> v) const {
  RatVector w = reduce(v);
  return std::all_of(w.begin(), w.end(),
                     [](const Rat& x) { return sgn(x) == 0; });
}

}  // namespace coam
