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

#include "coam/configuration.h"

#include <algorithm>
#include <utility>

#include "coam/error.h"

namespace coam {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

PointConfiguration PointConfiguration::make(IntMatrix a,
                                            std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(a.cols());
  if (labels.size() != a.cols()) {
    throw Error(ErrorCode::kInvalidInput, "one label per column required");
  }
  return {std::move(a), std::move(labels)};
}

VectorConfiguration VectorConfiguration::make(IntMatrix b,
                                              std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(b.rows());
  if (labels.size() != b.rows()) {
    throw Error(ErrorCode::kInvalidInput, "one label per row required");
  }
  return {std::move(b), std::move(labels)};
}

IntVector VectorConfiguration::row_sum() const {
  IntVector s(ambient_rank());
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < ambient_rank(); ++c) s[c] += b_matrix(r, c);
  }
  return s;
}

bool VectorConfiguration::has_zero_row() const {
  for (std::size_t r = 0; r < size(); ++r) {
    if (is_zero(b_matrix.row(r))) return true;
  }
  return false;
}

ValidationReport validate_a(const PointConfiguration& a) {
  ValidationReport report;
  const IntMatrix& m = a.a_matrix;
  if (m.rows() == 0 || m.cols() == 0) return report;

  // The columns generate Z^m iff HNF of the transpose has nonzero part I_m.
  IntMatrix h = hermite_normal_form(m.transpose()).h;
  report.spans = pivot_columns(h).size() == m.rows();
  for (std::size_t r = 0; r < m.rows() && report.spans; ++r) {
    for (std::size_t c = 0; c < m.rows(); ++c) {
      if (h(r, c) != (r == c ? 1 : 0)) {
        report.spans = false;
        break;
      }
    }
  }

  RatVector ones(m.cols(), Rat(1));
  if (auto u = solve_unique(to_rational(m.transpose()), ones)) {
    bool integral = std::all_of(u->begin(), u->end(), [](const Rat& x) {
      return x.get_den() == 1;
    });
    if (integral) {
      IntVector ui;
      for (const Rat& x : *u) ui.push_back(x.get_num());
      report.u = std::move(ui);
    }
  }

  // A column outside the span of the others gives a zero row in the dual.
  const std::size_t full = rank_rational(m);
  for (std::size_t j = 0; j < m.cols() && !report.pyramid; ++j) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k != j) others.push_back(k);
    }
    IntMatrix rest = m.transpose().select_rows(others);
    if (rank_rational(rest) < full) report.pyramid = true;
  }
  return report;
}

VectorConfiguration gale_dual(const PointConfiguration& a) {
  ValidationReport report = validate_a(a);
  if (!report.spans) {
    throw Error(ErrorCode::kNotSpanning, "columns of A do not generate Z^m");
  }
  if (!report.u) {
    throw Error(ErrorCode::kNoAffineHyperplane,
                "no integer covector is 1 on every column");
  }
  LatticeBasis kernel = integer_kernel(a.a_matrix);
  IntMatrix b = kernel.as_rows().transpose();
  if (kernel.rank() == 0) b = IntMatrix(a.size(), 0);
  return VectorConfiguration::make(std::move(b), a.labels);
}

bool check_gale_pair(const PointConfiguration& a,
                     const VectorConfiguration& b) {
  if (a.size() != b.size()) return false;
  IntMatrix product = a.a_matrix * b.b_matrix;
  for (std::size_t r = 0; r < product.rows(); ++r) {
    if (!is_zero(product.row(r))) return false;
  }
  if (rank_rational(a.a_matrix) + rank_rational(b.b_matrix) != a.size()) {
    return false;
  }
  return is_zero(b.row_sum());
}

bool check_gale_pair(const GalePair& p) {
  if (!check_gale_pair(p.a, p.b)) return false;
  if (p.u.size() != p.a.dimension()) return false;
  for (std::size_t j = 0; j < p.a.size(); ++j) {
    if (dot(p.u, p.a.a_matrix.col(j)) != 1) return false;
  }
  return true;
}

bool equal_up_to_unimodular(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  // Equal column spans in Z^n: compare HNFs of the transposes.
  IntMatrix hx = hermite_normal_form(x.transpose()).h;
  IntMatrix hy = hermite_normal_form(y.transpose()).h;
  return hx == hy;
}

}  // namespace coam
