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

#ifndef COAM_POLYNOMIAL_H_
#define COAM_POLYNOMIAL_H_

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coam/exact_linalg.h"

namespace coam {

using Exponent = std::vector<int>;

// Higher total degree first, then lexicographically larger first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rat, GradedLexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> variables);

  static SparsePoly constant(std::vector<std::string> variables,
                             const Rat& c);
  static SparsePoly variable(std::vector<std::string> variables,
                             std::size_t index);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;

  void add_term(const Exponent& e, const Rat& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rat& c);
  SparsePoly operator-() const;
  SparsePoly pow(unsigned k) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    return a += b;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    return a -= b;
  }
  friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) {
    return a *= b;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& o) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

// Grammar: sums and differences of products and quotients of powers.
// Factors are rational numbers, declared variables, or parenthesized
// expressions; '^' takes a nonnegative integer; '/' needs a constant divisor.
// Multiplication must be written with '*'.
SparsePoly parse(std::string_view text,
                 const std::vector<std::string>& variables);
std::string format(const SparsePoly& p);

Rat evaluate_exact(const SparsePoly& p, std::span<const Rat> point);
std::complex<double> evaluate_complex(
    const SparsePoly& p, std::span<const std::complex<double>> point);

SparsePoly partial_derivative(const SparsePoly& p, std::string_view var);

// Terms minimizing <w, exponent>.
SparsePoly initial_form(const SparsePoly& p, std::span<const Int> w);
SparsePoly initial_form(const SparsePoly& p, std::initializer_list<long> w);

// First line lists the variables, separated by spaces or commas; the rest
// is the polynomial.
SparsePoly parse_polynomial_file(std::string_view contents);
std::string to_polynomial_file(const SparsePoly& p);
SparsePoly read_polynomial_file(const std::string& path);

}  // namespace coam

#endif  // COAM_POLYNOMIAL_H_
