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

#include "coam/polynomial.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "coam/error.h"

namespace coam {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> variables,
                                const Rat& c) {
  SparsePoly p(std::move(variables));
  p.add_term(Exponent(p.variable_count(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables,
                                std::size_t index) {
  SparsePoly p(std::move(variables));
  Exponent e(p.variable_count(), 0);
  e.at(index) = 1;
  p.add_term(e, Rat(1));
  return p;
}

std::optional<std::size_t> SparsePoly::variable_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

int SparsePoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  }
  return best;
}

int SparsePoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
  return best;
}

void SparsePoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != variables_.size()) {
    throw Error(ErrorCode::kInvalidInput, "exponent length mismatch");
  }
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
    throw Error(ErrorCode::kInvalidInput, "negative exponent");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (variables_ != o.variables_) {
    throw Error(ErrorCode::kInvalidInput, "polynomials over different variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  check_compatible(o);
  SparsePoly out(variables_);
  Exponent e(variables_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  out *= Rat(-1);
  return out;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly result = constant(variables_, Rat(1));
  SparsePoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  SparsePoly run() {
    skip_space();
    if (at_end()) fail("empty input");
    SparsePoly p = expr();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError,
                what + " at offset " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  // Accepts ASCII '-' and U+2212 for minus.
  bool accept(char c) {
    skip_space();
    if (at_end()) return false;
    if (text_[pos_] == c) {
      ++pos_;
      return true;
    }
    if (c == '-' && text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    SparsePoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        SparsePoly d = factor();
        Exponent zero(variables_.size(), 0);
        if (d.term_count() != 1 || d.terms().begin()->first != zero) {
          fail("division by a non-constant");
        }
        acc *= Rat(1 / d.terms().begin()->second);
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    SparsePoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) fail("expected an exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  SparsePoly primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      Int value(std::string(text_.substr(start, pos_ - start)));
      return SparsePoly::constant(variables_, Rat(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) fail("undeclared variable " + name);
      return SparsePoly::variable(
          variables_, static_cast<std::size_t>(it - variables_.begin()));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

std::string monomial(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

SparsePoly parse(std::string_view text,
                 const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

std::string format(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial(e, p.variables());
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

Rat evaluate_exact(const SparsePoly& p, std::span<const Rat> point) {
  if (point.size() != p.variable_count()) {
    throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  }
  Rat total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= rat_pow(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

std::complex<double> evaluate_complex(
    const SparsePoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.variable_count()) {
    throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  }
  std::complex<double> total = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

SparsePoly partial_derivative(const SparsePoly& p, std::string_view var) {
  std::optional<std::size_t> idx = p.variable_index(var);
  if (!idx) {
    throw Error(ErrorCode::kUnknownVariable, std::string(var));
  }
  SparsePoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[*idx] == 0) continue;
    Exponent d = e;
    --d[*idx];
    out.add_term(d, c * e[*idx]);
  }
  return out;
}

SparsePoly initial_form(const SparsePoly& p, std::span<const Int> w) {
  if (w.size() != p.variable_count()) {
    throw Error(ErrorCode::kInvalidInput, "weight length mismatch");
  }
  SparsePoly out(p.variables());
  if (p.is_zero()) return out;
  auto pairing = [&](const Exponent& e) {
    Int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    return s;
  };
  Int best = pairing(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms()) best = std::min(best, pairing(e));
  for (const auto& [e, c] : p.terms()) {
    if (pairing(e) == best) out.add_term(e, c);
  }
  return out;
}

SparsePoly initial_form(const SparsePoly& p, std::initializer_list<long> w) {
  return initial_form(p, to_int_vector(w));
}

SparsePoly parse_polynomial_file(std::string_view contents) {
  std::size_t nl = contents.find('\n');
  std::string header(contents.substr(0, nl));
  std::replace(header.begin(), header.end(), ',', ' ');
  std::istringstream in(header);
  std::vector<std::string> vars;
  for (std::string v; in >> v;) vars.push_back(v);
  if (vars.empty()) {
    throw Error(ErrorCode::kSyntaxError, "first line must declare variables");
  }
  std::string_view body =
      nl == std::string_view::npos ? std::string_view{} : contents.substr(nl + 1);
  return parse(body, vars);
}

std::string to_polynomial_file(const SparsePoly& p) {
  std::string out;
  for (const std::string& v : p.variables()) {
    out += (out.empty() ? "" : " ") + v;
  }
  return out + "\n" + format(p) + "\n";
}

SparsePoly read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polynomial_file(buffer.str());
}

}  // namespace coam
