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

#include "coam/matroid.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

#include "coam/error.h"

namespace coam {

std::vector<std::size_t> members(LabelSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

LabelSet label_set(std::initializer_list<std::size_t> one_based) {
  LabelSet s = 0;
  for (std::size_t i : one_based) s |= singleton(i - 1);
  return s;
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.corank != b.corank) return a.corank < b.corank;
  return members(a.forms) < members(b.forms);
}

namespace {

// Next subset with the same popcount.
LabelSet next_combination(LabelSet x) {
  LabelSet c = x & (~x + 1);
  LabelSet r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Sign-normalized primitive direction, used to group parallel vectors.
IntVector line_key(const IntVector& v) {
  IntVector p = primitive(std::span<const Int>(v));
  auto it = std::find_if(p.begin(), p.end(),
                         [](const Int& x) { return sgn(x) != 0; });
  if (it != p.end() && sgn(*it) < 0) {
    for (Int& x : p) x = -x;
  }
  return p;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Matroid Matroid::build(VectorConfiguration b, Spanning spanning) {
  if (b.size() > kMaxElements) {
    throw Error(ErrorCode::kInvalidInput, "at most 64 vectors are supported");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (is_zero(b.row(i))) {
      throw Error(ErrorCode::kZeroVector, "row " + b.labels[i] + " is zero");
    }
  }
  Matroid m;
  m.rank_ = rank_rational(b.b_matrix);
  if (spanning == Spanning::kRequired && m.rank_ != b.ambient_rank()) {
    throw Error(ErrorCode::kNotSpanning, "rows do not span the ambient space");
  }
  m.vectors_ = std::move(b);

  const std::size_t n = m.size();
  const std::size_t r = m.rank_;
  if (r == 0) {
    m.bases_.push_back(0);
  } else {
    const LabelSet last = full_set(r) << (n - r);
    for (LabelSet s = full_set(r);; s = next_combination(s)) {
      if (m.rank_of(s) == r) m.bases_.push_back(s);
      if (s == last) break;
    }
  }
  std::sort(m.bases_.begin(), m.bases_.end());

  std::map<IntVector, LabelSet> lines;
  std::vector<IntVector> order;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector key = line_key(m.vectors_.row(i));
    auto [it, inserted] = lines.emplace(key, 0);
    if (inserted) order.push_back(key);
    it->second |= singleton(i);
  }
  for (const IntVector& key : order) m.parallel_classes_.push_back(lines[key]);
  return m;
}

bool Matroid::is_basis(LabelSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

std::size_t Matroid::rank_of(LabelSet s) const {
  RationalSpan span(ambient_rank());
  for (std::size_t i : members(s)) span.add(vectors_.b_matrix.row(i));
  return span.rank();
}

LabelSet Matroid::span_closure(LabelSet s) const {
  RationalSpan span(ambient_rank());
  for (std::size_t i : members(s)) span.add(vectors_.b_matrix.row(i));
  LabelSet out = s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!contains(out, i) && span.contains(vectors_.b_matrix.row(i))) {
      out |= singleton(i);
    }
  }
  return out;
}

IntVector Matroid::sum_of(LabelSet s) const {
  IntVector sum(ambient_rank());
  for (std::size_t i : members(s)) {
    for (std::size_t c = 0; c < ambient_rank(); ++c) {
      sum[c] += vectors_.b_matrix(i, c);
    }
  }
  return sum;
}

std::vector<IntVector> Matroid::rows_of(LabelSet s) const {
  std::vector<IntVector> out;
  for (std::size_t i : members(s)) out.push_back(vectors_.b_matrix.row(i));
  return out;
}

std::vector<std::string> Matroid::labels_of(LabelSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : members(s)) out.push_back(vectors_.labels[i]);
  return out;
}

LabelSet Matroid::parse_labels(const std::vector<std::string>& labels) const {
  LabelSet s = 0;
  for (const std::string& l : labels) {
    auto it = std::find(vectors_.labels.begin(), vectors_.labels.end(), l);
    if (it == vectors_.labels.end()) {
      throw Error(ErrorCode::kInvalidInput, "unknown label " + l);
    }
    s |= singleton(static_cast<std::size_t>(it - vectors_.labels.begin()));
  }
  return s;
}

VectorConfiguration Matroid::sub_configuration(LabelSet s) const {
  std::vector<std::size_t> idx = members(s);
  return VectorConfiguration::make(vectors_.b_matrix.select_rows(idx),
                                   labels_of(s));
}

Flat Matroid::make_flat(LabelSet forms) const {
  if (span_closure(forms) != forms) {
    throw Error(ErrorCode::kInvalidInput, "form set is not closed");
  }
  Flat f;
  f.forms = forms;
  f.corank = rank_of(forms);
  IntMatrix rows = IntMatrix::from_rows(rows_of(forms), ambient_rank());
  f.flat_space = integer_kernel(rows);
  return f;
}

Flat closure(const Matroid& m, LabelSet s) {
  return m.make_flat(m.span_closure(s));
}

std::vector<Flat> flats(const Matroid& m) {
  std::vector<Flat> out;
  std::vector<LabelSet> level = {m.span_closure(0)};
  while (!level.empty()) {
    std::set<LabelSet> next;
    for (LabelSet f : level) {
      out.push_back(m.make_flat(f));
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!contains(f, i)) next.insert(m.span_closure(f | singleton(i)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

std::vector<Flat> flats_of_corank(const Matroid& m, std::size_t corank) {
  std::vector<Flat> out;
  for (Flat& f : flats(m)) {
    if (f.corank == corank) out.push_back(std::move(f));
  }
  return out;
}

std::vector<LabelSet> components(const Matroid& m) {
  const std::size_t n = m.size();
  UnionFind uf(n);
  const LabelSet all = m.ground_set();
  for (LabelSet basis : m.bases()) {
    for (std::size_t b : members(basis)) {
      for (std::size_t c : members(all & ~basis)) {
        if (uf.find(b) == uf.find(c)) continue;
        if (m.is_basis((basis & ~singleton(b)) | singleton(c))) uf.unite(b, c);
      }
    }
  }
  std::map<std::size_t, LabelSet> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)] |= singleton(i);
  std::vector<LabelSet> out;
  for (const auto& [root, set] : groups) out.push_back(set);
  return out;
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

Restriction restrict_to_flat(const Matroid& m, const Flat& l) {
  const std::size_t d = m.ambient_rank();
  IntMatrix f_rows = IntMatrix::from_rows(m.rows_of(l.forms), d);
  LatticeBasis perp = saturation(f_rows);
  Restriction out;
  out.projection = quotient_projection(d, perp);
  const std::size_t k = out.projection.rows();
  out.source_rows = members(m.ground_set() & ~l.forms);
  IntMatrix images(out.source_rows.size(), k);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < out.source_rows.size(); ++r) {
    IntVector b = m.vectors().row(out.source_rows[r]);
    for (std::size_t i = 0; i < k; ++i) {
      images(r, i) = dot(out.projection.row(i), b);
    }
    labels.push_back(m.vectors().labels[out.source_rows[r]]);
  }
  out.b_restricted = VectorConfiguration::make(std::move(images), labels);
  return out;
}

VectorConfiguration contract_flat(const Matroid& m, const Flat& l) {
  const std::size_t d = m.ambient_rank();
  IntMatrix f_rows = IntMatrix::from_rows(m.rows_of(l.forms), d);
  LatticeBasis perp = saturation(f_rows);
  const std::size_t k = perp.rank();
  RatMatrix system = to_rational(perp.as_rows().transpose());
  IntMatrix coords(f_rows.rows(), k);
  for (std::size_t r = 0; r < f_rows.rows(); ++r) {
    RatVector rhs;
    for (const Int& x : f_rows.row(r)) rhs.emplace_back(x);
    std::optional<RatVector> c = solve_unique(system, rhs);
    if (!c) throw Error(ErrorCode::kInvalidInput, "row outside its own span");
    for (std::size_t i = 0; i < k; ++i) {
      if ((*c)[i].get_den() != 1) {
        throw Error(ErrorCode::kNotSaturated, "non-integral coordinates");
      }
      coords(r, i) = (*c)[i].get_num();
    }
  }
  return VectorConfiguration::make(std::move(coords), m.labels_of(l.forms));
}

std::vector<Flat> flacets(const Matroid& m) {
  if (!is_connected(m)) {
    throw Error(ErrorCode::kDisconnected, "flacets need a connected matroid");
  }
  std::vector<Flat> out;
  for (Flat& f : flats(m)) {
    if (f.corank == 0 || f.corank >= m.rank()) continue;
    Matroid inner =
        Matroid::build(m.sub_configuration(f.forms), Matroid::Spanning::kRelaxed);
    if (!is_connected(inner)) continue;
    Matroid outer = Matroid::build(restrict_to_flat(m, f).b_restricted,
                                   Matroid::Spanning::kRelaxed);
    if (!is_connected(outer)) continue;
    out.push_back(std::move(f));
  }
  return out;
}

MergeResult merge_parallel(const VectorConfiguration& b) {
  const std::size_t d = b.ambient_rank();
  std::map<IntVector, std::vector<std::size_t>> classes;
  std::vector<IntVector> order;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector row = b.row(i);
    if (is_zero(row)) {
      throw Error(ErrorCode::kZeroVector, "row " + b.labels[i] + " is zero");
    }
    IntVector key = line_key(row);
    auto [it, inserted] = classes.emplace(key, std::vector<std::size_t>{});
    if (inserted) order.push_back(key);
    it->second.push_back(i);
  }

  MergeResult out;
  std::vector<IntVector> rows;
  std::vector<std::string> labels;
  for (const IntVector& key : order) {
    const std::vector<std::size_t>& idx = classes[key];
    if (idx.size() == 1) {
      rows.push_back(b.row(idx[0]));
      labels.push_back(b.labels[idx[0]]);
      continue;
    }
    IntVector eta = primitive(std::span<const Int>(b.row(idx[0])));
    std::size_t pivot = 0;
    while (sgn(eta[pivot]) == 0) ++pivot;
    Int total = 0;
    Rat constant = 1;
    ParallelShift shift;
    for (std::size_t i : idx) {
      Int q = b.b_matrix(i, pivot) / eta[pivot];
      total += q;
      constant *= rat_pow(Rat(q), q.get_si());
      shift.labels.push_back(b.labels[i]);
    }
    if (sgn(total) != 0) constant /= rat_pow(Rat(total), total.get_si());
    shift.direction = eta;
    shift.constant = constant;
    shift.arg_shift.assign(d, Int(0));
    if (sgn(constant) < 0) {
      for (std::size_t c = 0; c < d; ++c) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), eta[c].get_mpz_t(), 2);
        shift.arg_shift[c] = r;
      }
    }
    if (sgn(total) != 0) {
      IntVector merged(d);
      for (std::size_t c = 0; c < d; ++c) merged[c] = total * eta[c];
      rows.push_back(std::move(merged));
      std::string joined;
      for (const std::string& l : shift.labels) {
        joined += (joined.empty() ? "" : "+") + l;
      }
      labels.push_back(joined);
    }
    out.shifts.push_back(std::move(shift));
  }
  out.reduced =
      VectorConfiguration::make(IntMatrix::from_rows(rows, d), labels);
  return out;
}

}  // namespace coam
