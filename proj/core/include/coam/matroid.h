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

#ifndef COAM_MATROID_H_
#define COAM_MATROID_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coam/configuration.h"
#include "coam/exact_linalg.h"

namespace coam {

// Subset of row indices of a configuration, bit i for row i.
using LabelSet = std::uint64_t;
inline constexpr std::size_t kMaxElements = 64;

inline LabelSet full_set(std::size_t n) {
  return n >= 64 ? ~LabelSet{0} : (LabelSet{1} << n) - 1;
}
inline LabelSet singleton(std::size_t i) { return LabelSet{1} << i; }
inline bool contains(LabelSet s, std::size_t i) { return (s >> i) & 1U; }
inline std::size_t cardinality(LabelSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}
std::vector<std::size_t> members(LabelSet s);
LabelSet label_set(std::initializer_list<std::size_t> one_based);

struct Flat {
  LabelSet forms = 0;       // F: the forms vanishing on L
  std::size_t corank = 0;   // rank of F, the codimension of L
  LatticeBasis flat_space;  // saturated basis of L inside Z^d

  std::size_t dimension() const { return flat_space.rank(); }
  friend bool operator==(const Flat& a, const Flat& b) {
    return a.forms == b.forms;
  }
};

// Graded by corank, then lexicographic in the sorted member lists.
bool flat_less(const Flat& a, const Flat& b);

class Matroid {
 public:
  enum class Spanning { kRequired, kRelaxed };

  static Matroid build(VectorConfiguration b,
                       Spanning spanning = Spanning::kRequired);

  const VectorConfiguration& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t ambient_rank() const { return vectors_.ambient_rank(); }
  LabelSet ground_set() const { return full_set(size()); }

  const std::vector<LabelSet>& bases() const { return bases_; }
  const std::vector<LabelSet>& parallel_classes() const {
    return parallel_classes_;
  }
  bool is_basis(LabelSet s) const;

  std::size_t rank_of(LabelSet s) const;
  // Every element whose vector lies in the rational span of s.
  LabelSet span_closure(LabelSet s) const;
  IntVector sum_of(LabelSet s) const;
  std::vector<IntVector> rows_of(LabelSet s) const;
  std::vector<std::string> labels_of(LabelSet s) const;
  LabelSet parse_labels(const std::vector<std::string>& labels) const;
  VectorConfiguration sub_configuration(LabelSet s) const;
  Flat make_flat(LabelSet forms) const;

 private:
  VectorConfiguration vectors_;
  std::size_t rank_ = 0;
  std::vector<LabelSet> bases_;  // sorted
  std::vector<LabelSet> parallel_classes_;
};

Flat closure(const Matroid& m, LabelSet s);
std::vector<Flat> flats(const Matroid& m);
std::vector<Flat> flats_of_corank(const Matroid& m, std::size_t corank);

bool is_connected(const Matroid& m);
// Connected components of the basis exchange graph, ordered by least member.
std::vector<LabelSet> components(const Matroid& m);

std::vector<Flat> flacets(const Matroid& m);

struct Restriction {
  VectorConfiguration b_restricted;  // images of the rows outside F(L)
  IntMatrix projection;              // M -> M / L-perp
  std::vector<std::size_t> source_rows;
};

Restriction restrict_to_flat(const Matroid& m, const Flat& l);

// Rows of F(L) in coordinates of the saturated basis of L-perp.
VectorConfiguration contract_flat(const Matroid& m, const Flat& l);

struct ParallelShift {
  std::vector<std::string> labels;
  IntVector direction;  // primitive, oriented like the first member
  Rat constant;         // prod q^q / Q^Q, with 0^0 = 1
  IntVector arg_shift;  // multiples of pi, entries in {0, 1}
};

struct MergeResult {
  VectorConfiguration reduced;
  std::vector<ParallelShift> shifts;
};

MergeResult merge_parallel(const VectorConfiguration& b);

}  // namespace coam

#endif  // COAM_MATROID_H_
