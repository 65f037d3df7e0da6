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

#ifndef COAM_TROPICAL_FAN_H_
#define COAM_TROPICAL_FAN_H_

#include <cstddef>
#include <vector>

#include "coam/exact_linalg.h"
#include "coam/matroid.h"

namespace coam {

// One rational value per element of B.
using Weight = std::vector<Rat>;

Weight indicator(const Matroid& m, LabelSet s);
Weight to_weight(std::initializer_list<long> values);

struct InducedMatroid {
  std::vector<LabelSet> max_bases;  // sorted
  LabelSet loops = 0;
};

InducedMatroid induced_matroid(const Matroid& m, const Weight& w);
bool in_tropical(const Matroid& m, const Weight& w);

// chain.front() is the zero subspace (F = B), chain.back() is V (F empty).
struct FlagOfFlats {
  std::vector<Flat> chain;

  std::vector<LabelSet> form_sets() const;
  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
  friend bool operator==(const FlagOfFlats& a, const FlagOfFlats& b) {
    return a.form_sets() == b.form_sets();
  }
};

FlagOfFlats weight_to_flag(const Matroid& m, const Weight& w);
bool flag_cone_contains(const FlagOfFlats& f, const Weight& w);
// Takes the value i on the i-th difference of form sets.
Weight interior_weight(const FlagOfFlats& f, std::size_t n);

struct BergmanRay {
  Flat flat;
  Weight indicator;
};

std::vector<BergmanRay> bergman_rays(const Matroid& m);

// Every maximal chain of flats.
std::vector<FlagOfFlats> complete_flags(const Matroid& m);

struct MaximalCone {
  FlagOfFlats flag;                // flag of the sum of the ray indicators
  std::vector<std::size_t> rays;   // indices into bergman_rays(m)
  std::vector<LabelSet> max_bases;
  std::size_t fine_cone_count = 0;  // complete flags inside the cone
};

std::vector<MaximalCone> maximal_cones(const Matroid& m);
std::vector<FlagOfFlats> maximal_fine_cones(const Matroid& m);

}  // namespace coam

#endif  // COAM_TROPICAL_FAN_H_
