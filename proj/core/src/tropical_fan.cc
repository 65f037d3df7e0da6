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

#include "coam/tropical_fan.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "coam/error.h"

namespace coam {

Weight indicator(const Matroid& m, LabelSet s) {
  Weight w(m.size(), Rat(0));
  for (std::size_t i : members(s)) w[i] = 1;
  return w;
}

Weight to_weight(std::initializer_list<long> values) {
  Weight w;
  for (long v : values) w.emplace_back(v);
  return w;
}

InducedMatroid induced_matroid(const Matroid& m, const Weight& w) {
  if (w.size() != m.size()) {
    throw Error(ErrorCode::kInvalidInput, "weight length mismatch");
  }
  InducedMatroid out;
  Rat best;
  bool first = true;
  for (LabelSet b : m.bases()) {
    Rat total = 0;
    for (std::size_t i : members(b)) total += w[i];
    if (first || total > best) {
      best = total;
      out.max_bases.clear();
      first = false;
    }
    if (total == best) out.max_bases.push_back(b);
  }
  LabelSet used = 0;
  for (LabelSet b : out.max_bases) used |= b;
  out.loops = m.ground_set() & ~used;
  return out;
}

bool in_tropical(const Matroid& m, const Weight& w) {
  return induced_matroid(m, w).loops == 0;
}

std::vector<LabelSet> FlagOfFlats::form_sets() const {
  std::vector<LabelSet> out;
  for (const Flat& f : chain) out.push_back(f.forms);
  return out;
}

FlagOfFlats weight_to_flag(const Matroid& m, const Weight& w) {
  if (!in_tropical(m, w)) {
    throw Error(ErrorCode::kNotInTropical, "the induced matroid has loops");
  }
  std::set<Rat> values(w.begin(), w.end());
  FlagOfFlats flag;
  flag.chain.push_back(m.make_flat(m.span_closure(m.ground_set())));
  for (const Rat& v : values) {
    LabelSet level = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > v) level |= singleton(i);
    }
    if (m.span_closure(level) != level) {
      throw Error(ErrorCode::kLevelSetNotAFlat,
                  "level set above a weight value is not closed");
    }
    flag.chain.push_back(m.make_flat(level));
  }
  return flag;
}

bool flag_cone_contains(const FlagOfFlats& f, const Weight& w) {
  std::vector<LabelSet> sets = f.form_sets();
  bool have_previous = false;
  Rat previous;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    LabelSet diff = sets[i - 1] & ~sets[i];
    if (diff == 0 || (sets[i] & ~sets[i - 1]) != 0) return false;
    std::vector<std::size_t> idx = members(diff);
    if (idx.back() >= w.size()) return false;
    const Rat& value = w[idx.front()];
    for (std::size_t j : idx) {
      if (w[j] != value) return false;
    }
    if (have_previous && !(value > previous)) return false;
    previous = value;
    have_previous = true;
  }
  return true;
}

Weight interior_weight(const FlagOfFlats& f, std::size_t n) {
  Weight w(n, Rat(0));
  std::vector<LabelSet> sets = f.form_sets();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t j : members(sets[i - 1] & ~sets[i])) {
      w[j] = static_cast<long>(i);
    }
  }
  return w;
}

std::vector<BergmanRay> bergman_rays(const Matroid& m) {
  std::vector<BergmanRay> out;
  for (Flat& f : flacets(m)) {
    Weight w = indicator(m, f.forms);
    out.push_back({std::move(f), std::move(w)});
  }
  return out;
}

std::vector<FlagOfFlats> complete_flags(const Matroid& m) {
  std::vector<Flat> all = flats(m);
  std::map<std::size_t, std::vector<const Flat*>> by_corank;
  for (const Flat& f : all) by_corank[f.corank].push_back(&f);

  std::vector<FlagOfFlats> out;
  std::vector<Flat> chain;
  auto extend = [&](auto&& self, const Flat& top) -> void {
    chain.push_back(top);
    if (top.corank == 0) {
      out.push_back({chain});
    } else {
      for (const Flat* f : by_corank[top.corank - 1]) {
        if ((f->forms & ~top.forms) == 0) self(self, *f);
      }
    }
    chain.pop_back();
  };
  extend(extend, *by_corank[m.rank()].front());
  return out;
}

std::vector<MaximalCone> maximal_cones(const Matroid& m) {
  std::vector<BergmanRay> rays = bergman_rays(m);
  std::vector<std::vector<LabelSet>> ray_bases;
  for (const BergmanRay& r : rays) {
    ray_bases.push_back(induced_matroid(m, r.indicator).max_bases);
  }

  std::map<std::vector<LabelSet>, std::size_t> groups;
  for (const FlagOfFlats& f : complete_flags(m)) {
    groups[induced_matroid(m, interior_weight(f, m.size())).max_bases]++;
  }

  std::vector<MaximalCone> out;
  for (const auto& [bases, count] : groups) {
    MaximalCone cone;
    cone.max_bases = bases;
    cone.fine_cone_count = count;
    Weight sum(m.size(), Rat(0));
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (std::includes(ray_bases[r].begin(), ray_bases[r].end(),
                        bases.begin(), bases.end())) {
        cone.rays.push_back(r);
        for (std::size_t i = 0; i < m.size(); ++i) sum[i] += rays[r].indicator[i];
      }
    }
    if (induced_matroid(m, sum).max_bases != bases) {
      throw Error(ErrorCode::kLevelSetNotAFlat,
                  "ray sum is not interior to its cone");
    }
    cone.flag = weight_to_flag(m, sum);
    out.push_back(std::move(cone));
  }
  std::sort(out.begin(), out.end(),
            [](const MaximalCone& a, const MaximalCone& b) {
              return a.rays < b.rays;
            });
  return out;
}

std::vector<FlagOfFlats> maximal_fine_cones(const Matroid& m) {
  std::vector<FlagOfFlats> out;
  for (MaximalCone& c : maximal_cones(m)) out.push_back(std::move(c.flag));
  return out;
}

}  // namespace coam
