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

#include "coam/harness.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "coam/coamoeba.h"
#include "coam/discriminant.h"
#include "coam/error.h"

namespace coam {

namespace {

void for_each_chunk(std::size_t chunks, unsigned threads,
                    const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) fn(c);
    });
  }
  for (std::thread& t : pool) t.join();
}

// One draw per index; nullopt when rejected near the arrangement.
std::vector<std::optional<std::vector<double>>> draw(const Matroid& m,
                                                      std::size_t n,
                                                      std::uint64_t seed,
                                                      unsigned threads) {
  HornKapranovMap h(m.vectors());
  const std::size_t d = m.ambient_rank();
  std::vector<std::optional<std::vector<double>>> out(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    std::mt19937_64 rng(seed + c);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    std::vector<std::complex<double>> y(d);
    const std::size_t end = std::min(n, (c + 1) * kSampleChunk);
    for (std::size_t i = c * kSampleChunk; i < end; ++i) {
      for (auto& z : y) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
      }
      try {
        out[i] = psi_complex(h, y).arg;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNearArrangement) throw;
      }
    }
  });
  return out;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("COAMOEBA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

PointCloud sample_coamoeba(const Matroid& m, std::size_t n, std::uint64_t seed,
                           unsigned threads) {
  if (!nondefective(m)) {
    throw Error(ErrorCode::kDefective, "configuration is defective");
  }
  PointCloud cloud;
  cloud.n_requested = n;
  for (auto& p : draw(m, n, seed, threads)) {
    if (p) {
      cloud.points.push_back(std::move(*p));
    } else {
      ++cloud.n_rejected;
    }
  }
  return cloud;
}

std::vector<RatVector> grid_points(const Matroid& m, std::size_t n) {
  const std::size_t d = m.ambient_rank();
  std::vector<RatVector> out;
  if (d == 0) return out;
  for (long radius = 1; out.size() < n; ++radius) {
    IntVector y(d, Int(-radius));
    while (true) {
      bool on_shell = std::any_of(y.begin(), y.end(), [&](const Int& x) {
        return abs(x) == radius;
      });
      auto lead = std::find_if(y.begin(), y.end(),
                               [](const Int& x) { return sgn(x) != 0; });
      bool canonical = on_shell && lead != y.end() && sgn(*lead) > 0 &&
                       content(y) == 1;
      if (canonical) {
        bool off = true;
        for (std::size_t r = 0; r < m.size() && off; ++r) {
          off = sgn(dot(m.vectors().row(r), y)) != 0;
        }
        if (off) {
          out.emplace_back(y.begin(), y.end());
          if (out.size() == n) break;
        }
      }
      std::size_t k = d;
      while (k > 0 && y[k - 1] == radius) y[--k] = -radius;
      if (k == 0) break;
      ++y[k - 1];
    }
  }
  return out;
}

ResidueReport residue_check(const SparsePoly& f, const Matroid& m,
                            std::size_t n) {
  if (f.variable_count() != m.ambient_rank()) {
    throw Error(ErrorCode::kInvalidInput, "polynomial variables do not match d");
  }
  HornKapranovMap h(m.vectors());
  ResidueReport report;
  report.max_abs = 0;
  for (const RatVector& y : grid_points(m, n)) {
    Rat r = abs(evaluate_exact(f, psi_exact(h, y)));
    if (!report.worst_point || r > report.max_abs) {
      report.max_abs = r;
      report.worst_point = y;
    }
    ++report.n_points;
  }
  return report;
}

RoundtripReport gauss_roundtrip(const SparsePoly& f, const Matroid& m,
                                std::size_t n) {
  if (f.variable_count() != m.ambient_rank()) {
    throw Error(ErrorCode::kInvalidInput, "polynomial variables do not match d");
  }
  HornKapranovMap h(m.vectors());
  RoundtripReport report;
  for (const RatVector& y : grid_points(m, 8 * n + 16)) {
    if (report.n_checked == n) break;
    RatVector x = psi_exact(h, y);
    RatVector g;
    try {
      g = log_gauss(f, x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularPoint) throw;
      ++report.n_singular;
      continue;
    }
    ++report.n_checked;
    if (!projectively_equal(g, y)) {
      report.pass = false;
      report.counterexample = y;
      report.image = std::move(g);
      report.diagnosis = "log_gauss(psi(y)) is not proportional to y";
      return report;
    }
  }
  if (report.n_checked < n) {
    report.pass = false;
    report.diagnosis = "too few nonsingular grid points";
  }
  return report;
}

SampleReport conjecture_experiment_d3(const Matroid& m, std::size_t n,
                                      double tol, std::uint64_t seed,
                                      unsigned threads) {
  const std::vector<Prism> prisms = prisms_d3(m);
  SampleReport report;
  report.n_samples = n;
  report.seed = seed;
  report.tolerance = tol;

  auto draws = draw(m, n, seed, threads);
  std::vector<char> inside(n, 0);
  std::vector<double> distance(n, 0.0);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    const std::size_t end = std::min(n, (c + 1) * kSampleChunk);
    for (std::size_t i = c * kSampleChunk; i < end; ++i) {
      if (!draws[i]) continue;
      const auto& p = *draws[i];
      std::array<double, 3> theta{p[0], p[1], p[2]};
      if (contains_pls3(prisms, theta, tol).inside) {
        inside[i] = 1;
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      for (const Prism& prism : prisms) {
        best = std::min(best, distance2(prism.base, project_angles(prism, theta)));
      }
      distance[i] = best;
    }
  });

  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!draws[i]) continue;
    ++report.n_valid;
    if (inside[i]) {
      ++hits;
    } else {
      report.max_boundary_distance = std::max(report.max_boundary_distance, distance[i]);
    }
  }
  report.inside_fraction =
      report.n_valid == 0 ? 1.0
                          : static_cast<double>(hits) / static_cast<double>(report.n_valid);
  return report;
}

}  // namespace coam
