// Copyright 2026 beamdec Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "beamdec/osd.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "beamdec/codes.h"
#include "beamdec/sim.h"
#include "doctest.h"

namespace beamdec {
namespace {

// Minimum log-likelihood weight over every error matching the syndrome.
double brute_force_min_weight(const DecodingProblem& prob, const BitVector& s) {
  const size_t n = prob.num_errors();
  REQUIRE(n <= 20);
  double best = -1.0;
  for (uint32_t bits = 0; bits < (1u << n); ++bits) {
    BitVector e(n);
    for (size_t j = 0; j < n; ++j) e.set(j, (bits >> j) & 1);
    if (matvec(prob.H, e) != s) continue;
    double w = error_weight(prob, e);
    if (best < 0.0 || w < best) best = w;
  }
  REQUIRE(best >= 0.0);
  return best;
}

TEST_CASE("config validation") {
  PresetProblem preset = build_preset_problem("rep5", 0.1, ErrorType::kX, Stacking::kXZ);
  BitVector s(4);
  CHECK_THROWS_AS(bp_osd_decode(preset.problem, s, OsdConfig{0, 10, OsdMethod::kOsd0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      bp_osd_decode(preset.problem, s, OsdConfig{5, -1, OsdMethod::kCombinationSweep}),
      std::invalid_argument);
}

TEST_CASE("BP convergence short-circuits the post-processing") {
  PresetProblem preset = build_preset_problem("rep5", 0.1, ErrorType::kX, Stacking::kXZ);
  BitVector e = BitVector::parse("00100");
  BitVector s = syndrome_of(preset.problem, e);
  DecodeResult res = bp_osd_decode(preset.problem, s, kBp30OsdConfig);
  CHECK(res.converged);
  CHECK(res.decoded == e);
  CHECK(res.paths_expanded == 0);  // no candidates were needed
  CHECK(res.solutions_found == 1);
  CHECK(res.rounds_used == 0);
}

TEST_CASE("every chain syndrome decodes to the brute-force minimum weight") {
  PresetProblem preset = build_preset_problem("rep5", 0.1, ErrorType::kX, Stacking::kXZ);
  const DecodingProblem& prob = preset.problem;
  OsdConfig cfg{1, 10, OsdMethod::kCombinationSweep};  // 1 iteration forces OSD often
  int osd_engaged = 0;
  for (uint32_t bits = 0; bits < 16; ++bits) {
    BitVector s(4);
    for (size_t i = 0; i < 4; ++i) s.set(i, (bits >> i) & 1);
    DecodeResult res = bp_osd_decode(prob, s, cfg);
    REQUIRE(res.converged);
    CHECK(matvec(prob.H, res.decoded) == s);
    CHECK(res.weight == doctest::Approx(brute_force_min_weight(prob, s)).epsilon(1e-12));
    if (res.paths_expanded > 0) ++osd_engaged;
  }
  CHECK(osd_engaged > 0);
}

TEST_CASE("candidate count follows the sweep formula") {
  PresetProblem preset = build_preset_problem("bb72", 0.05, ErrorType::kX, Stacking::kXZ);
  const DecodingProblem& prob = preset.problem;
  const int num_free =
      static_cast<int>(prob.num_errors() - row_echelon(prob.H).rank);

  // Find a sampled syndrome that two BP iterations cannot solve.
  BitVector hard_s;
  for (uint64_t shot = 0;; ++shot) {
    REQUIRE(shot < 5000);
    ShotRng rng = ShotRng::for_shot(31337, shot);
    BitVector e = sample_error(prob, rng);
    BitVector s = syndrome_of(prob, e);
    BpOutcome out = masked_bp(prob, initial_messages(prob), {}, s, 2);
    if (!out.converged()) {
      hard_s = s;
      break;
    }
  }

  DecodeResult osd0 = bp_osd_decode(prob, hard_s, OsdConfig{2, 10, OsdMethod::kOsd0});
  CHECK(osd0.converged);
  CHECK(matvec(prob.H, osd0.decoded) == hard_s);
  CHECK(osd0.paths_expanded == 1);

  DecodeResult small = bp_osd_decode(prob, hard_s, OsdConfig{2, 4, OsdMethod::kCombinationSweep});
  CHECK(small.paths_expanded == 1 + num_free + 4 * 3 / 2);

  DecodeResult wide =
      bp_osd_decode(prob, hard_s, OsdConfig{2, 1000, OsdMethod::kCombinationSweep});
  CHECK(wide.paths_expanded == 1 + num_free + num_free * (num_free - 1) / 2);
  CHECK(wide.converged);
  CHECK(matvec(prob.H, wide.decoded) == hard_s);
  // Widening the sweep never increases the chosen weight.
  CHECK(wide.weight <= small.weight + 1e-12);
  CHECK(small.weight <= osd0.weight + 1e-12);
}

TEST_CASE("column relabeling permutes the output") {
  const size_t m = 6, n = 12;
  std::mt19937_64 rng(509);
  std::vector<std::vector<uint32_t>> rows(m);
  for (uint32_t j = 0; j < n; ++j) {
    std::set<uint32_t> dets;
    while (dets.size() < 2) dets.insert(static_cast<uint32_t>(rng() % m));
    for (uint32_t r : dets) rows[r].push_back(j);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  std::vector<double> p(n);
  for (size_t j = 0; j < n; ++j) p[j] = 0.05 + 0.02 * static_cast<double>(j);

  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);  // perm[old] = new column

  std::vector<std::vector<uint32_t>> perm_rows(m);
  for (size_t i = 0; i < m; ++i) {
    for (uint32_t j : rows[i]) perm_rows[i].push_back(perm[j]);
    std::sort(perm_rows[i].begin(), perm_rows[i].end());
  }
  std::vector<double> perm_p(n);
  for (size_t j = 0; j < n; ++j) perm_p[perm[j]] = p[j];

  SparseBinaryMatrix empty_a(0, n, std::vector<std::vector<uint32_t>>{});
  DecodingProblem prob =
      DecodingProblem::make(SparseBinaryMatrix(m, n, std::move(rows)), empty_a, p);
  DecodingProblem perm_prob = DecodingProblem::make(
      SparseBinaryMatrix(m, n, std::move(perm_rows)), empty_a, perm_p);

  OsdConfig cfg{3, 6, OsdMethod::kCombinationSweep};
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BitVector e(n);
    for (size_t j = 0; j < n; ++j) e.set(j, (rng() % 100) < 20);
    BitVector s = matvec(prob.H, e);

    // Relabeling is only exact when the reliability sort sees no ties.
    BpOutcome probe = masked_bp(prob, initial_messages(prob), {}, s, cfg.bp_iters);
    std::vector<double> sorted_post = probe.last_posterior;
    std::sort(sorted_post.begin(), sorted_post.end());
    if (std::adjacent_find(sorted_post.begin(), sorted_post.end()) != sorted_post.end()) {
      continue;
    }
    ++compared;

    DecodeResult a = bp_osd_decode(prob, s, cfg);
    DecodeResult b = bp_osd_decode(perm_prob, s, cfg);
    CHECK(a.converged == b.converged);
    CHECK(a.paths_expanded == b.paths_expanded);
    for (size_t j = 0; j < n; ++j) CHECK(a.decoded.get(j) == b.decoded.get(perm[j]));
    CHECK(a.weight == doctest::Approx(b.weight).epsilon(1e-12));
  }
  CHECK(compared >= 20);
}

TEST_CASE("the sweep strictly beats plain OSD-0 on a hard batch") {
  PresetProblem preset = build_preset_problem("bb72", 0.07, ErrorType::kX, Stacking::kXZ);
  const DecodingProblem& prob = preset.problem;
  OsdConfig osd0{30, 10, OsdMethod::kOsd0};
  OsdConfig sweep{30, 10, OsdMethod::kCombinationSweep};

  int osd0_failures = 0, sweep_failures = 0;
  for (uint64_t shot = 0; shot < 2000; ++shot) {
    ShotRng rng = ShotRng::for_shot(777, shot);
    BitVector e = sample_error(prob, rng);
    BitVector s = syndrome_of(prob, e);
    DecodeResult a = bp_osd_decode(prob, s, osd0);
    DecodeResult b = bp_osd_decode(prob, s, sweep);
    if (!a.converged || !logical_flip(prob, e ^ a.decoded).is_zero()) ++osd0_failures;
    if (!b.converged || !logical_flip(prob, e ^ b.decoded).is_zero()) ++sweep_failures;
  }
  CHECK(osd0_failures > 0);
  CHECK(sweep_failures < osd0_failures);
}

TEST_CASE("inconsistent syndromes return a best effort vector") {
  SparseBinaryMatrix h(2, 2, {{0, 1}, {0, 1}});
  SparseBinaryMatrix a(0, 2, std::vector<std::vector<uint32_t>>{});
  DecodingProblem prob = DecodingProblem::make(h, a, {0.1, 0.2});
  DecodeResult res = bp_osd_decode(prob, BitVector::parse("10"), kBp30OsdConfig);
  CHECK_FALSE(res.converged);
  CHECK(res.decoded.size() == 2);
  CHECK(res.solutions_found == 0);
  CHECK(res.paths_expanded == 1);
  CHECK(res.weight == doctest::Approx(error_weight(prob, res.decoded)));
}

}  // namespace
}  // namespace beamdec
