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

#include "beamdec/beam.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace beamdec {

void BeamConfig::validate() const {
  auto require = [](int value, const char* name) {
    if (value < 1) {
      throw std::invalid_argument(std::string("beam config: ") + name + " must be >= 1, got " +
                                  std::to_string(value));
    }
  };
  require(max_rounds, "max_rounds");
  require(beam_width, "beam_width");
  require(initial_iters, "initial_iters");
  require(iters_per_round, "iters_per_round");
  require(num_results, "num_results");
}

uint32_t select_branch_node(std::span<const double> sum_llr, const MaskAssignment& mask) {
  std::vector<uint8_t> masked(sum_llr.size(), 0);
  for (const MaskEntry& entry : mask) {
    masked[entry.pos] = 1;
  }
  bool found = false;
  uint32_t best = 0;
  double best_mag = 0.0;
  for (size_t j = 0; j < sum_llr.size(); ++j) {
    if (masked[j]) {
      continue;
    }
    double mag = std::fabs(sum_llr[j]);
    if (!found || mag < best_mag) {
      found = true;
      best = static_cast<uint32_t>(j);
      best_mag = mag;
    }
  }
  if (!found) {
    throw std::invalid_argument("select_branch_node: all nodes masked");
  }
  return best;
}

double path_score(std::span<const double> sum_llr, const MaskAssignment& mask, int iters_run) {
  if (iters_run < 1) {
    throw std::invalid_argument("path_score: iters_run must be >= 1");
  }
  std::vector<uint8_t> masked(sum_llr.size(), 0);
  for (const MaskEntry& entry : mask) {
    masked[entry.pos] = 1;
  }
  double total = 0.0;
  for (size_t j = 0; j < sum_llr.size(); ++j) {
    if (!masked[j]) {
      total += std::fabs(sum_llr[j]);
    }
  }
  return total / iters_run;
}

bool bounded_insert(std::vector<Path>& set, Path&& candidate, size_t beam_width) {
  if (set.size() < beam_width) {
    set.push_back(std::move(candidate));
    return true;
  }
  size_t min_idx = 0;
  for (size_t i = 1; i < set.size(); ++i) {
    if (set[i].score < set[min_idx].score) {
      min_idx = i;
    }
  }
  if (candidate.score > set[min_idx].score) {
    set.erase(set.begin() + static_cast<ptrdiff_t>(min_idx));
    set.push_back(std::move(candidate));
    return true;
  }
  return false;
}

namespace {

struct ResultSet {
  std::vector<std::pair<BitVector, double>> entries;  // (solution, weight), insertion order

  // Set semantics: an exact duplicate does not grow the set.
  void insert(const BitVector& v, const DecodingProblem& problem) {
    for (const auto& entry : entries) {
      if (entry.first == v) {
        return;
      }
    }
    entries.emplace_back(v, error_weight(problem, v));
  }

  // Minimum weight, first found on ties.
  const std::pair<BitVector, double>& best() const {
    size_t best_idx = 0;
    for (size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].second < entries[best_idx].second) {
        best_idx = i;
      }
    }
    return entries[best_idx];
  }
};

}  // namespace

DecodeResult beam_decode(const DecodingProblem& problem, const BitVector& s,
                         const BeamConfig& cfg, BeamTrace* trace) {
  cfg.validate();
  if (s.size() != problem.num_detectors()) {
    throw std::invalid_argument("beam_decode: syndrome length " + std::to_string(s.size()) +
                                " does not match num detectors " +
                                std::to_string(problem.num_detectors()));
  }
  auto start = std::chrono::steady_clock::now();
  size_t n = problem.num_errors();

  DecodeResult res;
  auto finish = [&](BitVector decoded, bool converged, int rounds, int expanded,
                    int solutions) {
    res.weight = error_weight(problem, decoded);
    res.decoded = std::move(decoded);
    res.converged = converged;
    res.rounds_used = rounds;
    res.paths_expanded = expanded;
    res.solutions_found = solutions;
    res.wall_time = std::chrono::steady_clock::now() - start;
    return res;
  };

  ResultSet results;
  BpOutcome seed_out = masked_bp(problem, initial_messages(problem), {}, s, cfg.initial_iters);
  if (seed_out.converged()) {
    results.insert(*seed_out.decoded, problem);
    if (cfg.num_results == 1) {
      return finish(*seed_out.decoded, true, 0, 0, 1);
    }
  }

  std::vector<Path> set;
  if (n > 0) {
    Path seed;
    seed.next_pos = select_branch_node(seed_out.sum_llr, {});
    seed.edge_msgs = std::move(seed_out.final_messages);
    seed.score = 0.0;
    set.push_back(std::move(seed));
  }

  int paths_expanded = 0;
  int rounds_used = 0;
  std::vector<Path> next_set;
  std::vector<size_t> order;
  for (int round = 1; round <= cfg.max_rounds && !set.empty(); ++round) {
    rounds_used = round;
    int round_calls = 0;
    int mask_len_min = 0;
    int mask_len_max = 0;
    next_set.clear();

    // Parents in descending score order; stable, so ties keep arrival order.
    order.resize(set.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return set[a].score > set[b].score; });

    for (size_t idx : order) {
      const Path& parent = set[idx];
      for (uint8_t value = 0; value <= 1; ++value) {
        MaskAssignment child_mask = parent.pos_val_pairs;
        child_mask.push_back(MaskEntry{parent.next_pos, value});
        int len = static_cast<int>(child_mask.size());
        if (round_calls == 0) {
          mask_len_min = mask_len_max = len;
        } else {
          mask_len_min = std::min(mask_len_min, len);
          mask_len_max = std::max(mask_len_max, len);
        }

        BpOutcome out =
            masked_bp(problem, parent.edge_msgs, child_mask, s, cfg.iters_per_round);
        ++paths_expanded;
        ++round_calls;

        if (out.converged()) {
          results.insert(*out.decoded, problem);
          if (static_cast<int>(results.entries.size()) == cfg.num_results) {
            if (trace) {
              trace->rounds.push_back({round_calls, static_cast<int>(next_set.size()),
                                       mask_len_min, mask_len_max});
            }
            return finish(results.best().first, true, rounds_used, paths_expanded,
                          static_cast<int>(results.entries.size()));
          }
          continue;
        }
        if (out.iters_run == 0) {
          continue;  // provably infeasible branch (violated fully-masked row)
        }
        if (child_mask.size() == n) {
          continue;  // every node fixed and not a solution
        }
        Path child;
        child.next_pos = select_branch_node(out.sum_llr, child_mask);
        child.score = path_score(out.sum_llr, child_mask, out.iters_run);
        child.edge_msgs = std::move(out.final_messages);
        child.pos_val_pairs = std::move(child_mask);
        bounded_insert(next_set, std::move(child), static_cast<size_t>(cfg.beam_width));
      }
    }

    if (trace) {
      trace->rounds.push_back(
          {round_calls, static_cast<int>(next_set.size()), mask_len_min, mask_len_max});
    }
    std::swap(set, next_set);
  }

  if (!results.entries.empty()) {
    return finish(results.best().first, true, rounds_used, paths_expanded,
                  static_cast<int>(results.entries.size()));
  }
  return finish(std::move(seed_out.last_hard_decision), false, rounds_used, paths_expanded, 0);
}

namespace {

const std::pair<std::string_view, BeamConfig> kBeamPresets[] = {
    {"beam8_230iters", BeamConfig{10, 8, 30, 20, 1}},
    {"beam32_340iters", BeamConfig{10, 32, 40, 30, 1}},
    {"beam64_640iters", BeamConfig{20, 64, 40, 30, 1}},
    {"beam64_32res_640iters", BeamConfig{20, 64, 40, 30, 32}},
};

}  // namespace

std::span<const std::pair<std::string_view, BeamConfig>> beam_presets() {
  return kBeamPresets;
}

const BeamConfig* find_beam_preset(std::string_view name) {
  for (const auto& [preset_name, cfg] : kBeamPresets) {
    if (preset_name == name) {
      return &cfg;
    }
  }
  return nullptr;
}

}  // namespace beamdec
