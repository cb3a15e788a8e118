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

#ifndef BEAMDEC_BEAM_H
#define BEAMDEC_BEAM_H

#include <span>
#include <string_view>
#include <utility>

#include "beamdec/bp.h"
#include "beamdec/result.h"

namespace beamdec {

struct BeamConfig {
  int max_rounds = 1;
  int beam_width = 1;
  int initial_iters = 1;
  int iters_per_round = 1;
  int num_results = 1;

  /// Throws std::invalid_argument unless every field is >= 1.
  void validate() const;
};

/// A partial assignment under exploration: warm-start messages, the mask
/// accumulated so far, the node to branch on next, and the pruning score.
struct Path {
  EdgeMessages edge_msgs;
  MaskAssignment pos_val_pairs;
  uint32_t next_pos = 0;
  double score = 0.0;
};

/// Unmasked node with the least |sum_llr|; ties go to the lowest index.
/// Throws std::invalid_argument when every node is masked.
uint32_t select_branch_node(std::span<const double> sum_llr, const MaskAssignment& mask);

/// (sum over unmasked j of |sum_llr[j]|) / iters_run. Higher is more
/// promising. Requires iters_run >= 1.
double path_score(std::span<const double> sum_llr, const MaskAssignment& mask, int iters_run);

/// Keeps at most beam_width paths: inserts when below capacity, otherwise
/// replaces the current minimum-score member iff the candidate's score is
/// strictly greater (the first minimum on ties; equal scores keep the
/// incumbent). Returns whether the candidate was kept.
bool bounded_insert(std::vector<Path>& set, Path&& candidate, size_t beam_width);

/// Optional per-round instrumentation filled by beam_decode.
struct BeamRoundStats {
  int bp_calls = 0;        // masked BP invocations this round
  int set_size = 0;        // surviving paths after pruning
  int mask_len_min = 0;    // min/max mask length over the round's children
  int mask_len_max = 0;
};
struct BeamTrace {
  std::vector<BeamRoundStats> rounds;
};

/// Beam search over masked partial assignments.
///
/// An initial unmasked BP run (initial_iters) seeds the search; if it
/// converges and num_results == 1 its result is returned as-is. Each round
/// expands every surviving path into two children (parents in descending
/// score order, value 0 before value 1), warm-starting masked BP for
/// iters_per_round iterations. Converged children enter the result set
/// (deduplicated; reaching num_results returns the minimum-weight element,
/// first found on ties); the rest compete for beam_width slots. After
/// max_rounds the minimum-weight collected solution is returned, or the seed
/// BP hard decision flagged non-converged when there is none.
DecodeResult beam_decode(const DecodingProblem& problem, const BitVector& s,
                         const BeamConfig& cfg, BeamTrace* trace = nullptr);

/// Built-in beam configurations, in a fixed order.
std::span<const std::pair<std::string_view, BeamConfig>> beam_presets();
/// Returns nullptr for unknown names.
const BeamConfig* find_beam_preset(std::string_view name);

}  // namespace beamdec

#endif  // BEAMDEC_BEAM_H
