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

#ifndef BEAMDEC_BP_H
#define BEAMDEC_BP_H

#include <optional>

#include "beamdec/problem.h"

namespace beamdec {

/// Message saturation bound. Error-to-detector messages are clamped to
/// [-kMsgMax, +kMsgMax]; a detector with no other unmasked neighbor sends
/// magnitude kMsgMax with sign +1 (times the syndrome sign).
inline constexpr double kMsgMax = 50.0;

/// One value per Tanner edge in the problem's fixed edge enumeration
/// (by error node, then its detectors in row order).
using EdgeMessages = std::vector<double>;

struct MaskEntry {
  uint32_t pos;
  uint8_t value;  // 0 or 1
};
/// Error nodes pinned to known values; positions must be distinct and < N.
using MaskAssignment = std::vector<MaskEntry>;

enum class BpStatus : uint8_t { kConverged, kFailure };

struct BpOutcome {
  BpStatus status = BpStatus::kFailure;
  /// Present iff converged; satisfies H * decoded == s with masked positions
  /// carrying their assigned values.
  std::optional<BitVector> decoded;
  /// Hard decision of the last executed iteration, masked values substituted.
  /// Equals *decoded when converged.
  BitVector last_hard_decision;
  EdgeMessages final_messages;
  /// Per-node sum of posteriors over all executed iterations; entries at
  /// masked positions are left at zero and are not meaningful.
  std::vector<double> sum_llr;
  /// Posteriors of the last executed iteration (priors before iteration 1);
  /// masked positions keep the prior.
  std::vector<double> last_posterior;
  /// Iterations executed; 0 only when a violated fully-masked detector row
  /// makes convergence impossible before the first iteration.
  int iters_run = 0;

  bool converged() const { return status == BpStatus::kConverged; }
};

/// Every edge carries the prior LLR of its error node.
EdgeMessages initial_messages(const DecodingProblem& problem);

/// Min-sum belief propagation with a flooding schedule, warm-started from
/// edge_msgs, with masked error nodes removed from the graph: the working
/// syndrome pre-flips every detector in the column support of each (j, 1)
/// mask entry, and messages to or from masked nodes are ignored. Convergence
/// is checked every iteration; ties in the hard decision go to 1.
///
/// min_sum_scale multiplies detector message magnitudes; the 1.0 default is
/// plain min-sum and is what every decoder in this library uses.
BpOutcome masked_bp(const DecodingProblem& problem, const EdgeMessages& edge_msgs,
                    const MaskAssignment& mask, const BitVector& s, int max_iters,
                    double min_sum_scale = 1.0);

}  // namespace beamdec

#endif  // BEAMDEC_BP_H
