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

#ifndef BEAMDEC_OSD_H
#define BEAMDEC_OSD_H

#include "beamdec/bp.h"
#include "beamdec/result.h"

namespace beamdec {

enum class OsdMethod : uint8_t { kOsd0, kCombinationSweep };

struct OsdConfig {
  int bp_iters = 30;
  int order = 10;  // combination-sweep window; ignored by kOsd0
  OsdMethod method = OsdMethod::kCombinationSweep;
};

/// The `bp30+osd` baseline: 30 BP iterations then order-10 combination sweep.
inline constexpr OsdConfig kBp30OsdConfig{30, 10, OsdMethod::kCombinationSweep};

/// BP with ordered-statistics post-processing. Runs cfg.bp_iters unmasked BP
/// iterations and returns the BP solution on convergence. Otherwise sorts
/// columns most-error-likely first (ascending last-iteration posterior,
/// stable with index tie-break), eliminates in that order, and solves with
/// non-pivot bits fixed to zero (OSD-0). The combination sweep additionally
/// tries every single non-pivot bit, and every pair within the first
/// cfg.order non-pivot positions of the sorted order, keeping the
/// minimum-weight candidate (first found on ties).
///
/// paths_expanded reports the number of candidates evaluated:
/// 1 + (N - rank) + C(min(order, N - rank), 2) for the sweep, 1 for OSD-0.
/// An inconsistent syndrome yields the best-effort OSD-0 vector with
/// converged = false.
DecodeResult bp_osd_decode(const DecodingProblem& problem, const BitVector& s,
                           const OsdConfig& cfg);

}  // namespace beamdec

#endif  // BEAMDEC_OSD_H
