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

#ifndef BEAMDEC_RESULT_H
#define BEAMDEC_RESULT_H

#include <chrono>

#include "beamdec/gf2.h"

namespace beamdec {

/// Per-syndrome decoder output. When converged is true the decoded vector
/// satisfies H * decoded == s exactly; weight always equals
/// error_weight(decoded).
struct DecodeResult {
  BitVector decoded;
  bool converged = false;
  double weight = 0.0;
  int rounds_used = 0;      // beam rounds entered (0 when the initial run decided)
  int paths_expanded = 0;   // beam: child BP calls; OSD: candidates evaluated
  int solutions_found = 0;  // distinct valid solutions collected
  std::chrono::nanoseconds wall_time{0};
};

}  // namespace beamdec

#endif  // BEAMDEC_RESULT_H
