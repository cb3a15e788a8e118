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

#include "beamdec/bp.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamdec {

EdgeMessages initial_messages(const DecodingProblem& problem) {
  EdgeMessages msgs(problem.num_edges);
  for (size_t e = 0; e < problem.num_edges; ++e) {
    msgs[e] = problem.prior_llr[problem.edge_node[e]];
  }
  return msgs;
}

BpOutcome masked_bp(const DecodingProblem& problem, const EdgeMessages& edge_msgs,
                    const MaskAssignment& mask, const BitVector& s, int max_iters,
                    double min_sum_scale) {
  size_t n = problem.num_errors();
  size_t m = problem.num_detectors();
  if (edge_msgs.size() != problem.num_edges) {
    throw std::invalid_argument("masked_bp: message vector length " +
                                std::to_string(edge_msgs.size()) + " does not match edge count " +
                                std::to_string(problem.num_edges));
  }
  if (s.size() != m) {
    throw std::invalid_argument("masked_bp: syndrome length " + std::to_string(s.size()) +
                                " does not match num detectors " + std::to_string(m));
  }
  if (max_iters < 1) {
    throw std::invalid_argument("masked_bp: max_iters must be >= 1");
  }

  std::vector<uint8_t> masked(n, 0);
  for (const MaskEntry& entry : mask) {
    if (entry.pos >= n) {
      throw std::out_of_range("masked_bp: mask position " + std::to_string(entry.pos) +
                              " out of range (num errors " + std::to_string(n) + ")");
    }
    if (masked[entry.pos]) {
      throw std::invalid_argument("masked_bp: duplicate mask position " +
                                  std::to_string(entry.pos));
    }
    if (entry.value > 1) {
      throw std::invalid_argument("masked_bp: mask value must be 0 or 1");
    }
    masked[entry.pos] = 1;
  }

  // Working syndrome: each (j, 1) mask entry pre-flips the column support of j.
  BitVector s_prime = s;
  for (const MaskEntry& entry : mask) {
    if (entry.value) {
      for (uint32_t i : problem.H.col(entry.pos)) {
        s_prime.flip(i);
      }
    }
  }

  BpOutcome out;
  out.final_messages = edge_msgs;
  out.sum_llr.assign(n, 0.0);
  out.last_posterior = problem.prior_llr;
  out.last_hard_decision = BitVector(n);

  auto fill_mask = [&](BitVector& v) {
    for (const MaskEntry& entry : mask) {
      v.set(entry.pos, entry.value != 0);
    }
  };

  // A violated detector row with no unmasked neighbors can never be
  // satisfied, and descendant masks are supersets; fail before iterating.
  for (size_t i = 0; i < m; ++i) {
    if (!s_prime.get(i)) {
      continue;
    }
    bool all_masked = true;
    for (uint32_t e = problem.row_edge_offset[i]; e < problem.row_edge_offset[i + 1]; ++e) {
      if (!masked[problem.edge_node[problem.row_edge_ids[e]]]) {
        all_masked = false;
        break;
      }
    }
    if (all_masked) {
      fill_mask(out.last_hard_decision);
      out.iters_run = 0;
      return out;
    }
  }

  EdgeMessages& msg = out.final_messages;
  std::vector<double> det_msg(problem.num_edges, 0.0);
  BitVector hard(n);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  for (int t = 1; t <= max_iters; ++t) {
    // Detector pass: each detector sends, per unmasked edge, the syndrome
    // sign times the product of the other edges' signs times the smallest
    // other magnitude; min over the empty set saturates at kMsgMax with
    // sign +1.
    for (size_t i = 0; i < m; ++i) {
      int total_sign = s_prime.get(i) ? -1 : 1;
      double min1 = kInf;
      double min2 = kInf;
      uint32_t min_edge = 0;
      uint32_t begin = problem.row_edge_offset[i];
      uint32_t end = problem.row_edge_offset[i + 1];
      for (uint32_t t2 = begin; t2 < end; ++t2) {
        uint32_t e = problem.row_edge_ids[t2];
        if (masked[problem.edge_node[e]]) {
          continue;
        }
        double v = msg[e];
        if (v < 0.0) {
          total_sign = -total_sign;
        }
        double a = std::fabs(v);
        if (a < min1) {
          min2 = min1;
          min1 = a;
          min_edge = e;
        } else if (a < min2) {
          min2 = a;
        }
      }
      for (uint32_t t2 = begin; t2 < end; ++t2) {
        uint32_t e = problem.row_edge_ids[t2];
        if (masked[problem.edge_node[e]]) {
          continue;
        }
        int sign = msg[e] < 0.0 ? -total_sign : total_sign;
        double mag = e == min_edge ? min2 : min1;
        if (mag == kInf) {
          mag = kMsgMax;
        }
        det_msg[e] = sign * (min_sum_scale * mag);
      }
    }

    // Error pass: posterior = prior + sum of incoming detector messages;
    // outgoing message on edge e excludes e's own contribution.
    for (size_t j = 0; j < n; ++j) {
      if (masked[j]) {
        continue;
      }
      uint32_t begin = problem.node_edge_offset[j];
      uint32_t end = problem.node_edge_offset[j + 1];
      double total = 0.0;
      for (uint32_t e = begin; e < end; ++e) {
        total += det_msg[e];
      }
      double posterior = problem.prior_llr[j] + total;
      out.sum_llr[j] += posterior;
      out.last_posterior[j] = posterior;
      hard.set(j, posterior <= 0.0);  // tie decides 1
      for (uint32_t e = begin; e < end; ++e) {
        double v = posterior - det_msg[e];
        if (v > kMsgMax) {
          v = kMsgMax;
        } else if (v < -kMsgMax) {
          v = -kMsgMax;
        }
        msg[e] = v;
      }
    }

    // Convergence: H * hard == s_prime with masked positions held at zero.
    bool match = true;
    for (size_t i = 0; i < m && match; ++i) {
      bool bit = false;
      for (uint32_t t2 = problem.row_edge_offset[i]; t2 < problem.row_edge_offset[i + 1]; ++t2) {
        bit ^= hard.get(problem.edge_node[problem.row_edge_ids[t2]]);
      }
      match = bit == s_prime.get(i);
    }
    if (match) {
      fill_mask(hard);
      out.status = BpStatus::kConverged;
      out.decoded = hard;
      out.last_hard_decision = std::move(hard);
      out.iters_run = t;
      return out;
    }
  }

  fill_mask(hard);
  out.last_hard_decision = std::move(hard);
  out.iters_run = max_iters;
  return out;
}

}  // namespace beamdec
