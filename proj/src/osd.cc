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
#include <bit>
#include <numeric>
#include <stdexcept>

namespace beamdec {

namespace {

// Pivot-row values packed into words; rank bits.
using PivotBits = std::vector<uint64_t>;

double pivot_weight(const PivotBits& bits, const std::vector<uint32_t>& pivot_cols,
                    const std::vector<double>& prior_llr) {
  double total = 0.0;
  for (size_t w = 0; w < bits.size(); ++w) {
    uint64_t word = bits[w];
    while (word) {
      unsigned b = static_cast<unsigned>(std::countr_zero(word));
      total += prior_llr[pivot_cols[w * 64 + b]];
      word &= word - 1;
    }
  }
  return total;
}

void xor_into(PivotBits& dst, const PivotBits& src) {
  for (size_t w = 0; w < dst.size(); ++w) {
    dst[w] ^= src[w];
  }
}

}  // namespace

DecodeResult bp_osd_decode(const DecodingProblem& problem, const BitVector& s,
                           const OsdConfig& cfg) {
  if (cfg.bp_iters < 1) {
    throw std::invalid_argument("bp_osd_decode: bp_iters must be >= 1");
  }
  if (cfg.method == OsdMethod::kCombinationSweep && cfg.order < 0) {
    throw std::invalid_argument("bp_osd_decode: order must be >= 0");
  }
  auto start = std::chrono::steady_clock::now();
  size_t n = problem.num_errors();

  DecodeResult res;
  auto finish = [&](BitVector decoded, bool converged, int candidates, int solutions) {
    res.weight = error_weight(problem, decoded);
    res.decoded = std::move(decoded);
    res.converged = converged;
    res.rounds_used = 0;
    res.paths_expanded = candidates;
    res.solutions_found = solutions;
    res.wall_time = std::chrono::steady_clock::now() - start;
    return res;
  };

  BpOutcome out = masked_bp(problem, initial_messages(problem), {}, s, cfg.bp_iters);
  if (out.converged()) {
    return finish(*out.decoded, true, 0, 1);
  }

  // Reliability order: most-error-likely first (ascending last-iteration
  // posterior), stable so equal posteriors fall back to index order.
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return out.last_posterior[a] < out.last_posterior[b];
  });

  EliminationResult elim = row_echelon(problem.H, order);
  size_t rank = elim.rank;
  BitVector t = elim.apply_transform(s);
  bool consistent = true;
  for (size_t r = rank; r < elim.num_rows; ++r) {
    if (t.get(r)) {
      consistent = false;
      break;
    }
  }

  size_t pivot_words = (rank + 63) / 64;
  PivotBits base(pivot_words, 0);
  for (size_t r = 0; r < rank; ++r) {
    if (t.get(r)) {
      base[r >> 6] |= uint64_t{1} << (r & 63);
    }
  }

  auto assemble = [&](const PivotBits& pivot_bits, std::span<const uint32_t> extra) {
    BitVector x(n);
    for (size_t r = 0; r < rank; ++r) {
      if ((pivot_bits[r >> 6] >> (r & 63)) & 1) {
        x.set(elim.pivot_cols[r], true);
      }
    }
    for (uint32_t c : extra) {
      x.set(c, true);
    }
    return x;
  };

  if (!consistent) {
    // Best effort: the OSD-0 vector for the satisfiable pivot rows.
    return finish(assemble(base, {}), false, 1, 0);
  }
  if (cfg.method == OsdMethod::kOsd0) {
    return finish(assemble(base, {}), true, 1, 1);
  }

  // Non-pivot columns in reliability order, with their pivot-row bit columns.
  std::vector<uint8_t> is_pivot(n, 0);
  for (uint32_t c : elim.pivot_cols) {
    is_pivot[c] = 1;
  }
  std::vector<uint32_t> non_pivots;
  non_pivots.reserve(n - rank);
  for (uint32_t c : order) {
    if (!is_pivot[c]) {
      non_pivots.push_back(c);
    }
  }
  std::vector<PivotBits> col_bits(non_pivots.size(), PivotBits(pivot_words, 0));
  for (size_t a = 0; a < non_pivots.size(); ++a) {
    for (size_t r = 0; r < rank; ++r) {
      if (elim.reduced_bit(r, non_pivots[a])) {
        col_bits[a][r >> 6] |= uint64_t{1} << (r & 63);
      }
    }
  }

  double best_weight = pivot_weight(base, elim.pivot_cols, problem.prior_llr);
  PivotBits best_bits = base;
  std::vector<uint32_t> best_extra;
  int candidates = 1;
  auto consider = [&](const PivotBits& bits, std::initializer_list<uint32_t> extra_idx) {
    ++candidates;
    double weight = pivot_weight(bits, elim.pivot_cols, problem.prior_llr);
    std::vector<uint32_t> extra;
    for (uint32_t a : extra_idx) {
      weight += problem.prior_llr[non_pivots[a]];
      extra.push_back(non_pivots[a]);
    }
    if (weight < best_weight) {
      best_weight = weight;
      best_bits = bits;
      best_extra = std::move(extra);
    }
  };

  PivotBits scratch(pivot_words);
  for (uint32_t a = 0; a < non_pivots.size(); ++a) {
    scratch = base;
    xor_into(scratch, col_bits[a]);
    consider(scratch, {a});
  }
  uint32_t window = std::min<uint32_t>(static_cast<uint32_t>(cfg.order),
                                       static_cast<uint32_t>(non_pivots.size()));
  for (uint32_t a = 0; a + 1 < window; ++a) {
    for (uint32_t b = a + 1; b < window; ++b) {
      scratch = base;
      xor_into(scratch, col_bits[a]);
      xor_into(scratch, col_bits[b]);
      consider(scratch, {a, b});
    }
  }

  return finish(assemble(best_bits, best_extra), true, candidates, 1);
}

}  // namespace beamdec
