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

#ifndef BEAMDEC_SIM_H
#define BEAMDEC_SIM_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "beamdec/beam.h"
#include "beamdec/osd.h"

namespace beamdec {

/// Counter-mode splitmix64 stream. Each shot derives its own generator from
/// (base_seed, shot index), so results are independent of worker count and
/// shot execution order.
class ShotRng {
 public:
  explicit ShotRng(uint64_t seed) : state_(seed) {}
  static ShotRng for_shot(uint64_t base_seed, uint64_t shot);

  uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits; platform-independent.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

/// Independent Bernoulli sample: bit j is 1 with probability p[j].
BitVector sample_error(const DecodingProblem& problem, ShotRng& rng);

/// A decoder selected by name. Valid names: "bp" (plain 230-iteration BP),
/// "bp30+osd", and the beam presets from beam_presets().
struct DecoderSpec {
  enum class Kind : uint8_t { kBp, kBeam, kBpOsd };
  Kind kind = Kind::kBp;
  int bp_iters = 230;
  BeamConfig beam;
  OsdConfig osd;
  std::string name;
};

std::optional<DecoderSpec> parse_decoder_name(std::string_view name);
/// All valid decoder names, for error messages.
std::vector<std::string> decoder_names();
DecodeResult decode_one(const DecodingProblem& problem, const BitVector& s,
                        const DecoderSpec& spec);

struct PerShotRecord {
  uint64_t shot = 0;
  uint64_t seed = 0;  // the shot's derived RNG seed
  bool failed = false;
  bool converged = false;
  double weight = 0.0;
  int rounds = 0;
  int64_t time_ns = 0;
};

struct SimStats {
  uint64_t shots = 0;
  uint64_t logical_failures = 0;        // non-converged or residual flips a logical
  uint64_t decoder_nonconvergence = 0;  // counted separately as well
  std::chrono::nanoseconds mean_time{0};
  std::map<double, std::chrono::nanoseconds> percentiles;  // 0.5, 0.9, 0.99, 0.999
  std::vector<PerShotRecord> per_shot_log;  // filled iff requested

  double logical_error_rate() const {
    return shots == 0 ? 0.0 : static_cast<double>(logical_failures) / static_cast<double>(shots);
  }
};

struct TrialPlan {
  const DecodingProblem* problem = nullptr;
  DecoderSpec decoder;
  uint64_t shots = 0;
  uint64_t base_seed = 0;
  int workers = 1;
  bool keep_per_shot = false;
};

SimStats run_trials(const TrialPlan& plan);
/// Same loop with an arbitrary decoder callable (must be thread-safe for
/// workers > 1). Decoder exceptions abort the run and propagate.
SimStats run_trials(const DecodingProblem& problem,
                    const std::function<DecodeResult(const DecodingProblem&, const BitVector&)>&
                        decoder,
                    uint64_t shots, uint64_t base_seed, int workers = 1,
                    bool keep_per_shot = false);

/// Nearest-rank percentile: sorts ascending, returns the element at index
/// ceil(q * n) - 1. Requires a non-empty sample list and q in (0, 1].
int64_t percentile_ns(std::span<const int64_t> samples, double q);

/// min(ler_x + ler_z, 1): union bound for independently decoded X and Z
/// sides.
double combine_xz(double ler_x, double ler_z);

/// One JSON document per run: plan echo (caller-provided), stats, software
/// version, host note.
void write_run_json(std::ostream& out, const std::string& plan_echo_json, const SimStats& stats);
/// Header: shot,seed,failed,converged,weight,rounds,time_ns
void write_per_shot_csv(std::ostream& out, std::span<const PerShotRecord> records);

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace beamdec

#endif  // BEAMDEC_SIM_H
