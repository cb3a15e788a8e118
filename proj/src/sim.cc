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

#include "beamdec/sim.h"

#include <sys/utsname.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace beamdec {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ShotRng ShotRng::for_shot(uint64_t base_seed, uint64_t shot) {
  // Counter-mode hash of (base_seed, shot): mix the pair down to one word so
  // nearby shots get unrelated streams regardless of worker scheduling.
  uint64_t state = base_seed;
  uint64_t a = splitmix64(state);
  state ^= shot + 0x9e3779b97f4a7c15ULL;
  uint64_t b = splitmix64(state);
  return ShotRng(a ^ (b + 0x165667b19e3779f9ULL));
}

uint64_t ShotRng::next_u64() {
  return splitmix64(state_);
}

BitVector sample_error(const DecodingProblem& problem, ShotRng& rng) {
  size_t n = problem.num_errors();
  BitVector e(n);
  for (size_t j = 0; j < n; ++j) {
    if (rng.next_unit() < problem.p[j]) {
      e.set(j, true);
    }
  }
  return e;
}

std::optional<DecoderSpec> parse_decoder_name(std::string_view name) {
  DecoderSpec spec;
  spec.name = std::string(name);
  if (name == "bp") {
    spec.kind = DecoderSpec::Kind::kBp;
    spec.bp_iters = 230;
    return spec;
  }
  if (name == "bp30+osd") {
    spec.kind = DecoderSpec::Kind::kBpOsd;
    spec.osd = kBp30OsdConfig;
    return spec;
  }
  if (const BeamConfig* cfg = find_beam_preset(name)) {
    spec.kind = DecoderSpec::Kind::kBeam;
    spec.beam = *cfg;
    return spec;
  }
  return std::nullopt;
}

std::vector<std::string> decoder_names() {
  std::vector<std::string> names = {"bp", "bp30+osd"};
  for (const auto& preset : beam_presets()) {
    names.emplace_back(preset.first);
  }
  return names;
}

DecodeResult decode_one(const DecodingProblem& problem, const BitVector& s,
                        const DecoderSpec& spec) {
  switch (spec.kind) {
    case DecoderSpec::Kind::kBeam:
      return beam_decode(problem, s, spec.beam);
    case DecoderSpec::Kind::kBpOsd:
      return bp_osd_decode(problem, s, spec.osd);
    case DecoderSpec::Kind::kBp:
      break;
  }
  auto start = std::chrono::steady_clock::now();
  BpOutcome out = masked_bp(problem, initial_messages(problem), {}, s, spec.bp_iters);
  DecodeResult res;
  res.converged = out.converged();
  res.decoded = std::move(out.last_hard_decision);
  res.weight = error_weight(problem, res.decoded);
  res.solutions_found = res.converged ? 1 : 0;
  res.wall_time = std::chrono::steady_clock::now() - start;
  return res;
}

SimStats run_trials(const DecodingProblem& problem,
                    const std::function<DecodeResult(const DecodingProblem&, const BitVector&)>&
                        decoder,
                    uint64_t shots, uint64_t base_seed, int workers, bool keep_per_shot) {
  if (shots < 1) {
    throw std::invalid_argument("run_trials: shots must be >= 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("run_trials: workers must be >= 1");
  }

  std::vector<PerShotRecord> records(shots);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (uint64_t shot = static_cast<uint64_t>(w); shot < shots;
           shot += static_cast<uint64_t>(workers)) {
        ShotRng rng = ShotRng::for_shot(base_seed, shot);
        uint64_t shot_seed = rng.state();
        BitVector e = sample_error(problem, rng);
        BitVector s = syndrome_of(problem, e);
        auto t0 = std::chrono::steady_clock::now();
        DecodeResult res = decoder(problem, s);
        auto t1 = std::chrono::steady_clock::now();
        bool failed = !res.converged || !logical_flip(problem, e ^ res.decoded).is_zero();
        records[shot] = PerShotRecord{
            shot,
            shot_seed,
            failed,
            res.converged,
            res.weight,
            res.rounds_used,
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()};
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back(work, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  for (const auto& err : errors) {
    if (err) {
      std::rethrow_exception(err);
    }
  }

  SimStats stats;
  stats.shots = shots;
  std::vector<int64_t> times;
  times.reserve(shots);
  int64_t total_ns = 0;
  for (const PerShotRecord& rec : records) {
    stats.logical_failures += rec.failed;
    stats.decoder_nonconvergence += !rec.converged;
    times.push_back(rec.time_ns);
    total_ns += rec.time_ns;
  }
  stats.mean_time = std::chrono::nanoseconds(total_ns / static_cast<int64_t>(shots));
  for (double q : {0.5, 0.9, 0.99, 0.999}) {
    stats.percentiles[q] = std::chrono::nanoseconds(percentile_ns(times, q));
  }
  if (keep_per_shot) {
    stats.per_shot_log = std::move(records);
  }
  return stats;
}

SimStats run_trials(const TrialPlan& plan) {
  if (plan.problem == nullptr) {
    throw std::invalid_argument("run_trials: plan has no problem");
  }
  const DecoderSpec& spec = plan.decoder;
  return run_trials(
      *plan.problem,
      [&spec](const DecodingProblem& problem, const BitVector& s) {
        return decode_one(problem, s, spec);
      },
      plan.shots, plan.base_seed, plan.workers, plan.keep_per_shot);
}

int64_t percentile_ns(std::span<const int64_t> samples, double q) {
  if (samples.empty()) {
    throw std::invalid_argument("percentile: empty sample list");
  }
  if (!(q > 0.0) || !(q <= 1.0)) {
    throw std::invalid_argument("percentile: q = " + std::to_string(q) + " outside (0, 1]");
  }
  std::vector<int64_t> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  size_t idx = static_cast<size_t>(std::ceil(q * static_cast<double>(sorted.size()))) - 1;
  return sorted[idx];
}

double combine_xz(double ler_x, double ler_z) {
  return std::min(ler_x + ler_z, 1.0);
}

void write_run_json(std::ostream& out, const std::string& plan_echo_json, const SimStats& stats) {
  nlohmann::json doc;
  doc["plan"] = plan_echo_json.empty() ? nlohmann::json::object()
                                       : nlohmann::json::parse(plan_echo_json);
  nlohmann::json pct = nlohmann::json::object();
  for (const auto& [q, ns] : stats.percentiles) {
    char key[16];
    std::snprintf(key, sizeof(key), "%g", q);
    pct[key] = ns.count();
  }
  doc["stats"] = {
      {"shots", stats.shots},
      {"logical_failures", stats.logical_failures},
      {"decoder_nonconvergence", stats.decoder_nonconvergence},
      {"logical_error_rate", stats.logical_error_rate()},
      {"mean_time_ns", stats.mean_time.count()},
      {"percentiles_ns", pct},
  };
  doc["version"] = std::string(kVersion);
  utsname uts{};
  if (uname(&uts) == 0) {
    doc["host"] = std::string(uts.sysname) + " " + uts.machine;
  } else {
    doc["host"] = "unknown";
  }
  out << doc.dump(2) << '\n';
}

void write_per_shot_csv(std::ostream& out, std::span<const PerShotRecord> records) {
  out << "shot,seed,failed,converged,weight,rounds,time_ns\n";
  char buf[64];
  for (const PerShotRecord& rec : records) {
    std::snprintf(buf, sizeof(buf), "%.17g", rec.weight);
    out << rec.shot << ',' << rec.seed << ',' << (rec.failed ? 1 : 0) << ','
        << (rec.converged ? 1 : 0) << ',' << buf << ',' << rec.rounds << ',' << rec.time_ns
        << '\n';
  }
}

}  // namespace beamdec
