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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "beamdec/codes.h"
#include "beamdec/sim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 1;
constexpr int kExitUsage = 2;

struct NoiseModelArgs {
  std::string preset;
  double noise = 0.0;
  std::string type = "X";
  std::string stack = "XZ";
};

beamdec::PresetProblem build_from_args(const NoiseModelArgs& args) {
  beamdec::ErrorType etype =
      args.type == "X" ? beamdec::ErrorType::kX : beamdec::ErrorType::kZ;
  beamdec::Stacking stacking =
      args.stack == "XZ" ? beamdec::Stacking::kXZ : beamdec::Stacking::kXYZ;
  return beamdec::build_preset_problem(args.preset, args.noise, etype, stacking);
}

beamdec::DecoderSpec parse_decoder_or_throw(const std::string& name) {
  std::optional<beamdec::DecoderSpec> spec = beamdec::parse_decoder_name(name);
  if (!spec) {
    std::string valid;
    for (const std::string& candidate : beamdec::decoder_names()) {
      if (!valid.empty()) {
        valid += ", ";
      }
      valid += candidate;
    }
    throw std::invalid_argument("unknown decoder: " + name + " (valid: " + valid + ")");
  }
  return *spec;
}

beamdec::BitVector load_syndrome_file(const std::string& path, size_t expected_length) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open syndrome file: " + path);
  }
  std::string line;
  std::getline(in, line);
  return beamdec::parse_syndrome_line(line, expected_length);
}

int run_make_code(const NoiseModelArgs& args, const std::string& out_path) {
  beamdec::PresetProblem preset = build_from_args(args);
  beamdec::save_problem_file(preset.problem, out_path);
  std::printf("n=%zu k=%zu M=%zu N=%zu\n", preset.n, preset.k,
              preset.problem.num_detectors(), preset.problem.num_errors());
  return kExitOk;
}

int run_decode(const std::string& problem_path, const std::string& syndrome_path,
               const std::string& decoder_name) {
  beamdec::DecodingProblem problem = beamdec::load_problem_file(problem_path);
  beamdec::BitVector s = load_syndrome_file(syndrome_path, problem.num_detectors());
  beamdec::DecoderSpec spec = parse_decoder_or_throw(decoder_name);
  beamdec::DecodeResult res = beamdec::decode_one(problem, s, spec);
  std::printf("%s\n", res.decoded.to_string().c_str());
  std::printf("converged=%s weight=%.17g rounds=%d\n", res.converged ? "true" : "false",
              res.weight, res.rounds_used);
  return res.converged ? kExitOk : kExitNotConverged;
}

int run_simulate(const NoiseModelArgs& args, const std::string& problem_path,
                 const std::string& decoder_name, uint64_t shots, uint64_t seed, int workers,
                 const std::string& out_path, const std::string& csv_path) {
  beamdec::DecodingProblem problem;
  nlohmann::json plan_echo;
  if (!problem_path.empty()) {
    problem = beamdec::load_problem_file(problem_path);
    plan_echo["problem"] = problem_path;
  } else {
    beamdec::PresetProblem preset = build_from_args(args);
    problem = std::move(preset.problem);
    plan_echo["preset"] = args.preset;
    plan_echo["noise"] = args.noise;
    plan_echo["type"] = args.type;
    plan_echo["stack"] = args.stack;
  }
  plan_echo["decoder"] = decoder_name;
  plan_echo["shots"] = shots;
  plan_echo["seed"] = seed;
  plan_echo["workers"] = workers;
  plan_echo["num_errors"] = problem.num_errors();
  plan_echo["num_detectors"] = problem.num_detectors();
  plan_echo["num_logicals"] = problem.num_logicals();

  beamdec::TrialPlan plan;
  plan.problem = &problem;
  plan.decoder = parse_decoder_or_throw(decoder_name);
  plan.shots = shots;
  plan.base_seed = seed;
  plan.workers = workers;
  plan.keep_per_shot = !csv_path.empty();
  beamdec::SimStats stats = beamdec::run_trials(plan);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + out_path);
    }
    beamdec::write_run_json(out, plan_echo.dump(), stats);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + csv_path);
    }
    beamdec::write_per_shot_csv(out, stats.per_shot_log);
  }

  double mean_ms = static_cast<double>(stats.mean_time.count()) / 1e6;
  double p999_ms = static_cast<double>(stats.percentiles.at(0.999).count()) / 1e6;
  std::printf("shots=%llu failures=%llu ler=%.6g mean_ms=%.4f p999_ms=%.4f\n",
              static_cast<unsigned long long>(stats.shots),
              static_cast<unsigned long long>(stats.logical_failures),
              stats.logical_error_rate(), mean_ms, p999_ms);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beamdec: belief propagation + beam search decoding for quantum LDPC codes"};
  app.require_subcommand(1);

  NoiseModelArgs noise_args;
  std::string out_path;
  std::string problem_path;
  std::string syndrome_path;
  std::string decoder_name;
  std::string csv_path;
  uint64_t shots = 0;
  uint64_t seed = 0;
  int workers = 1;

  auto add_noise_model_flags = [&](CLI::App* cmd, bool required) {
    auto* preset = cmd->add_option("--preset", noise_args.preset,
                                   "code preset: rep<n>, bb72, bb90, bb144, hgp450");
    auto* noise = cmd->add_option("--noise", noise_args.noise, "physical error rate p")
                      ->check(CLI::Range(1e-12, 0.375));
    if (required) {
      preset->required();
      noise->required();
    }
    cmd->add_option("--type", noise_args.type, "decoded error type (default X)")
        ->check(CLI::IsMember({"X", "Z"}));
    cmd->add_option("--stack", noise_args.stack, "detector stacking (default XZ)")
        ->check(CLI::IsMember({"XZ", "XYZ"}));
  };

  CLI::App* make_code = app.add_subcommand("make-code", "write a code-capacity problem file");
  add_noise_model_flags(make_code, true);
  make_code->add_option("--out", out_path, "output problem file")->required();

  CLI::App* decode = app.add_subcommand("decode", "decode one syndrome from a file");
  decode->add_option("--problem", problem_path, "problem file")->required();
  decode->add_option("--syndrome", syndrome_path, "syndrome file (one line of 0/1)")->required();
  decode->add_option("--decoder", decoder_name, "decoder name")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate");
  simulate->add_option("--problem", problem_path, "problem file (overrides preset flags)");
  add_noise_model_flags(simulate, false);
  simulate->add_option("--decoder", decoder_name, "decoder name")->required();
  simulate->add_option("--shots", shots, "number of shots")->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "base seed (default 0)");
  simulate->add_option("--workers", workers, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--out", out_path, "write run report JSON here");
  simulate->add_option("--per-shot-csv", csv_path, "write per-shot CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (make_code->parsed()) {
      return run_make_code(noise_args, out_path);
    }
    if (decode->parsed()) {
      return run_decode(problem_path, syndrome_path, decoder_name);
    }
    if (problem_path.empty() && noise_args.preset.empty()) {
      std::fprintf(stderr, "error: simulate needs --problem or --preset with --noise\n");
      return kExitUsage;
    }
    if (problem_path.empty() && noise_args.noise == 0.0) {
      std::fprintf(stderr, "error: --preset requires --noise\n");
      return kExitUsage;
    }
    return run_simulate(noise_args, problem_path, decoder_name, shots, seed, workers, out_path,
                        csv_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
