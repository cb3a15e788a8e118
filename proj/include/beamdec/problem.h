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

#ifndef BEAMDEC_PROBLEM_H
#define BEAMDEC_PROBLEM_H

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamdec/gf2.h"

namespace beamdec {

/// A syndrome decoding instance: detector matrix H (M x N), logical
/// observable matrix A (K x N), and independent per-error probabilities p
/// with 0 < p_j <= 0.5. Construct via make() or load_problem(); both
/// establish the prior LLRs and the Tanner edge enumeration.
///
/// Edges are enumerated by error node, then by that node's detectors in
/// ascending row order. Every message vector in the decoders uses this
/// fixed enumeration.
struct DecodingProblem {
  SparseBinaryMatrix H;
  SparseBinaryMatrix A;
  std::vector<double> p;
  std::vector<double> prior_llr;  // ln((1-p_j)/p_j), >= 0

  size_t num_edges = 0;
  std::vector<uint32_t> edge_node;         // error node of each edge
  std::vector<uint32_t> edge_det;          // detector of each edge
  std::vector<uint32_t> node_edge_offset;  // N+1; edges of node j are [off[j], off[j+1])
  std::vector<uint32_t> row_edge_offset;   // M+1
  std::vector<uint32_t> row_edge_ids;      // edge ids grouped by detector

  size_t num_errors() const { return H.num_cols(); }
  size_t num_detectors() const { return H.num_rows(); }
  size_t num_logicals() const { return A.num_rows(); }

  static DecodingProblem make(SparseBinaryMatrix h, SparseBinaryMatrix a,
                              std::vector<double> p);
};

/// Parse failure in a problem or syndrome file; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Text format, one problem per stream:
///   QDEM1 <N> <M> <K>
///   M lines: H rows as space-separated sorted column indices (blank = empty)
///   K lines: A rows, same encoding
///   N lines: one probability per line, 17 significant digits on save
/// save(load(f)) == f byte-for-byte on files produced by save_problem.
DecodingProblem load_problem(std::istream& in);
void save_problem(const DecodingProblem& problem, std::ostream& out);
DecodingProblem load_problem_file(const std::string& path);
void save_problem_file(const DecodingProblem& problem, const std::string& path);

/// H * e; throws on length mismatch.
BitVector syndrome_of(const DecodingProblem& problem, const BitVector& e);
/// A * e; throws on length mismatch.
BitVector logical_flip(const DecodingProblem& problem, const BitVector& e);
/// Sum of prior_llr over the support of e_hat (log-likelihood weight, nats).
double error_weight(const DecodingProblem& problem, const BitVector& e_hat);

/// Parses a syndrome line of exactly `expected_length` '0'/'1' characters.
BitVector parse_syndrome_line(std::string_view line, size_t expected_length);

}  // namespace beamdec

#endif  // BEAMDEC_PROBLEM_H
