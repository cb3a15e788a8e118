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

#include "beamdec/problem.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace beamdec {

DecodingProblem DecodingProblem::make(SparseBinaryMatrix h, SparseBinaryMatrix a,
                                      std::vector<double> p) {
  size_t n = h.num_cols();
  if (a.num_cols() != n) {
    throw std::invalid_argument("DecodingProblem: A has " + std::to_string(a.num_cols()) +
                                " columns, H has " + std::to_string(n));
  }
  if (p.size() != n) {
    throw std::invalid_argument("DecodingProblem: p has " + std::to_string(p.size()) +
                                " entries, expected " + std::to_string(n));
  }
  for (size_t j = 0; j < n; ++j) {
    if (!(p[j] > 0.0) || !(p[j] <= 0.5)) {
      throw std::invalid_argument("DecodingProblem: p[" + std::to_string(j) +
                                  "] = " + std::to_string(p[j]) + " outside (0, 0.5]");
    }
  }

  DecodingProblem problem;
  problem.H = std::move(h);
  problem.A = std::move(a);
  problem.p = std::move(p);
  problem.prior_llr.resize(n);
  for (size_t j = 0; j < n; ++j) {
    problem.prior_llr[j] = std::log((1.0 - problem.p[j]) / problem.p[j]);
  }

  size_t m = problem.H.num_rows();
  problem.num_edges = problem.H.num_entries();
  problem.edge_node.reserve(problem.num_edges);
  problem.edge_det.reserve(problem.num_edges);
  problem.node_edge_offset.resize(n + 1);
  for (size_t j = 0; j < n; ++j) {
    problem.node_edge_offset[j] = static_cast<uint32_t>(problem.edge_node.size());
    for (uint32_t i : problem.H.col(j)) {
      problem.edge_node.push_back(static_cast<uint32_t>(j));
      problem.edge_det.push_back(i);
    }
  }
  problem.node_edge_offset[n] = static_cast<uint32_t>(problem.edge_node.size());

  problem.row_edge_offset.assign(m + 1, 0);
  for (size_t e = 0; e < problem.num_edges; ++e) {
    ++problem.row_edge_offset[problem.edge_det[e] + 1];
  }
  for (size_t i = 0; i < m; ++i) {
    problem.row_edge_offset[i + 1] += problem.row_edge_offset[i];
  }
  problem.row_edge_ids.resize(problem.num_edges);
  std::vector<uint32_t> cursor(problem.row_edge_offset.begin(), problem.row_edge_offset.end() - 1);
  for (size_t e = 0; e < problem.num_edges; ++e) {
    problem.row_edge_ids[cursor[problem.edge_det[e]]++] = static_cast<uint32_t>(e);
  }
  return problem;
}

namespace {

// Reads the next line, throwing "truncated stream" at EOF.
std::string next_line(std::istream& in, size_t& line_no, const char* expecting) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(line_no + 1, std::string("truncated stream, expected ") + expecting);
  }
  ++line_no;
  return line;
}

std::vector<uint32_t> parse_row(const std::string& line, size_t line_no, size_t num_cols) {
  std::vector<uint32_t> row;
  std::istringstream ss(line);
  long long value = 0;
  while (ss >> value) {
    if (value < 0 || static_cast<unsigned long long>(value) >= num_cols) {
      throw ParseError(line_no, "index " + std::to_string(value) +
                                    " out of range (num columns " + std::to_string(num_cols) + ")");
    }
    if (!row.empty() && static_cast<uint32_t>(value) <= row.back()) {
      throw ParseError(line_no, "index " + std::to_string(value) +
                                    " out of order (indices must be strictly increasing)");
    }
    row.push_back(static_cast<uint32_t>(value));
  }
  if (!ss.eof()) {
    throw ParseError(line_no, "malformed row entry");
  }
  return row;
}

}  // namespace

DecodingProblem load_problem(std::istream& in) {
  size_t line_no = 0;
  std::string header = next_line(in, line_no, "header");
  std::istringstream hs(header);
  std::string magic;
  long long n = -1;
  long long m = -1;
  long long k = -1;
  if (!(hs >> magic >> n >> m >> k) || magic != "QDEM1" || n < 0 || m < 0 || k < 0) {
    throw ParseError(line_no, "malformed header, expected 'QDEM1 <N> <M> <K>'");
  }
  std::string rest;
  if (hs >> rest) {
    throw ParseError(line_no, "malformed header, trailing data");
  }

  std::vector<std::vector<uint32_t>> h_rows(m);
  for (long long i = 0; i < m; ++i) {
    std::string row_text = next_line(in, line_no, "detector row");
    h_rows[i] = parse_row(row_text, line_no, n);
  }
  std::vector<std::vector<uint32_t>> a_rows(k);
  for (long long i = 0; i < k; ++i) {
    std::string row_text = next_line(in, line_no, "logical row");
    a_rows[i] = parse_row(row_text, line_no, n);
  }
  std::vector<double> p(n);
  for (long long j = 0; j < n; ++j) {
    std::string line = next_line(in, line_no, "probability");
    const char* begin = line.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    while (end && *end == ' ') {
      ++end;
    }
    if (end == begin || *end != '\0') {
      throw ParseError(line_no, "malformed probability");
    }
    if (!(value > 0.0) || !(value <= 0.5)) {
      throw ParseError(line_no, "probability " + line + " outside (0, 0.5]");
    }
    p[j] = value;
  }
  std::string extra;
  if (std::getline(in, extra)) {
    throw ParseError(line_no + 1, "trailing data after problem body");
  }

  return DecodingProblem::make(
      SparseBinaryMatrix(m, n, std::move(h_rows)),
      SparseBinaryMatrix(k, n, std::move(a_rows)), std::move(p));
}

void save_problem(const DecodingProblem& problem, std::ostream& out) {
  size_t n = problem.num_errors();
  out << "QDEM1 " << n << ' ' << problem.num_detectors() << ' ' << problem.num_logicals()
      << '\n';
  auto write_rows = [&](const SparseBinaryMatrix& mat) {
    for (size_t i = 0; i < mat.num_rows(); ++i) {
      const auto& row = mat.row(i);
      for (size_t t = 0; t < row.size(); ++t) {
        if (t > 0) {
          out << ' ';
        }
        out << row[t];
      }
      out << '\n';
    }
  };
  write_rows(problem.H);
  write_rows(problem.A);
  char buf[64];
  for (size_t j = 0; j < n; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", problem.p[j]);
    out << buf << '\n';
  }
}

DecodingProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open problem file: " + path);
  }
  return load_problem(in);
}

void save_problem_file(const DecodingProblem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  save_problem(problem, out);
  if (!out.flush()) {
    throw std::runtime_error("failed writing output file: " + path);
  }
}

BitVector syndrome_of(const DecodingProblem& problem, const BitVector& e) {
  return matvec(problem.H, e);
}

BitVector logical_flip(const DecodingProblem& problem, const BitVector& e) {
  return matvec(problem.A, e);
}

double error_weight(const DecodingProblem& problem, const BitVector& e_hat) {
  if (e_hat.size() != problem.num_errors()) {
    throw std::invalid_argument("error_weight: vector length " + std::to_string(e_hat.size()) +
                                " does not match num errors " +
                                std::to_string(problem.num_errors()));
  }
  double total = 0.0;
  const auto& words = e_hat.words();
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t bits = words[w];
    while (bits) {
      unsigned b = static_cast<unsigned>(std::countr_zero(bits));
      total += problem.prior_llr[w * 64 + b];
      bits &= bits - 1;
    }
  }
  return total;
}

BitVector parse_syndrome_line(std::string_view line, size_t expected_length) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.size() != expected_length) {
    throw std::invalid_argument("syndrome has " + std::to_string(line.size()) +
                                " bits, expected " + std::to_string(expected_length));
  }
  return BitVector::parse(line);
}

}  // namespace beamdec
