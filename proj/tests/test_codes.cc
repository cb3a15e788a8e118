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

#include "beamdec/codes.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"

namespace beamdec {
namespace {

bool css_orthogonal(const CssCode& code) {
  for (size_t i = 0; i < code.h_z.num_rows(); ++i) {
    BitVector z_row(code.n);
    for (uint32_t c : code.h_z.row(i)) z_row.set(c, true);
    if (!matvec(code.h_x, z_row).is_zero()) return false;
  }
  return true;
}

size_t code_dimension(const CssCode& code) {
  return code.n - row_echelon(code.h_x).rank - row_echelon(code.h_z).rank;
}

BitVector row_bits(const SparseBinaryMatrix& m, size_t i) {
  BitVector v(m.num_cols());
  for (uint32_t c : m.row(i)) v.set(c, true);
  return v;
}

TEST_CASE("repetition code structure") {
  CssCode rep3 = repetition_code(3);
  CHECK(rep3.n == 3);
  CHECK(rep3.h_x.num_rows() == 0);
  CHECK(rep3.h_x.num_cols() == 3);
  REQUIRE(rep3.h_z.num_rows() == 2);
  CHECK(rep3.h_z.row(0) == std::vector<uint32_t>{0, 1});
  CHECK(rep3.h_z.row(1) == std::vector<uint32_t>{1, 2});
  CHECK(code_dimension(rep3) == 1);
  CHECK(css_orthogonal(rep3));
  CHECK_THROWS_AS(repetition_code(1), std::invalid_argument);
}

TEST_CASE("repetition code logical operators") {
  LogicalOperators ops = logical_operators(repetition_code(3));
  REQUIRE(ops.a_x.num_rows() == 1);
  REQUIRE(ops.a_z.num_rows() == 1);
  CHECK(ops.a_x.row(0) == std::vector<uint32_t>{0, 1, 2});
  CHECK(ops.a_z.row(0) == std::vector<uint32_t>{0});
}

TEST_CASE("circulant rows are cyclic shifts") {
  SparseBinaryMatrix c = circulant(15, {0, 1, 4});
  CHECK(c.num_rows() == 15);
  CHECK(c.num_cols() == 15);
  CHECK(c.row(0) == std::vector<uint32_t>{0, 1, 4});
  CHECK(c.row(1) == std::vector<uint32_t>{1, 2, 5});
  CHECK(c.row(14) == std::vector<uint32_t>{0, 3, 14});
  CHECK(c.num_entries() == 45);
}

TEST_CASE("bicycle codes have the advertised parameters") {
  CssCode bb72 = bb_code(bb72_spec());
  CHECK(bb72.n == 72);
  CHECK(bb72.h_x.num_rows() == 36);
  CHECK(bb72.h_z.num_rows() == 36);
  CHECK(css_orthogonal(bb72));
  CHECK(code_dimension(bb72) == 12);

  CssCode bb90 = bb_code(bb90_spec());
  CHECK(bb90.n == 90);
  CHECK(css_orthogonal(bb90));
  CHECK(code_dimension(bb90) == 8);

  CssCode bb144 = bb_code(bb144_spec());
  CHECK(bb144.n == 144);
  CHECK(css_orthogonal(bb144));
  CHECK(code_dimension(bb144) == 12);
}

TEST_CASE("bicycle check matrices are (6,3)-regular") {
  CssCode bb72 = bb_code(bb72_spec());
  for (const auto* h : {&bb72.h_x, &bb72.h_z}) {
    for (size_t i = 0; i < h->num_rows(); ++i) CHECK(h->row(i).size() == 6);
    for (size_t j = 0; j < h->num_cols(); ++j) CHECK(h->col(j).size() == 3);
  }
}

TEST_CASE("hypergraph product of the 3-chain with itself") {
  SparseBinaryMatrix h1 = repetition_code(3).h_z;  // 2 x 3 chain
  CssCode hgp = hgp_code(h1, h1);
  CHECK(hgp.n == 13);  // 3*3 + 2*2
  CHECK(hgp.h_x.num_rows() == 6);
  CHECK(hgp.h_z.num_rows() == 6);
  CHECK(css_orthogonal(hgp));
  CHECK(code_dimension(hgp) == 1);
  LogicalOperators ops = logical_operators(hgp);
  CHECK(ops.a_x.num_rows() == 1);
  CHECK(ops.a_z.num_rows() == 1);
}

TEST_CASE("hgp450 seed and full code") {
  SparseBinaryMatrix seed = hgp450_seed();
  CHECK(seed.num_rows() == 15);
  CHECK(seed.num_cols() == 15);
  CssCode hgp = hgp_code(seed, seed);
  CHECK(hgp.n == 450);
  CHECK(hgp.h_x.num_rows() == 225);
  CHECK(hgp.h_z.num_rows() == 225);
  CHECK(css_orthogonal(hgp));
  CHECK(code_dimension(hgp) == 32);
}

TEST_CASE("logical operator rows live in the kernel quotient") {
  CssCode bb72 = bb_code(bb72_spec());
  LogicalOperators ops = logical_operators(bb72);
  REQUIRE(ops.a_z.num_rows() == 12);
  REQUIRE(ops.a_x.num_rows() == 12);

  Gf2RowSpan z_span(72);
  for (size_t i = 0; i < bb72.h_z.num_rows(); ++i) z_span.add(row_bits(bb72.h_z, i));
  for (size_t i = 0; i < 12; ++i) {
    BitVector v = row_bits(ops.a_z, i);
    CHECK(matvec(bb72.h_x, v).is_zero());   // commutes with every X check
    CHECK_FALSE(z_span.contains(v));        // not a Z stabilizer
    CHECK(z_span.add(v));                   // independent of previous logicals
  }

  Gf2RowSpan x_span(72);
  for (size_t i = 0; i < bb72.h_x.num_rows(); ++i) x_span.add(row_bits(bb72.h_x, i));
  for (size_t i = 0; i < 12; ++i) {
    BitVector v = row_bits(ops.a_x, i);
    CHECK(matvec(bb72.h_z, v).is_zero());
    CHECK(x_span.add(v));
  }
}

TEST_CASE("logical_operators rejects non-orthogonal checks") {
  CssCode bad;
  bad.n = 2;
  bad.h_x = SparseBinaryMatrix(1, 2, {{0, 1}});
  bad.h_z = SparseBinaryMatrix(1, 2, {{0}});
  CHECK_THROWS_AS(logical_operators(bad), std::invalid_argument);
}

TEST_CASE("single-type problem keeps one column per qubit") {
  PresetProblem preset = build_preset_problem("rep5", 0.1, ErrorType::kX, Stacking::kXZ);
  const DecodingProblem& prob = preset.problem;
  CHECK(preset.n == 5);
  CHECK(preset.k == 1);
  CHECK(prob.num_errors() == 5);
  CHECK(prob.num_detectors() == 4);
  CHECK(prob.H.row(0) == std::vector<uint32_t>{0, 1});
  CHECK(prob.A.row(0) == std::vector<uint32_t>{0});
  for (double pj : prob.p) CHECK(pj == doctest::Approx(0.2 / 3.0).epsilon(1e-15));

  // Decoding the other error type swaps in the other check matrix.
  SparseBinaryMatrix h1 = repetition_code(3).h_z;
  CssCode hgp = hgp_code(h1, h1);
  LogicalOperators ops = logical_operators(hgp);
  DecodingProblem z_prob =
      code_capacity_problem(hgp, ops.a_x, ops.a_z, 0.09, ErrorType::kZ, Stacking::kXZ);
  CHECK(z_prob.num_detectors() == hgp.h_x.num_rows());
  for (size_t i = 0; i < hgp.h_x.num_rows(); ++i) CHECK(z_prob.H.row(i) == hgp.h_x.row(i));
  CHECK(z_prob.A.row(0) == ops.a_x.row(0));
  for (double pj : z_prob.p) CHECK(pj == doctest::Approx(0.06).epsilon(1e-15));
}

TEST_CASE("full-stabilizer problem uses three columns per qubit") {
  PresetProblem preset = build_preset_problem("bb72", 0.03, ErrorType::kX, Stacking::kXYZ);
  const DecodingProblem& prob = preset.problem;
  CssCode bb72 = bb_code(bb72_spec());
  const size_t mx = bb72.h_x.num_rows();
  CHECK(prob.num_errors() == 216);
  CHECK(prob.num_detectors() == 72);
  for (double pj : prob.p) CHECK(pj == doctest::Approx(0.01).epsilon(1e-15));

  for (size_t q = 0; q < 72; ++q) {
    // X component trips Z-type rows (stacked after the X-type block),
    // Z component trips X-type rows, Y trips the union of both.
    std::vector<uint32_t> x_col, z_col;
    for (uint32_t r : bb72.h_z.col(q)) x_col.push_back(static_cast<uint32_t>(mx) + r);
    z_col = bb72.h_x.col(q);
    CHECK(prob.H.col(3 * q) == x_col);
    CHECK(prob.H.col(3 * q + 2) == z_col);
    std::vector<uint32_t> y_col = z_col;
    y_col.insert(y_col.end(), x_col.begin(), x_col.end());
    std::sort(y_col.begin(), y_col.end());
    CHECK(prob.H.col(3 * q + 1) == y_col);
  }

  // Logical rows expand to the X and Y columns of each supported qubit.
  LogicalOperators ops = logical_operators(bb72);
  REQUIRE(prob.num_logicals() == 12);
  for (size_t i = 0; i < 12; ++i) {
    std::vector<uint32_t> expect;
    for (uint32_t q : ops.a_z.row(i)) {
      expect.push_back(3 * q);
      expect.push_back(3 * q + 1);
    }
    CHECK(prob.A.row(i) == expect);
  }

  // For the Z side the logical rows pick up the Y and Z columns instead.
  DecodingProblem z_prob =
      code_capacity_problem(bb72, ops.a_x, ops.a_z, 0.03, ErrorType::kZ, Stacking::kXYZ);
  for (size_t i = 0; i < 12; ++i) {
    std::vector<uint32_t> expect;
    for (uint32_t q : ops.a_x.row(i)) {
      expect.push_back(3 * q + 1);
      expect.push_back(3 * q + 2);
    }
    CHECK(z_prob.A.row(i) == expect);
  }
}

TEST_CASE("syndrome and logical flip are stabilizer invariant") {
  SparseBinaryMatrix h1 = repetition_code(3).h_z;
  CssCode hgp = hgp_code(h1, h1);
  LogicalOperators ops = logical_operators(hgp);
  DecodingProblem prob =
      code_capacity_problem(hgp, ops.a_x, ops.a_z, 0.1, ErrorType::kX, Stacking::kXZ);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    BitVector e(13);
    for (size_t j = 0; j < 13; ++j) e.set(j, rng() & 1);
    BitVector deformed = e;
    for (size_t i = 0; i < hgp.h_x.num_rows(); ++i) {
      if (rng() & 1) deformed ^= row_bits(hgp.h_x, i);
    }
    CHECK(syndrome_of(prob, deformed) == syndrome_of(prob, e));
    CHECK(logical_flip(prob, deformed) == logical_flip(prob, e));
  }
}

TEST_CASE("probability bounds") {
  CssCode rep5 = repetition_code(5);
  LogicalOperators ops = logical_operators(rep5);
  CHECK_THROWS_AS(
      code_capacity_problem(rep5, ops.a_x, ops.a_z, 0.4, ErrorType::kX, Stacking::kXZ),
      std::invalid_argument);
  CHECK_THROWS_AS(
      code_capacity_problem(rep5, ops.a_x, ops.a_z, 0.0, ErrorType::kX, Stacking::kXZ),
      std::invalid_argument);
  DecodingProblem edge =
      code_capacity_problem(rep5, ops.a_x, ops.a_z, 0.375, ErrorType::kX, Stacking::kXYZ);
  for (double pj : edge.p) CHECK(pj == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("preset names") {
  auto rep2 = build_code_preset("rep2");
  REQUIRE(rep2.has_value());
  CHECK(rep2->n == 2);
  auto rep100 = build_code_preset("rep100");
  REQUIRE(rep100.has_value());
  CHECK(rep100->n == 100);
  CHECK(build_code_preset("bb72").has_value());
  CHECK(build_code_preset("bb90").has_value());
  CHECK(build_code_preset("bb144").has_value());
  CHECK(build_code_preset("hgp450").has_value());
  CHECK_FALSE(build_code_preset("rep1").has_value());
  CHECK_FALSE(build_code_preset("rep").has_value());
  CHECK_FALSE(build_code_preset("repx").has_value());
  CHECK_FALSE(build_code_preset("bb73").has_value());
  CHECK_FALSE(build_code_preset("").has_value());
  CHECK_THROWS_AS(build_preset_problem("nope", 0.1, ErrorType::kX, Stacking::kXZ),
                  std::invalid_argument);
}

}  // namespace
}  // namespace beamdec
