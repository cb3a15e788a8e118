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

#ifndef BEAMDEC_CODES_H
#define BEAMDEC_CODES_H

#include <array>
#include <optional>
#include <string_view>

#include "beamdec/problem.h"

namespace beamdec {

/// CSS stabilizer code on n qubits: X-type checks h_x and Z-type checks h_z,
/// each with n columns, satisfying h_x * h_z^T == 0.
struct CssCode {
  size_t n = 0;
  SparseBinaryMatrix h_x;
  SparseBinaryMatrix h_z;
};

/// Distance-n repetition code: h_z is the (n-1) x n chain with rows {i, i+1},
/// h_x is empty (0 x n). Requires n >= 2.
CssCode repetition_code(size_t n);

/// Monomial x^e or y^e acting as a cyclic shift on the l x m torus.
enum class Axis : uint8_t { kX, kY };
struct BBTerm {
  Axis axis;
  uint32_t exponent;
};

/// Bivariate bicycle code over the l x m torus: A and B are each sums of
/// exactly three shift monomials; h_x = [A | B], h_z = [B^T | A^T], n = 2*l*m.
struct BBSpec {
  uint32_t l = 0;
  uint32_t m = 0;
  std::array<BBTerm, 3> a_terms;
  std::array<BBTerm, 3> b_terms;
};

CssCode bb_code(const BBSpec& spec);

/// Standard hypergraph product of two parity-check matrices:
///   h_x = [h1 (x) I | I (x) h2^T],  h_z = [I (x) h2 | h1^T (x) I].
CssCode hgp_code(const SparseBinaryMatrix& h1, const SparseBinaryMatrix& h2);

/// size x size circulant whose row i has support {(s + i) mod size}.
SparseBinaryMatrix circulant(size_t size, const std::vector<uint32_t>& first_row_support);

/// Logical operator bases: rows of a_z span ker(h_x) / rowspace(h_z) and
/// rows of a_x span ker(h_z) / rowspace(h_x); both have k rows where
/// k = n - rank(h_x) - rank(h_z). Throws on non-orthogonal input.
struct LogicalOperators {
  SparseBinaryMatrix a_x;
  SparseBinaryMatrix a_z;
};
LogicalOperators logical_operators(const CssCode& code);

enum class ErrorType : uint8_t { kX, kZ };
enum class Stacking : uint8_t { kXZ, kXYZ };

/// Depolarizing code-capacity decoding problem. Each qubit suffers X, Y, Z
/// independently with probability p_phys/3 each.
///
/// XZ stacking keeps one column per qubit: for error type X the detectors
/// are the Z-type checks, the column probability is 2*p_phys/3 (X or Y
/// triggers them), and A = a_z; symmetric for error type Z.
///
/// XYZ stacking stacks all X-type rows then all Z-type rows and emits three
/// columns per qubit, 3q+0 = X, 3q+1 = Y, 3q+2 = Z, each with probability
/// p_phys/3; the Y column support is the union of the X and Z column
/// supports, and A rows (for the decoded error type) give Y columns both
/// memberships. Requires 0 < p_phys <= 0.375.
DecodingProblem code_capacity_problem(const CssCode& code, const SparseBinaryMatrix& a_x,
                                      const SparseBinaryMatrix& a_z, double p_phys,
                                      ErrorType error_type, Stacking stacking);

BBSpec bb72_spec();   // l=6,  m=6:  [[72, 12]]
BBSpec bb90_spec();   // l=15, m=3:  [[90, 8]]
BBSpec bb144_spec();  // l=12, m=6:  [[144, 12]]
SparseBinaryMatrix hgp450_seed();  // 15x15 circulant; hgp of it with itself is [[450, 32]]

/// Builds a named preset code: rep<n> (n >= 2), bb72, bb90, bb144, hgp450.
/// Returns std::nullopt for unknown names.
std::optional<CssCode> build_code_preset(std::string_view name);

struct PresetProblem {
  DecodingProblem problem;
  size_t n = 0;  // physical qubits
  size_t k = 0;  // logical qubits
};
/// Preset code + logical operators + code_capacity_problem in one step.
/// Throws std::invalid_argument on unknown preset names.
PresetProblem build_preset_problem(std::string_view name, double p_phys, ErrorType error_type,
                                   Stacking stacking);

}  // namespace beamdec

#endif  // BEAMDEC_CODES_H
