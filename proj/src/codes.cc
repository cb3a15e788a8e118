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
#include <charconv>
#include <stdexcept>

namespace beamdec {

CssCode repetition_code(size_t n) {
  if (n < 2) {
    throw std::invalid_argument("repetition_code: n must be >= 2, got " + std::to_string(n));
  }
  std::vector<std::vector<uint32_t>> z_rows(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    z_rows[i] = {static_cast<uint32_t>(i), static_cast<uint32_t>(i + 1)};
  }
  CssCode code;
  code.n = n;
  code.h_x = SparseBinaryMatrix(0, n, {});
  code.h_z = SparseBinaryMatrix(n - 1, n, std::move(z_rows));
  return code;
}

namespace {

// Sum of shift monomials over GF(2) on the l x m torus, as row supports.
// Coinciding terms cancel.
std::vector<std::vector<uint32_t>> monomial_sum(uint32_t l, uint32_t m,
                                                const std::array<BBTerm, 3>& terms) {
  size_t lm = static_cast<size_t>(l) * m;
  std::vector<std::vector<uint32_t>> rows(lm);
  for (uint32_t x = 0; x < l; ++x) {
    for (uint32_t y = 0; y < m; ++y) {
      size_t g = static_cast<size_t>(x) * m + y;
      std::vector<uint32_t> cols;
      for (const BBTerm& t : terms) {
        uint32_t h = t.axis == Axis::kX ? ((x + t.exponent) % l) * m + y
                                        : x * m + ((y + t.exponent) % m);
        cols.push_back(h);
      }
      std::sort(cols.begin(), cols.end());
      std::vector<uint32_t>& row = rows[g];
      for (size_t i = 0; i < cols.size();) {
        size_t run = 1;
        while (i + run < cols.size() && cols[i + run] == cols[i]) {
          ++run;
        }
        if (run % 2 == 1) {
          row.push_back(cols[i]);
        }
        i += run;
      }
    }
  }
  return rows;
}

std::vector<std::vector<uint32_t>> transpose_rows(const std::vector<std::vector<uint32_t>>& rows,
                                                  size_t num_cols) {
  std::vector<std::vector<uint32_t>> cols(num_cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (uint32_t j : rows[i]) {
      cols[j].push_back(static_cast<uint32_t>(i));
    }
  }
  return cols;
}

// Horizontal concatenation [left | right] given row supports of both blocks.
std::vector<std::vector<uint32_t>> hstack_rows(const std::vector<std::vector<uint32_t>>& left,
                                               const std::vector<std::vector<uint32_t>>& right,
                                               size_t left_cols) {
  std::vector<std::vector<uint32_t>> rows(left.size());
  for (size_t i = 0; i < left.size(); ++i) {
    rows[i] = left[i];
    for (uint32_t j : right[i]) {
      rows[i].push_back(static_cast<uint32_t>(j + left_cols));
    }
  }
  return rows;
}

// Kronecker product row supports. Row (a, b) of kron(A, B) has support
// {ja * b_cols + jb : ja in A.row(a), jb in B.row(b)}.
std::vector<std::vector<uint32_t>> kron_rows(const SparseBinaryMatrix& a,
                                             const SparseBinaryMatrix& b) {
  std::vector<std::vector<uint32_t>> rows(a.num_rows() * b.num_rows());
  for (size_t ra = 0; ra < a.num_rows(); ++ra) {
    for (size_t rb = 0; rb < b.num_rows(); ++rb) {
      std::vector<uint32_t>& row = rows[ra * b.num_rows() + rb];
      for (uint32_t ja : a.row(ra)) {
        for (uint32_t jb : b.row(rb)) {
          row.push_back(static_cast<uint32_t>(ja * b.num_cols() + jb));
        }
      }
    }
  }
  return rows;
}

SparseBinaryMatrix identity_matrix(size_t n) {
  std::vector<std::vector<uint32_t>> rows(n);
  for (size_t i = 0; i < n; ++i) {
    rows[i] = {static_cast<uint32_t>(i)};
  }
  return SparseBinaryMatrix(n, n, std::move(rows));
}

bool rows_orthogonal(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  size_t overlap = 0;
  size_t ia = 0;
  size_t ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) {
      ++overlap;
      ++ia;
      ++ib;
    } else if (a[ia] < b[ib]) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return overlap % 2 == 0;
}

bool css_orthogonal(const SparseBinaryMatrix& h_x, const SparseBinaryMatrix& h_z) {
  for (size_t i = 0; i < h_x.num_rows(); ++i) {
    for (size_t r = 0; r < h_z.num_rows(); ++r) {
      if (!rows_orthogonal(h_x.row(i), h_z.row(r))) {
        return false;
      }
    }
  }
  return true;
}

BitVector row_to_bitvector(const std::vector<uint32_t>& row, size_t n) {
  BitVector v(n);
  for (uint32_t j : row) {
    v.set(j, true);
  }
  return v;
}

std::vector<uint32_t> bitvector_to_row(const BitVector& v) {
  std::vector<uint32_t> row;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v.get(j)) {
      row.push_back(static_cast<uint32_t>(j));
    }
  }
  return row;
}

// Basis of ker(checks) / rowspace(stabilizers) as matrix rows.
SparseBinaryMatrix quotient_basis(const SparseBinaryMatrix& checks,
                                  const SparseBinaryMatrix& stabilizers, size_t n) {
  Gf2RowSpan span(n);
  for (size_t i = 0; i < stabilizers.num_rows(); ++i) {
    span.add(row_to_bitvector(stabilizers.row(i), n));
  }
  std::vector<std::vector<uint32_t>> rows;
  for (const BitVector& v : kernel_basis(checks)) {
    if (span.add(v)) {
      rows.push_back(bitvector_to_row(v));
    }
  }
  size_t num_rows = rows.size();
  return SparseBinaryMatrix(num_rows, n, std::move(rows));
}

}  // namespace

CssCode bb_code(const BBSpec& spec) {
  if (spec.l == 0 || spec.m == 0) {
    throw std::invalid_argument("bb_code: l and m must be positive");
  }
  size_t lm = static_cast<size_t>(spec.l) * spec.m;
  auto a_rows = monomial_sum(spec.l, spec.m, spec.a_terms);
  auto b_rows = monomial_sum(spec.l, spec.m, spec.b_terms);
  auto a_cols = transpose_rows(a_rows, lm);
  auto b_cols = transpose_rows(b_rows, lm);
  for (auto& col : a_cols) {
    std::sort(col.begin(), col.end());
  }
  for (auto& col : b_cols) {
    std::sort(col.begin(), col.end());
  }
  CssCode code;
  code.n = 2 * lm;
  code.h_x = SparseBinaryMatrix(lm, code.n, hstack_rows(a_rows, b_rows, lm));
  code.h_z = SparseBinaryMatrix(lm, code.n, hstack_rows(b_cols, a_cols, lm));
  return code;
}

SparseBinaryMatrix circulant(size_t size, const std::vector<uint32_t>& first_row_support) {
  std::vector<std::vector<uint32_t>> rows(size);
  for (size_t i = 0; i < size; ++i) {
    for (uint32_t s : first_row_support) {
      rows[i].push_back(static_cast<uint32_t>((s + i) % size));
    }
    std::sort(rows[i].begin(), rows[i].end());
  }
  return SparseBinaryMatrix(size, size, std::move(rows));
}

CssCode hgp_code(const SparseBinaryMatrix& h1, const SparseBinaryMatrix& h2) {
  size_t n1 = h1.num_cols();
  size_t m1 = h1.num_rows();
  size_t n2 = h2.num_cols();
  size_t m2 = h2.num_rows();
  SparseBinaryMatrix h1t = h1.transposed();
  SparseBinaryMatrix h2t = h2.transposed();

  auto hx_left = kron_rows(h1, identity_matrix(n2));
  auto hx_right = kron_rows(identity_matrix(m1), h2t);
  auto hz_left = kron_rows(identity_matrix(n1), h2);
  auto hz_right = kron_rows(h1t, identity_matrix(m2));

  CssCode code;
  code.n = n1 * n2 + m1 * m2;
  code.h_x = SparseBinaryMatrix(m1 * n2, code.n, hstack_rows(hx_left, hx_right, n1 * n2));
  code.h_z = SparseBinaryMatrix(n1 * m2, code.n, hstack_rows(hz_left, hz_right, n1 * n2));
  return code;
}

LogicalOperators logical_operators(const CssCode& code) {
  if (code.h_x.num_cols() != code.n || code.h_z.num_cols() != code.n) {
    throw std::invalid_argument("logical_operators: check matrices do not have n columns");
  }
  if (!css_orthogonal(code.h_x, code.h_z)) {
    throw std::invalid_argument("logical_operators: h_x * h_z^T != 0");
  }
  size_t rank_x = row_echelon(code.h_x).rank;
  size_t rank_z = row_echelon(code.h_z).rank;
  size_t k = code.n - rank_x - rank_z;

  LogicalOperators logicals;
  logicals.a_z = quotient_basis(code.h_x, code.h_z, code.n);
  logicals.a_x = quotient_basis(code.h_z, code.h_x, code.n);
  if (logicals.a_z.num_rows() != k || logicals.a_x.num_rows() != k) {
    throw std::logic_error("logical_operators: quotient dimension does not match k");
  }
  return logicals;
}

DecodingProblem code_capacity_problem(const CssCode& code, const SparseBinaryMatrix& a_x,
                                      const SparseBinaryMatrix& a_z, double p_phys,
                                      ErrorType error_type, Stacking stacking) {
  if (!(p_phys > 0.0) || !(p_phys <= 0.375)) {
    throw std::invalid_argument("code_capacity_problem: p_phys = " + std::to_string(p_phys) +
                                " outside (0, 0.375]");
  }
  size_t n = code.n;
  if (stacking == Stacking::kXZ) {
    const SparseBinaryMatrix& h = error_type == ErrorType::kX ? code.h_z : code.h_x;
    const SparseBinaryMatrix& a = error_type == ErrorType::kX ? a_z : a_x;
    std::vector<double> p(n, 2.0 * p_phys / 3.0);
    return DecodingProblem::make(SparseBinaryMatrix(h), SparseBinaryMatrix(a), std::move(p));
  }

  // XYZ: detectors are all X-type rows then all Z-type rows; columns are
  // 3q+0 = X_q (hits Z-type rows), 3q+1 = Y_q (hits both), 3q+2 = Z_q
  // (hits X-type rows).
  size_t mx = code.h_x.num_rows();
  size_t mz = code.h_z.num_rows();
  std::vector<std::vector<uint32_t>> h_rows(mx + mz);
  for (size_t r = 0; r < mx; ++r) {
    for (uint32_t q : code.h_x.row(r)) {
      h_rows[r].push_back(3 * q + 1);
      h_rows[r].push_back(3 * q + 2);
    }
  }
  for (size_t r = 0; r < mz; ++r) {
    for (uint32_t q : code.h_z.row(r)) {
      h_rows[mx + r].push_back(3 * q);
      h_rows[mx + r].push_back(3 * q + 1);
    }
  }
  const SparseBinaryMatrix& a = error_type == ErrorType::kX ? a_z : a_x;
  std::vector<std::vector<uint32_t>> a_rows(a.num_rows());
  for (size_t r = 0; r < a.num_rows(); ++r) {
    for (uint32_t q : a.row(r)) {
      if (error_type == ErrorType::kX) {
        a_rows[r].push_back(3 * q);      // X component anticommutes with Z logicals
        a_rows[r].push_back(3 * q + 1);  // so does Y
      } else {
        a_rows[r].push_back(3 * q + 1);
        a_rows[r].push_back(3 * q + 2);
      }
    }
  }
  std::vector<double> p(3 * n, p_phys / 3.0);
  return DecodingProblem::make(SparseBinaryMatrix(mx + mz, 3 * n, std::move(h_rows)),
                               SparseBinaryMatrix(a.num_rows(), 3 * n, std::move(a_rows)),
                               std::move(p));
}

BBSpec bb72_spec() {
  return BBSpec{6, 6,
                {BBTerm{Axis::kX, 3}, BBTerm{Axis::kY, 1}, BBTerm{Axis::kY, 2}},
                {BBTerm{Axis::kY, 3}, BBTerm{Axis::kX, 1}, BBTerm{Axis::kX, 2}}};
}

BBSpec bb90_spec() {
  return BBSpec{15, 3,
                {BBTerm{Axis::kX, 9}, BBTerm{Axis::kY, 1}, BBTerm{Axis::kY, 2}},
                {BBTerm{Axis::kX, 0}, BBTerm{Axis::kX, 2}, BBTerm{Axis::kX, 7}}};
}

BBSpec bb144_spec() {
  return BBSpec{12, 6,
                {BBTerm{Axis::kX, 3}, BBTerm{Axis::kY, 1}, BBTerm{Axis::kY, 2}},
                {BBTerm{Axis::kY, 3}, BBTerm{Axis::kX, 1}, BBTerm{Axis::kX, 2}}};
}

SparseBinaryMatrix hgp450_seed() {
  return circulant(15, {0, 1, 4});
}

std::optional<CssCode> build_code_preset(std::string_view name) {
  if (name == "bb72") {
    return bb_code(bb72_spec());
  }
  if (name == "bb90") {
    return bb_code(bb90_spec());
  }
  if (name == "bb144") {
    return bb_code(bb144_spec());
  }
  if (name == "hgp450") {
    SparseBinaryMatrix seed = hgp450_seed();
    return hgp_code(seed, seed);
  }
  if (name.size() > 3 && name.substr(0, 3) == "rep") {
    size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 3, name.data() + name.size(), n);
    if (ec == std::errc{} && ptr == name.data() + name.size() && n >= 2 && n <= 100000) {
      return repetition_code(n);
    }
  }
  return std::nullopt;
}

PresetProblem build_preset_problem(std::string_view name, double p_phys, ErrorType error_type,
                                   Stacking stacking) {
  std::optional<CssCode> code = build_code_preset(name);
  if (!code) {
    throw std::invalid_argument("unknown code preset: " + std::string(name) +
                                " (expected rep<n>, bb72, bb90, bb144, or hgp450)");
  }
  LogicalOperators logicals = logical_operators(*code);
  PresetProblem preset;
  preset.n = code->n;
  preset.k = logicals.a_z.num_rows();
  preset.problem =
      code_capacity_problem(*code, logicals.a_x, logicals.a_z, p_phys, error_type, stacking);
  return preset;
}

}  // namespace beamdec
