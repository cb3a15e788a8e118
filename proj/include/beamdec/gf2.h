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

#ifndef BEAMDEC_GF2_H
#define BEAMDEC_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beamdec {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Bits beyond `size()` in the last word are always zero, so equality and
/// popcount can operate on whole words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t length) : length_(length), words_((length + 63) / 64, 0) {}
  BitVector(size_t length, std::initializer_list<size_t> ones);

  size_t size() const { return length_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  bool is_zero() const;
  size_t popcount() const;

  /// Throws std::invalid_argument on length mismatch.
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const BitVector&) const = default;

  std::string to_string() const;
  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
  /// any other character.
  static BitVector parse(std::string_view bits);

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  size_t length_ = 0;
  std::vector<uint64_t> words_;
};

/// Sparse binary matrix stored as sorted adjacency lists per row, with the
/// column adjacency (exact transpose) derived at construction. Row entries
/// must be strictly increasing and < num_cols.
class SparseBinaryMatrix {
 public:
  SparseBinaryMatrix() = default;
  SparseBinaryMatrix(size_t num_rows, size_t num_cols,
                     std::vector<std::vector<uint32_t>> row_support);

  size_t num_rows() const { return num_rows_; }
  size_t num_cols() const { return num_cols_; }
  const std::vector<uint32_t>& row(size_t i) const { return row_support_[i]; }
  const std::vector<uint32_t>& col(size_t j) const { return col_support_[j]; }
  size_t num_entries() const { return num_entries_; }
  bool get(size_t i, size_t j) const;

  SparseBinaryMatrix transposed() const;

 private:
  size_t num_rows_ = 0;
  size_t num_cols_ = 0;
  size_t num_entries_ = 0;
  std::vector<std::vector<uint32_t>> row_support_;
  std::vector<std::vector<uint32_t>> col_support_;
};

/// mat * v over GF(2). Throws std::invalid_argument naming the expected and
/// actual lengths on dimension mismatch.
BitVector matvec(const SparseBinaryMatrix& mat, const BitVector& v);

/// State produced by row_echelon: the matrix in reduced row echelon form
/// plus the invertible row-operation transform T with T * mat == reduced,
/// sufficient to replay the elimination on any syndrome vector.
struct EliminationResult {
  size_t num_rows = 0;
  size_t num_cols = 0;
  size_t rank = 0;
  /// Pivot columns in elimination order: the first `rank` columns of the
  /// requested column order that are linearly independent.
  std::vector<uint32_t> pivot_cols;

  size_t reduced_words = 0;    // words per row of `reduced`
  size_t transform_words = 0;  // words per row of `transform`
  std::vector<uint64_t> reduced;    // num_rows x reduced_words, original column indexing
  std::vector<uint64_t> transform;  // num_rows x transform_words

  bool reduced_bit(size_t r, size_t c) const {
    return (reduced[r * reduced_words + (c >> 6)] >> (c & 63)) & 1;
  }
  /// T * s. Throws std::invalid_argument on length mismatch.
  BitVector apply_transform(const BitVector& s) const;
};

/// Gauss-Jordan elimination scanning columns in `col_order` (which must be a
/// permutation of 0..num_cols-1). Pivot rows end up in positions 0..rank-1.
EliminationResult row_echelon(const SparseBinaryMatrix& mat,
                              std::span<const uint32_t> col_order);
EliminationResult row_echelon(const SparseBinaryMatrix& mat);

/// Solves mat * x == s with support restricted to the pivot columns of
/// `elim`. Returns std::nullopt when the system is inconsistent; that is a
/// result, not a fault.
std::optional<BitVector> solve_with_pivots(const EliminationResult& elim,
                                           const BitVector& s);

/// Basis of the null space; returns num_cols - rank vectors, each satisfying
/// mat * v == 0.
std::vector<BitVector> kernel_basis(const SparseBinaryMatrix& mat);

/// Incrementally maintained GF(2) row space, used for quotient-space
/// constructions (e.g. extracting logical operators modulo stabilizers).
class Gf2RowSpan {
 public:
  explicit Gf2RowSpan(size_t num_cols) : num_cols_(num_cols) {}

  /// Adds v to the span. Returns true iff v was independent of the current
  /// span (i.e. the rank grew).
  bool add(const BitVector& v);
  bool contains(const BitVector& v) const;
  size_t rank() const { return rows_.size(); }

 private:
  BitVector reduce(BitVector v) const;

  size_t num_cols_;
  std::vector<BitVector> rows_;        // each with a unique leading pivot
  std::vector<uint32_t> pivot_of_row_;
};

}  // namespace beamdec

#endif  // BEAMDEC_GF2_H
