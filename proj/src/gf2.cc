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

#include "beamdec/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace beamdec {

BitVector::BitVector(size_t length, std::initializer_list<size_t> ones) : BitVector(length) {
  for (size_t i : ones) {
    if (i >= length_) {
      throw std::out_of_range("BitVector: bit index " + std::to_string(i) +
                              " out of range for length " + std::to_string(length_));
    }
    set(i, true);
  }
}

bool BitVector::is_zero() const {
  for (uint64_t w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

size_t BitVector::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) {
    total += static_cast<size_t>(std::popcount(w));
  }
  return total;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_) {
    throw std::invalid_argument("BitVector xor: length " + std::to_string(other.length_) +
                                " does not match length " + std::to_string(length_));
  }
  for (size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (size_t i = 0; i < length_; ++i) {
    if (get(i)) {
      out[i] = '1';
    }
  }
  return out;
}

BitVector BitVector::parse(std::string_view bits) {
  BitVector v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument(std::string("BitVector::parse: invalid character '") +
                                  bits[i] + "' at position " + std::to_string(i));
    }
  }
  return v;
}

SparseBinaryMatrix::SparseBinaryMatrix(size_t num_rows, size_t num_cols,
                                       std::vector<std::vector<uint32_t>> row_support)
    : num_rows_(num_rows), num_cols_(num_cols), row_support_(std::move(row_support)) {
  if (row_support_.size() != num_rows_) {
    throw std::invalid_argument("SparseBinaryMatrix: got " +
                                std::to_string(row_support_.size()) + " rows, expected " +
                                std::to_string(num_rows_));
  }
  col_support_.resize(num_cols_);
  for (size_t i = 0; i < num_rows_; ++i) {
    const auto& row = row_support_[i];
    for (size_t t = 0; t < row.size(); ++t) {
      if (row[t] >= num_cols_) {
        throw std::invalid_argument("SparseBinaryMatrix: column index " +
                                    std::to_string(row[t]) + " out of range in row " +
                                    std::to_string(i) + " (num_cols " +
                                    std::to_string(num_cols_) + ")");
      }
      if (t > 0 && row[t] <= row[t - 1]) {
        throw std::invalid_argument("SparseBinaryMatrix: row " + std::to_string(i) +
                                    " is not strictly increasing");
      }
      col_support_[row[t]].push_back(static_cast<uint32_t>(i));
    }
    num_entries_ += row.size();
  }
}

bool SparseBinaryMatrix::get(size_t i, size_t j) const {
  const auto& row = row_support_[i];
  return std::binary_search(row.begin(), row.end(), static_cast<uint32_t>(j));
}

SparseBinaryMatrix SparseBinaryMatrix::transposed() const {
  return SparseBinaryMatrix(num_cols_, num_rows_, col_support_);
}

BitVector matvec(const SparseBinaryMatrix& mat, const BitVector& v) {
  if (v.size() != mat.num_cols()) {
    throw std::invalid_argument("matvec: vector length " + std::to_string(v.size()) +
                                " does not match num_cols " +
                                std::to_string(mat.num_cols()));
  }
  BitVector out(mat.num_rows());
  for (size_t i = 0; i < mat.num_rows(); ++i) {
    bool bit = false;
    for (uint32_t j : mat.row(i)) {
      bit ^= v.get(j);
    }
    out.set(i, bit);
  }
  return out;
}

BitVector EliminationResult::apply_transform(const BitVector& s) const {
  if (s.size() != num_rows) {
    throw std::invalid_argument("apply_transform: vector length " + std::to_string(s.size()) +
                                " does not match num_rows " + std::to_string(num_rows));
  }
  BitVector out(num_rows);
  const auto& sw = s.words();
  for (size_t r = 0; r < num_rows; ++r) {
    uint64_t acc = 0;
    const uint64_t* row = transform.data() + r * transform_words;
    for (size_t w = 0; w < transform_words; ++w) {
      acc ^= row[w] & sw[w];
    }
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

EliminationResult row_echelon(const SparseBinaryMatrix& mat,
                              std::span<const uint32_t> col_order) {
  size_t m = mat.num_rows();
  size_t n = mat.num_cols();
  if (col_order.size() != n) {
    throw std::invalid_argument("row_echelon: col_order has " +
                                std::to_string(col_order.size()) + " entries, expected " +
                                std::to_string(n));
  }
  std::vector<uint8_t> seen(n, 0);
  for (uint32_t c : col_order) {
    if (c >= n || seen[c]) {
      throw std::invalid_argument("row_echelon: col_order is not a permutation of 0.." +
                                  std::to_string(n ? n - 1 : 0));
    }
    seen[c] = 1;
  }

  EliminationResult res;
  res.num_rows = m;
  res.num_cols = n;
  res.reduced_words = (n + 63) / 64;
  res.transform_words = (m + 63) / 64;
  res.reduced.assign(m * res.reduced_words, 0);
  res.transform.assign(m * res.transform_words, 0);
  for (size_t i = 0; i < m; ++i) {
    for (uint32_t j : mat.row(i)) {
      res.reduced[i * res.reduced_words + (j >> 6)] ^= uint64_t{1} << (j & 63);
    }
    res.transform[i * res.transform_words + (i >> 6)] |= uint64_t{1} << (i & 63);
  }

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) {
      return;
    }
    std::swap_ranges(res.reduced.begin() + a * res.reduced_words,
                     res.reduced.begin() + (a + 1) * res.reduced_words,
                     res.reduced.begin() + b * res.reduced_words);
    std::swap_ranges(res.transform.begin() + a * res.transform_words,
                     res.transform.begin() + (a + 1) * res.transform_words,
                     res.transform.begin() + b * res.transform_words);
  };
  auto xor_rows = [&](size_t dst, size_t src) {
    uint64_t* rd = res.reduced.data() + dst * res.reduced_words;
    const uint64_t* rs = res.reduced.data() + src * res.reduced_words;
    for (size_t w = 0; w < res.reduced_words; ++w) {
      rd[w] ^= rs[w];
    }
    uint64_t* td = res.transform.data() + dst * res.transform_words;
    const uint64_t* ts = res.transform.data() + src * res.transform_words;
    for (size_t w = 0; w < res.transform_words; ++w) {
      td[w] ^= ts[w];
    }
  };
  auto bit_at = [&](size_t r, uint32_t c) -> bool {
    return (res.reduced[r * res.reduced_words + (c >> 6)] >> (c & 63)) & 1;
  };

  size_t rank = 0;
  for (uint32_t c : col_order) {
    size_t pivot = rank;
    while (pivot < m && !bit_at(pivot, c)) {
      ++pivot;
    }
    if (pivot == m) {
      continue;
    }
    swap_rows(rank, pivot);
    for (size_t r = 0; r < m; ++r) {
      if (r != rank && bit_at(r, c)) {
        xor_rows(r, rank);
      }
    }
    res.pivot_cols.push_back(c);
    ++rank;
    if (rank == m) {
      break;
    }
  }
  res.rank = rank;
  return res;
}

EliminationResult row_echelon(const SparseBinaryMatrix& mat) {
  std::vector<uint32_t> order(mat.num_cols());
  for (size_t j = 0; j < order.size(); ++j) {
    order[j] = static_cast<uint32_t>(j);
  }
  return row_echelon(mat, order);
}

std::optional<BitVector> solve_with_pivots(const EliminationResult& elim, const BitVector& s) {
  BitVector t = elim.apply_transform(s);
  for (size_t r = elim.rank; r < elim.num_rows; ++r) {
    if (t.get(r)) {
      return std::nullopt;
    }
  }
  BitVector x(elim.num_cols);
  for (size_t r = 0; r < elim.rank; ++r) {
    if (t.get(r)) {
      x.set(elim.pivot_cols[r], true);
    }
  }
  return x;
}

std::vector<BitVector> kernel_basis(const SparseBinaryMatrix& mat) {
  EliminationResult elim = row_echelon(mat);
  std::vector<uint8_t> is_pivot(mat.num_cols(), 0);
  for (uint32_t c : elim.pivot_cols) {
    is_pivot[c] = 1;
  }
  std::vector<BitVector> basis;
  basis.reserve(mat.num_cols() - elim.rank);
  for (size_t c = 0; c < mat.num_cols(); ++c) {
    if (is_pivot[c]) {
      continue;
    }
    BitVector v(mat.num_cols());
    v.set(c, true);
    for (size_t r = 0; r < elim.rank; ++r) {
      if (elim.reduced_bit(r, c)) {
        v.set(elim.pivot_cols[r], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector Gf2RowSpan::reduce(BitVector v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v.get(pivot_of_row_[r])) {
      v ^= rows_[r];
    }
  }
  return v;
}

bool Gf2RowSpan::add(const BitVector& v) {
  if (v.size() != num_cols_) {
    throw std::invalid_argument("Gf2RowSpan: vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(num_cols_));
  }
  BitVector r = reduce(v);
  for (size_t j = 0; j < num_cols_; ++j) {
    if (r.get(j)) {
      rows_.push_back(std::move(r));
      pivot_of_row_.push_back(static_cast<uint32_t>(j));
      return true;
    }
  }
  return false;
}

bool Gf2RowSpan::contains(const BitVector& v) const {
  return reduce(v).is_zero();
}

}  // namespace beamdec
