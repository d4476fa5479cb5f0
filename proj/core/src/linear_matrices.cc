/*
 * Copyright 2026 The Wiretap LP Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "wiretap/linear_matrices.h"

#include <algorithm>
#include <set>
#include <utility>

#include "wiretap/errors.h"

namespace wiretap {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw UsageError("matrix dimensions must be positive");
  }
}

BinaryMatrix BinaryMatrix::FromStrings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw UsageError("matrix needs at least one row");
  BinaryMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw UsageError("matrix entries must be 0/1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::Identity(std::size_t size) {
  BinaryMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

bool BinaryMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
  return bits_[i * cols_ + j] != 0;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
  bits_[i * cols_ + j] = value ? 1 : 0;
}

BinaryMatrix BinaryMatrix::Transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

std::size_t BinaryMatrix::Rank() const {
  std::vector<std::uint8_t> work = bits_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && work[pivot * cols_ + col] == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap(work[pivot * cols_ + c], work[rank * cols_ + c]);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && work[r * cols_ + col] != 0) {
        for (std::size_t c = 0; c < cols_; ++c) {
          work[r * cols_ + c] ^= work[rank * cols_ + c];
        }
      }
    }
    ++rank;
  }
  return rank;
}

BitVector BinaryMatrix::LeftMultiply(std::span<const std::uint8_t> v) const {
  if (v.size() != rows_) {
    throw UsageError("vector length " + std::to_string(v.size()) +
                     " does not match " + std::to_string(rows_) + " rows");
  }
  BitVector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] ^= bits_[i * cols_ + j];
  }
  return out;
}

std::string BinaryMatrix::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out += at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix dimensions do not match");
  BinaryMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::span<const std::uint8_t> row(&a.bits_[i * a.cols_], a.cols_);
    const BitVector product = b.LeftMultiply(row);
    for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, j, product[j] != 0);
  }
  return out;
}

bool IsLinearForm(const FormId& form) {
  return form.l == 1 || form.l % 2 == 0 || (form.l == 3 && form.k == 1);
}

WiretapCodec BuildCodec(const FormId& form) {
  RequireValidForm(form);
  const std::size_t n = static_cast<std::size_t>(form.n());
  const std::size_t k = static_cast<std::size_t>(form.k);
  BinaryMatrix g(n, n);
  BinaryMatrix ht(n, k);
  // Indices below are 1-based to match the matrix patterns.
  if (form.l == 1) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) g.set(i - 1, j - 1, !(i == j && i <= k));
      for (std::size_t j = 1; j <= k; ++j) {
        ht.set(i - 1, j - 1, (i == j) || i == k + 1);
      }
    }
  } else if (form.l == 3 && form.k == 1) {
    g = BinaryMatrix::FromStrings({"1000", "1100", "1010", "1111"});
    ht = BinaryMatrix::FromStrings({"1", "1", "1", "1"});
  } else if (form.l % 2 == 0) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) g.set(i - 1, j - 1, !(i >= 2 && i == j));
      for (std::size_t j = 1; j <= k; ++j) {
        bool value = false;
        if (i == 1 && j == 1) {
          value = k % 2 == 1;
        } else if (i == 1 || j == 1) {
          value = true;
        } else if (i == j && i <= k) {
          value = true;
        }
        ht.set(i - 1, j - 1, value);
      }
    }
  } else {
    throw UnsupportedFormError("form (" + std::to_string(form.l) + "," +
                               std::to_string(form.k) +
                               ") has no generator matrix: its bins are not "
                               "cosets of a linear code");
  }
  return WiretapCodec{form, std::move(g), std::move(ht)};
}

BitVector ToBits(std::uint32_t value, int bits) {
  BitVector out(static_cast<std::size_t>(bits), 0);
  for (int i = 0; i < bits; ++i) {
    out[static_cast<std::size_t>(i)] = (value >> (bits - 1 - i)) & 1u;
  }
  return out;
}

Codeword Encode(const WiretapCodec& codec, std::span<const std::uint8_t> m,
                std::span<const std::uint8_t> v) {
  if (m.size() != static_cast<std::size_t>(codec.form.k) ||
      v.size() != static_cast<std::size_t>(codec.form.l)) {
    throw UsageError("encode needs " + std::to_string(codec.form.k) +
                     " message bits and " + std::to_string(codec.form.l) +
                     " random bits");
  }
  BitVector input(m.begin(), m.end());
  input.insert(input.end(), v.begin(), v.end());
  const BitVector x = codec.generator.LeftMultiply(input);
  std::uint32_t value = 0;
  for (std::uint8_t bit : x) value = (value << 1) | bit;
  return Codeword(value, codec.form.n());
}

BitVector Decode(const WiretapCodec& codec, const Codeword& x) {
  if (x.length() != codec.form.n()) {
    throw UsageError("codeword has length " + std::to_string(x.length()) +
                     ", codec has n = " + std::to_string(codec.form.n()));
  }
  return codec.parity_check_t.LeftMultiply(ToBits(x.value(), x.length()));
}

CodeTable CosetTable(const WiretapCodec& codec) {
  const int l = codec.form.l;
  const int k = codec.form.k;
  std::vector<Bin> bins;
  bins.reserve(std::size_t{1} << k);
  for (std::uint32_t i = 0; i < (std::uint32_t{1} << k); ++i) {
    const BitVector m = ToBits(i, k);
    Bin bin;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << l); ++v) {
      bin.push_back(Encode(codec, m, ToBits(v, l)));
    }
    bins.push_back(std::move(bin));
  }
  return CodeTable(l, k, std::move(bins));
}

bool ParityIdentityHolds(const WiretapCodec& codec) {
  const std::size_t n = static_cast<std::size_t>(codec.form.n());
  const std::size_t k = static_cast<std::size_t>(codec.form.k);
  if (codec.generator.rows() != n || codec.generator.cols() != n ||
      codec.parity_check_t.rows() != n || codec.parity_check_t.cols() != k) {
    return false;
  }
  const BinaryMatrix product = codec.generator * codec.parity_check_t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (product.at(i, j) != (i == j)) return false;
    }
  }
  return true;
}

bool SyndromeCheck(const WiretapCodec& codec) {
  if (!ParityIdentityHolds(codec)) return false;
  const CodeTable table = CosetTable(codec);
  std::set<BitVector> syndromes;
  for (const Bin& bin : table.bins()) {
    const BitVector first = Decode(codec, bin.front());
    for (const Codeword& w : bin) {
      if (Decode(codec, w) != first) return false;
    }
    if (!syndromes.insert(first).second) return false;
  }
  return true;
}

bool IsFullRank(const BinaryMatrix& m) {
  return m.Rank() == std::min(m.rows(), m.cols());
}

bool IsLinearCosetTable(const CodeTable& table) {
  if (!ValidateTable(table).ok()) return false;
  const Bin* zero_bin = nullptr;
  for (const Bin& bin : table.bins()) {
    for (const Codeword& w : bin) {
      if (w.value() == 0) zero_bin = &bin;
    }
  }
  std::set<std::uint32_t> subgroup;
  for (const Codeword& w : *zero_bin) subgroup.insert(w.value());
  for (std::uint32_t a : subgroup) {
    for (std::uint32_t b : subgroup) {
      if (!subgroup.contains(a ^ b)) return false;
    }
  }
  for (const Bin& bin : table.bins()) {
    const std::uint32_t shift = bin.front().value();
    for (const Codeword& w : bin) {
      if (!subgroup.contains(w.value() ^ shift)) return false;
    }
  }
  return true;
}

}  // namespace wiretap
