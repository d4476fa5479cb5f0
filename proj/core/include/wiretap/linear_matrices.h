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


// Generator and parity-check matrices for the linear members of the Ni
// family, with matrix encode/decode and coset tables.
//
// Encoding is x = [m || v] G (mod 2) with m the k message bits and v the l
// random bits; decoding is m = x H^T. The matrices are built so that
// G H^T = [I_k ; 0], which makes decoding exact and puts every v for a
// fixed m in one coset.

#ifndef WIRETAP_LINEAR_MATRICES_H_
#define WIRETAP_LINEAR_MATRICES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wiretap/bitcore.h"
#include "wiretap/ni_code.h"

namespace wiretap {

using BitVector = std::vector<std::uint8_t>;

class BinaryMatrix {
 public:
  // Throws UsageError unless rows, cols >= 1.
  BinaryMatrix(std::size_t rows, std::size_t cols);
  // Parses rows of '0'/'1' characters.
  static BinaryMatrix FromStrings(const std::vector<std::string>& rows);
  static BinaryMatrix Identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);
  void flip(std::size_t i, std::size_t j) { set(i, j, !at(i, j)); }

  BinaryMatrix Transpose() const;
  // Rank over GF(2) by Gaussian elimination.
  std::size_t Rank() const;
  // Row vector times matrix.
  BitVector LeftMultiply(std::span<const std::uint8_t> v) const;
  // One line per row, no separators.
  std::string ToString() const;

  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

struct WiretapCodec {
  FormId form;
  // n x n.
  BinaryMatrix generator;
  // n x k.
  BinaryMatrix parity_check_t;
};

// True for l == 1, l even (including 0) and (l, k) == (3, 1).
bool IsLinearForm(const FormId& form);

// Throws UnsupportedFormError for other forms: their Ni tables are not
// cosets of a linear code.
WiretapCodec BuildCodec(const FormId& form);

// Throws UsageError unless m has k bits and v has l bits.
Codeword Encode(const WiretapCodec& codec, std::span<const std::uint8_t> m,
                std::span<const std::uint8_t> v);
BitVector Decode(const WiretapCodec& codec, const Codeword& x);

// `bits` bits of value, most significant first.
BitVector ToBits(std::uint32_t value, int bits);

// Bin i holds Encode(m_i, v) for v = 0 .. 2^l - 1 in counter order, with
// m_i the k-bit binary expansion of i.
CodeTable CosetTable(const WiretapCodec& codec);

// G H^T == [I_k ; 0] exactly.
bool ParityIdentityHolds(const WiretapCodec& codec);

// ParityIdentityHolds, and within the coset table every bin has a single
// syndrome x H^T with distinct syndromes across bins.
bool SyndromeCheck(const WiretapCodec& codec);

bool IsFullRank(const BinaryMatrix& m);

// True iff the bin holding the zero word is closed under XOR and every bin
// is a translate of it.
bool IsLinearCosetTable(const CodeTable& table);

}  // namespace wiretap

#endif  // WIRETAP_LINEAR_MATRICES_H_
