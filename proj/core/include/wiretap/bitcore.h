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

// Binary words, Hamming geometry and code tables.
//
// A code table of form (l, k) splits all 2^n binary words of length
// n = l + k into 2^k bins of 2^l words each. Bin i carries message i; the
// encoder picks a word from the bin uniformly at random.
//
// Words are stored as unsigned integers. Bit position 0 is the leftmost
// printed bit (the most significant bit of the stored value), so appending
// a bit on the right is `value << 1 | bit`.

#ifndef WIRETAP_BITCORE_H_
#define WIRETAP_BITCORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiretap {

// Largest supported blocklength. Exhaustive equivocation enumerates all 2^n
// observations, so anything beyond this is refused up front.
inline constexpr int kMaxBlocklength = 24;

class Codeword {
 public:
  Codeword() = default;
  // Throws UsageError if length is outside [1, kMaxBlocklength] or value
  // does not fit in `length` bits.
  Codeword(std::uint32_t value, int length);

  // Parses an MSB-first string of '0'/'1'.
  static Codeword FromString(std::string_view bits);
  static Codeword Zeros(int length) { return Codeword(0, length); }
  static Codeword Ones(int length);

  std::uint32_t value() const { return value_; }
  int length() const { return length_; }

  // Bit at printed position `pos` (0 = leftmost).
  bool bit(int pos) const;

  Codeword Append(bool bit) const;
  Codeword Complement() const;
  Codeword operator^(const Codeword& other) const;

  std::string ToString() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  std::uint32_t value_ = 0;
  int length_ = 0;
};

// Number of positions where a and b differ. Throws UsageError on length
// mismatch.
int HammingDistance(const Codeword& a, const Codeword& b);

// Codewords of one bin. Order matters for RASBA, which alternates by
// position parity.
using Bin = std::vector<Codeword>;

class CodeTable {
 public:
  // Checks only what is needed to keep the object meaningful: l >= 0,
  // k >= 1, n <= kMaxBlocklength and every word of length n. Bin counts,
  // bin sizes and the partition property are left to ValidateTable so that
  // broken tables can be reported rather than rejected.
  CodeTable(int l, int k, std::vector<Bin> bins);

  // Builds a table from MSB-first strings, one inner list per bin.
  static CodeTable FromStrings(
      int l, int k, const std::vector<std::vector<std::string>>& bins);

  int l() const { return l_; }
  int k() const { return k_; }
  int n() const { return l_ + k_; }
  std::size_t expected_bin_count() const { return std::size_t{1} << k_; }
  std::size_t expected_bin_size() const { return std::size_t{1} << l_; }

  const std::vector<Bin>& bins() const { return bins_; }
  const Bin& bin(std::size_t i) const { return bins_.at(i); }

  // Strict equality: same form, same bin order, same order within bins.
  friend bool operator==(const CodeTable&, const CodeTable&) = default;

 private:
  int l_;
  int k_;
  std::vector<Bin> bins_;
};

// Equality as a set of sets: bin order and intra-bin order are ignored.
bool SamePartition(const CodeTable& a, const CodeTable& b);

struct ValidationReport {
  bool wrong_bin_count = false;
  std::size_t bin_count = 0;
  // (bin index, actual size) for every bin whose size is not 2^l.
  std::vector<std::pair<std::size_t, std::size_t>> wrong_bin_sizes;
  std::vector<Codeword> duplicates;
  std::vector<Codeword> missing;

  bool ok() const {
    return !wrong_bin_count && wrong_bin_sizes.empty() && duplicates.empty() &&
           missing.empty();
  }
  // One human-readable line per violation.
  std::vector<std::string> Describe() const;
};

ValidationReport ValidateTable(const CodeTable& table);

// Throws ValidationError carrying the first violations if the table is not
// a uniform partition.
void RequireValidTable(const CodeTable& table);

// XORs every codeword with z, keeping bin and intra-bin order.
CodeTable XorTranslate(const CodeTable& table, const Codeword& z);

}  // namespace wiretap

#endif  // WIRETAP_BITCORE_H_
