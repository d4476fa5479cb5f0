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


#include "wiretap/bitcore.h"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "wiretap/errors.h"

namespace wiretap {
namespace {

std::uint32_t Mask(int length) {
  return length >= 32 ? ~std::uint32_t{0}
                      : (std::uint32_t{1} << length) - 1;
}

}  // namespace

Codeword::Codeword(std::uint32_t value, int length)
    : value_(value), length_(length) {
  if (length < 1 || length > kMaxBlocklength) {
    throw UsageError("codeword length " + std::to_string(length) +
                     " outside [1, " + std::to_string(kMaxBlocklength) + "]");
  }
  if ((value & ~Mask(length)) != 0) {
    throw UsageError("codeword value does not fit in " +
                     std::to_string(length) + " bits");
  }
}

Codeword Codeword::FromString(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxBlocklength)) {
    throw UsageError("bit string length " + std::to_string(bits.size()) +
                     " outside [1, " + std::to_string(kMaxBlocklength) + "]");
  }
  std::uint32_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw UsageError("invalid bit character '" + std::string(1, c) + "'");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Codeword(value, static_cast<int>(bits.size()));
}

Codeword Codeword::Ones(int length) { return Codeword(Mask(length), length); }

bool Codeword::bit(int pos) const {
  if (pos < 0 || pos >= length_) {
    throw UsageError("bit position " + std::to_string(pos) + " out of range");
  }
  return ((value_ >> (length_ - 1 - pos)) & 1u) != 0;
}

Codeword Codeword::Append(bool bit) const {
  return Codeword((value_ << 1) | (bit ? 1u : 0u), length_ + 1);
}

Codeword Codeword::Complement() const {
  return Codeword(~value_ & Mask(length_), length_);
}

Codeword Codeword::operator^(const Codeword& other) const {
  if (length_ != other.length_) {
    throw UsageError("XOR of codewords with lengths " +
                     std::to_string(length_) + " and " +
                     std::to_string(other.length_));
  }
  return Codeword(value_ ^ other.value_, length_);
}

std::string Codeword::ToString() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

int HammingDistance(const Codeword& a, const Codeword& b) {
  if (a.length() != b.length()) {
    throw UsageError("Hamming distance of codewords with lengths " +
                     std::to_string(a.length()) + " and " +
                     std::to_string(b.length()));
  }
  return std::popcount(a.value() ^ b.value());
}

CodeTable::CodeTable(int l, int k, std::vector<Bin> bins)
    : l_(l), k_(k), bins_(std::move(bins)) {
  if (l < 0) throw UsageError("l must be >= 0");
  if (k < 1) throw UsageError("k must be >= 1");
  if (l + k > kMaxBlocklength) {
    throw UsageError("blocklength " + std::to_string(l + k) +
                     " exceeds the cap of " + std::to_string(kMaxBlocklength));
  }
  for (const Bin& bin : bins_) {
    for (const Codeword& w : bin) {
      if (w.length() != l + k) {
        throw UsageError("codeword " + w.ToString() + " has length " +
                         std::to_string(w.length()) + ", expected " +
                         std::to_string(l + k));
      }
    }
  }
}

CodeTable CodeTable::FromStrings(
    int l, int k, const std::vector<std::vector<std::string>>& bins) {
  std::vector<Bin> parsed;
  parsed.reserve(bins.size());
  for (const auto& strings : bins) {
    Bin bin;
    bin.reserve(strings.size());
    for (const std::string& s : strings) bin.push_back(Codeword::FromString(s));
    parsed.push_back(std::move(bin));
  }
  return CodeTable(l, k, std::move(parsed));
}

bool SamePartition(const CodeTable& a, const CodeTable& b) {
  if (a.l() != b.l() || a.k() != b.k()) return false;
  auto canonical = [](const CodeTable& t) {
    std::set<std::vector<std::uint32_t>> out;
    for (const Bin& bin : t.bins()) {
      std::vector<std::uint32_t> words;
      for (const Codeword& w : bin) words.push_back(w.value());
      std::sort(words.begin(), words.end());
      out.insert(std::move(words));
    }
    return out;
  };
  if (a.bins().size() != b.bins().size()) return false;
  return canonical(a) == canonical(b);
}

std::vector<std::string> ValidationReport::Describe() const {
  std::vector<std::string> lines;
  if (wrong_bin_count) {
    lines.push_back("table has " + std::to_string(bin_count) + " bins");
  }
  for (const auto& [index, size] : wrong_bin_sizes) {
    lines.push_back("bin " + std::to_string(index + 1) + " has " +
                    std::to_string(size) + " codewords");
  }
  for (const Codeword& w : duplicates) {
    lines.push_back("duplicate codeword " + w.ToString());
  }
  for (const Codeword& w : missing) {
    lines.push_back("missing codeword " + w.ToString());
  }
  return lines;
}

ValidationReport ValidateTable(const CodeTable& table) {
  ValidationReport report;
  report.bin_count = table.bins().size();
  report.wrong_bin_count = report.bin_count != table.expected_bin_count();
  for (std::size_t i = 0; i < table.bins().size(); ++i) {
    if (table.bin(i).size() != table.expected_bin_size()) {
      report.wrong_bin_sizes.emplace_back(i, table.bin(i).size());
    }
  }
  const int n = table.n();
  std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
  for (const Bin& bin : table.bins()) {
    for (const Codeword& w : bin) {
      std::uint8_t& count = seen[w.value()];
      // Report each duplicated word once.
      if (count == 1) report.duplicates.push_back(w);
      if (count < 2) ++count;
    }
  }
  for (std::uint32_t v = 0; v < seen.size(); ++v) {
    if (seen[v] == 0) report.missing.emplace_back(v, n);
  }
  return report;
}

void RequireValidTable(const CodeTable& table) {
  ValidationReport report = ValidateTable(table);
  if (report.ok()) return;
  std::ostringstream message;
  message << "invalid code table";
  std::vector<std::string> lines = report.Describe();
  const std::size_t shown = std::min<std::size_t>(lines.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) message << "; " << lines[i];
  if (lines.size() > shown) {
    message << "; and " << (lines.size() - shown) << " more";
  }
  throw ValidationError(message.str());
}

CodeTable XorTranslate(const CodeTable& table, const Codeword& z) {
  if (z.length() != table.n()) {
    throw UsageError("translation word has length " +
                     std::to_string(z.length()) + ", table has n = " +
                     std::to_string(table.n()));
  }
  std::vector<Bin> bins = table.bins();
  for (Bin& bin : bins) {
    for (Codeword& w : bin) w = w ^ z;
  }
  return CodeTable(table.l(), table.k(), std::move(bins));
}

}  // namespace wiretap
