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


#include "wiretap/ni_code.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "wiretap/equivocation.h"
#include "wiretap/errors.h"

namespace wiretap {

void RequireValidForm(const FormId& form) {
  if (form.l < 0) throw UsageError("l must be >= 0");
  if (form.k < 1) throw UsageError("k must be >= 1");
  if (form.n() > kMaxBlocklength) {
    throw UsageError("blocklength " + std::to_string(form.n()) +
                     " exceeds the cap of " + std::to_string(kMaxBlocklength));
  }
}

CodeTable Rasba(const CodeTable& table) {
  RequireValidTable(table);
  RequireValidForm({table.l(), table.k() + 1});
  std::vector<Bin> bins;
  bins.reserve(2 * table.bins().size());
  for (const Bin& bin : table.bins()) {
    Bin first;
    Bin second;
    first.reserve(bin.size());
    second.reserve(bin.size());
    for (std::size_t r = 0; r < bin.size(); ++r) {
      const bool odd = (r & 1) != 0;
      first.push_back(bin[r].Append(odd));
      second.push_back(bin[r].Append(!odd));
    }
    bins.push_back(std::move(first));
    bins.push_back(std::move(second));
  }
  return CodeTable(table.l(), table.k() + 1, std::move(bins));
}

CodeTable Rahba(const CodeTable& table) {
  RequireValidTable(table);
  RequireValidForm({table.l() + 1, table.k()});
  std::vector<Bin> bins;
  bins.reserve(table.bins().size());
  for (std::size_t i = 0; i + 1 < table.bins().size(); i += 2) {
    const Bin& x = table.bin(i);
    const Bin& y = table.bin(i + 1);
    Bin first;
    Bin second;
    first.reserve(2 * x.size());
    second.reserve(2 * x.size());
    for (const Codeword& w : x) first.push_back(w.Append(false));
    for (const Codeword& w : y) first.push_back(w.Append(true));
    for (const Codeword& w : x) second.push_back(w.Append(true));
    for (const Codeword& w : y) second.push_back(w.Append(false));
    bins.push_back(std::move(first));
    bins.push_back(std::move(second));
  }
  return CodeTable(table.l() + 1, table.k(), std::move(bins));
}

CodeTable BaseTable() {
  return CodeTable(0, 1, {{Codeword(0, 1)}, {Codeword(1, 1)}});
}

CodeTable StandardTable(const FormId& form) {
  RequireValidForm(form);
  CodeTable table = BaseTable();
  for (int i = 0; i < form.l; ++i) table = Rahba(table);
  for (int i = 1; i < form.k; ++i) table = Rasba(table);
  return table;
}

BigInt PathCount(const FormId& from, const FormId& to) {
  if (from.l < 1 || to.l < from.l || to.k < from.k || from.k < 1) {
    throw UsageError("path count needs to.l >= from.l >= 1 and to.k >= from.k");
  }
  return Binomial(to.n() - from.n(), to.k - from.k);
}

std::vector<Codeword> GrayMatrix(int l) {
  if (l < 1) throw UsageError("Gray matrix needs l >= 1");
  if (l > kMaxBlocklength) throw UsageError("Gray matrix width too large");
  const std::uint32_t rows = std::uint32_t{1} << l;
  std::vector<Codeword> out;
  out.reserve(rows);
  for (std::uint32_t r = 0; r < rows; ++r) {
    const std::uint32_t gray = r ^ (r >> 1);
    std::uint32_t reversed = 0;
    for (int b = 0; b < l; ++b) reversed |= ((gray >> b) & 1u) << (l - 1 - b);
    out.emplace_back(reversed, l);
  }
  return out;
}

std::pair<Bin, Bin> ClosedFormFfBins(int l) {
  if (l < 1) throw UsageError("first-form bins need l >= 1");
  RequireValidForm({l, 1});
  const std::vector<Codeword> gray = GrayMatrix(l);
  const std::size_t rows = gray.size();
  Bin first;
  Bin second;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint32_t lead = static_cast<std::uint32_t>(r & 1) << l;
    first.emplace_back(lead | gray[r].value(), l + 1);
    second.emplace_back(lead | gray[rows - 1 - r].value(), l + 1);
  }
  return {std::move(first), std::move(second)};
}

CodeTable ClosedFormTable(const FormId& form) {
  RequireValidForm(form);
  if (form.l < 1) throw UsageError("closed form needs l >= 1");
  const auto [first, second] = ClosedFormFfBins(form.l);
  const int suffix_bits = form.k - 1;
  const std::size_t bin_count = std::size_t{1} << form.k;
  std::vector<Bin> bins;
  bins.reserve(bin_count);
  for (std::size_t b = 0; b < bin_count; ++b) {
    const Bin& ff = (b >> suffix_bits) == 0 ? first : second;
    const std::size_t state = b & ((std::size_t{1} << suffix_bits) - 1);
    Bin bin;
    bin.reserve(ff.size());
    for (std::size_t r = 0; r < ff.size(); ++r) {
      Codeword w = ff[r];
      for (int t = 0; t < suffix_bits; ++t) {
        const bool flip = ((state >> (suffix_bits - 1 - t)) & 1u) != 0;
        w = w.Append(flip != ((r & 1) != 0));
      }
      bin.push_back(w);
    }
    bins.push_back(std::move(bin));
  }
  return CodeTable(form.l, form.k, std::move(bins));
}

bool OppositePairingCheck(const CodeTable& table) {
  if (table.l() != 1) {
    throw UsageError("opposite pairing is defined for l = 1 only");
  }
  RequireValidTable(table);
  return std::all_of(table.bins().begin(), table.bins().end(),
                     [](const Bin& bin) {
                       return bin[0].Complement() == bin[1];
                     });
}

double MaxEquivocationGap(const CodeTable& a, const CodeTable& b,
                          std::span<const double> ps) {
  if (a.n() != b.n()) throw UsageError("tables have different blocklengths");
  const std::vector<double> ha = TotalEquivocationCurve(a, ps);
  const std::vector<double> hb = TotalEquivocationCurve(b, ps);
  double gap = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    gap = std::max(gap, std::abs(ha[i] - hb[i]) / a.n());
  }
  return gap;
}

}  // namespace wiretap
