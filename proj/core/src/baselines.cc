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


#include "wiretap/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "wiretap/equivocation.h"
#include "wiretap/errors.h"
#include "wiretap/lp_limit.h"

namespace wiretap {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxCompareBlocklength = 12;

}  // namespace

BinningSampler::BinningSampler(const RandomBinningSpec& spec) : spec_(spec) {
  RequireValidForm(spec.form);
  if (spec.count == 0) throw UsageError("sample count must be >= 1");
}

CodeTable BinningSampler::SampleAt(std::uint64_t index) const {
  const int n = spec_.form.n();
  std::vector<std::uint32_t> words(std::size_t{1} << n);
  std::iota(words.begin(), words.end(), 0u);
  std::mt19937_64 rng(SplitMix64(spec_.seed ^ SplitMix64(index)));
  std::shuffle(words.begin(), words.end(), rng);
  const std::size_t bin_size = std::size_t{1} << spec_.form.l;
  std::vector<Bin> bins(std::size_t{1} << spec_.form.k);
  for (std::size_t i = 0; i < words.size(); ++i) {
    bins[i / bin_size].emplace_back(words[i], n);
  }
  return CodeTable(spec_.form.l, spec_.form.k, std::move(bins));
}

BigInt OrderedBinningCount(const FormId& form) {
  RequireValidForm(form);
  const std::int64_t e = std::int64_t{1} << form.l;
  const std::int64_t bins = std::int64_t{1} << form.k;
  BigInt total = 1;
  std::int64_t remaining = e * bins;
  for (std::int64_t i = 0; i < bins; ++i) {
    total *= Binomial(remaining, e);
    remaining -= e;
  }
  return total;
}

void ForEachBinning(const FormId& form,
                    const std::function<void(const CodeTable&)>& visit,
                    std::uint64_t cap) {
  const BigInt count = OrderedBinningCount(form);
  if (count > cap) {
    throw ResourceCapError("form has " + count.str() +
                           " ordered binnings, above the cap of " +
                           std::to_string(cap));
  }
  const int n = form.n();
  const std::size_t words = std::size_t{1} << n;
  const std::size_t bin_size = std::size_t{1} << form.l;
  const std::size_t bin_count = std::size_t{1} << form.k;
  std::vector<Bin> bins(bin_count);

  // Assign words in increasing order; a word may open a bin's next slot.
  std::function<void(std::size_t)> place = [&](std::size_t w) {
    if (w == words) {
      visit(CodeTable(form.l, form.k, bins));
      return;
    }
    for (std::size_t b = 0; b < bin_count; ++b) {
      if (bins[b].size() == bin_size) continue;
      bins[b].emplace_back(static_cast<std::uint32_t>(w), n);
      place(w + 1);
      bins[b].pop_back();
    }
  };
  place(0);
}

BigInt BinningCodeCount(const FormId& form) {
  RequireValidForm(form);
  const std::int64_t e = std::int64_t{1} << form.l;
  const std::int64_t bins = std::int64_t{1} << form.k;
  BigInt total = 1;
  for (std::int64_t i = 1; i <= bins; ++i) total *= Binomial(e * i - 1, e - 1);
  return total;
}

double BinaryEntropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw UsageError("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double InfiniteBlocklengthLimit(double p, double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw UsageError("rate " + std::to_string(rate) + " outside (0, 1]");
  }
  return std::min(BinaryEntropy(p), rate);
}

std::vector<double> ComparisonRecord::NiBeatenAt() const {
  std::vector<double> out;
  for (const ComparisonRow& row : rows) {
    if (row.rand_max > row.ni_rate + 1e-12) out.push_back(row.p);
  }
  return out;
}

ComparisonRecord CompareForm(const FormId& form, std::span<const double> ps,
                             const CompareOptions& options) {
  RequireValidForm(form);
  if (form.n() > kMaxCompareBlocklength) {
    throw UsageError("comparison needs n <= " +
                     std::to_string(kMaxCompareBlocklength));
  }
  if (ps.empty()) throw UsageError("empty probability grid");
  if (!options.exhaustive && options.samples == 0) {
    throw UsageError("sample count must be >= 1");
  }
  const double n = form.n();

  ComparisonRecord record;
  record.form = form;
  record.seed = options.seed;
  record.exhaustive = options.exhaustive;
  record.closed_form = options.closed_form;
  record.rng = options.exhaustive ? "none (exhaustive)" : kSamplerAlgorithm;

  const CodeTable ni =
      options.closed_form ? ClosedFormTable(form) : StandardTable(form);
  const std::vector<double> ni_curve = TotalEquivocationCurve(ni, ps);
  const std::vector<double> lp_curve = LpLimitCurve(form.l, form.k, ps);

  std::vector<double> max(ps.size(), -1.0);
  std::vector<double> min(ps.size(), 1e300);
  std::vector<double> sum(ps.size(), 0.0);
  std::uint64_t evaluated = 0;
  auto accumulate = [&](const CodeTable& table) {
    const std::vector<double> curve = TotalEquivocationCurve(table, ps);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double rate = curve[i] / n;
      max[i] = std::max(max[i], rate);
      min[i] = std::min(min[i], rate);
      sum[i] += rate;
    }
    ++evaluated;
  };
  if (options.exhaustive) {
    ForEachBinning(form, accumulate);
  } else {
    const BinningSampler sampler({form, options.seed, options.samples});
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      accumulate(sampler.SampleAt(i));
    }
  }
  record.samples = evaluated;

  for (std::size_t i = 0; i < ps.size(); ++i) {
    ComparisonRow row;
    row.p = ps[i];
    row.ni_rate = ni_curve[i] / n;
    row.lp_limit = lp_curve[i];
    row.inf_limit = InfiniteBlocklengthLimit(ps[i], form.k / n);
    row.rand_max = max[i];
    row.rand_mean = sum[i] / static_cast<double>(evaluated);
    row.rand_min = min[i];
    record.rows.push_back(row);
  }
  return record;
}

}  // namespace wiretap
