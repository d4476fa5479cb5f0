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


// Reference points for Ni codes: random uniform binning codes, the size of
// the binning-code space and the infinite-blocklength bound.

#ifndef WIRETAP_BASELINES_H_
#define WIRETAP_BASELINES_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wiretap/bitcore.h"
#include "wiretap/combinatorics.h"
#include "wiretap/ni_code.h"

namespace wiretap {

inline constexpr char kSamplerAlgorithm[] =
    "mt19937_64 seeded by splitmix64(seed, index); std::shuffle";

struct RandomBinningSpec {
  FormId form;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
};

// Draws ordered uniform partitions by shuffling all 2^n words and cutting
// them into consecutive blocks of 2^l. Sample i depends only on (seed, i),
// so any subset of indices can be drawn in any order or in parallel.
class BinningSampler {
 public:
  // Throws UsageError on an invalid form or count == 0.
  explicit BinningSampler(const RandomBinningSpec& spec);

  const RandomBinningSpec& spec() const { return spec_; }
  CodeTable SampleAt(std::uint64_t index) const;
  // Sequential access from index 0; not bounded by spec().count.
  CodeTable Next() { return SampleAt(next_++); }

 private:
  RandomBinningSpec spec_;
  std::uint64_t next_ = 0;
};

// Calls `visit` once for every ordered uniform partition, bins ordered,
// words within a bin ascending. Throws ResourceCapError if the number of
// ordered partitions exceeds `cap`.
void ForEachBinning(const FormId& form,
                    const std::function<void(const CodeTable&)>& visit,
                    std::uint64_t cap = 1'000'000);

// Number of ordered uniform partitions, (2^n)! / ((2^l)!)^(2^k).
BigInt OrderedBinningCount(const FormId& form);

// prod_{i=1}^{2^k} C(e i - 1, e - 1) with e = 2^l: partitions of the 2^n
// words into 2^k unlabelled bins of size e.
BigInt BinningCodeCount(const FormId& form);

double BinaryEntropy(double p);

// min(h2(p), rate). Throws UsageError unless 0 <= p <= 1 and
// 0 < rate <= 1.
double InfiniteBlocklengthLimit(double p, double rate);

struct ComparisonRow {
  double p = 0.0;
  double ni_rate = 0.0;
  double lp_limit = 0.0;
  double inf_limit = 0.0;
  double rand_max = 0.0;
  double rand_mean = 0.0;
  double rand_min = 0.0;
};

struct ComparisonRecord {
  FormId form;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  // True when every ordered partition was evaluated instead of sampling.
  bool exhaustive = false;
  bool closed_form = false;
  std::string rng;
  std::vector<ComparisonRow> rows;

  // Grid points where some random code beats the Ni table by more than
  // 1e-12.
  std::vector<double> NiBeatenAt() const;
};

struct CompareOptions {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  // Evaluate the closed-form table instead of the standard path.
  bool closed_form = false;
};

// Throws UsageError if n > 12 or the grid is empty.
ComparisonRecord CompareForm(const FormId& form, std::span<const double> ps,
                             const CompareOptions& options);

}  // namespace wiretap

#endif  // WIRETAP_BASELINES_H_
