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


#include "wiretap/equivocation.h"

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "wiretap/errors.h"

namespace wiretap {
namespace {

constexpr double kLinearTolerance = 1e-9;

void RequireProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw UsageError("crossover probability " + std::to_string(p) +
                     " outside [0, 1]");
  }
}

// Flat table of codeword values plus bin offsets; keeps the 2^n x 2^n inner
// loop on contiguous memory.
struct FlatTable {
  std::vector<std::uint32_t> words;
  std::size_t bin_size = 0;
  std::size_t bin_count = 0;
};

FlatTable Flatten(const CodeTable& table) {
  RequireValidTable(table);
  FlatTable flat;
  flat.bin_size = table.expected_bin_size();
  flat.bin_count = table.expected_bin_count();
  flat.words.reserve(flat.bin_size * flat.bin_count);
  for (const Bin& bin : table.bins()) {
    for (const Codeword& w : bin) flat.words.push_back(w.value());
  }
  return flat;
}

void FillProfile(const FlatTable& flat, int n, std::uint32_t z,
                 std::vector<std::uint32_t>& counts) {
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  counts.assign(flat.bin_count * width, 0);
  for (std::size_t b = 0; b < flat.bin_count; ++b) {
    std::uint32_t* row = counts.data() + b * width;
    const std::uint32_t* words = flat.words.data() + b * flat.bin_size;
    for (std::size_t i = 0; i < flat.bin_size; ++i) {
      ++row[std::popcount(words[i] ^ z)];
    }
  }
}

double ProfileEntropy(const std::vector<std::uint32_t>& counts,
                      std::size_t bin_count, const std::vector<double>& gamma) {
  const std::size_t width = gamma.size();
  double h = 0.0;
  for (std::size_t b = 0; b < bin_count; ++b) {
    const std::uint32_t* row = counts.data() + b * width;
    double mass = 0.0;
    for (std::size_t j = 0; j < width; ++j) mass += row[j] * gamma[j];
    if (mass > 0.0) h -= mass * std::log2(mass);
  }
  return h;
}

}  // namespace

ChannelWeights MakeChannelWeights(double p, int n) {
  RequireProbability(p);
  if (n < 1) throw UsageError("blocklength must be >= 1");
  ChannelWeights w;
  w.p = p;
  w.n = n;
  w.gamma.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const double q = 1.0 - p;
  if (p == 0.0) {
    w.gamma[0] = 1.0;
  } else if (q == 0.0) {
    w.gamma[static_cast<std::size_t>(n)] = 1.0;
  } else {
    w.gamma[0] = std::pow(q, n);
    const double ratio = p / q;
    for (int eta = 0; eta < n; ++eta) {
      w.gamma[static_cast<std::size_t>(eta) + 1] =
          w.gamma[static_cast<std::size_t>(eta)] * ratio;
    }
  }
  return w;
}

DistanceProfile ComputeDistanceProfile(const CodeTable& table,
                                       const Codeword& z) {
  if (z.length() != table.n()) {
    throw UsageError("observation has length " + std::to_string(z.length()) +
                     ", table has n = " + std::to_string(table.n()));
  }
  const FlatTable flat = Flatten(table);
  std::vector<std::uint32_t> counts;
  FillProfile(flat, table.n(), z.value(), counts);
  DistanceProfile profile;
  profile.n = table.n();
  const std::size_t width = static_cast<std::size_t>(table.n()) + 1;
  profile.rows.resize(flat.bin_count);
  for (std::size_t b = 0; b < flat.bin_count; ++b) {
    profile.rows[b].assign(counts.begin() + b * width,
                           counts.begin() + (b + 1) * width);
  }
  return profile;
}

std::vector<double> BinPosterior(const DistanceProfile& profile,
                                 const ChannelWeights& weights) {
  if (profile.n != weights.n) {
    throw UsageError("profile and channel weights disagree on n");
  }
  std::vector<double> probs;
  probs.reserve(profile.rows.size());
  for (const auto& row : profile.rows) {
    double mass = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      mass += row[j] * weights.gamma[j];
    }
    probs.push_back(mass);
  }
  return probs;
}

double Entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double ConditionalEquivocation(const CodeTable& table, const Codeword& z,
                               double p) {
  const ChannelWeights weights = MakeChannelWeights(p, table.n());
  const std::vector<double> probs =
      BinPosterior(ComputeDistanceProfile(table, z), weights);
  return Entropy(probs);
}

double TotalEquivocation(const CodeTable& table, double p) {
  const double ps[] = {p};
  return TotalEquivocationCurve(table, ps).front();
}

std::vector<double> TotalEquivocationCurve(const CodeTable& table,
                                           std::span<const double> ps) {
  const FlatTable flat = Flatten(table);
  const int n = table.n();
  std::vector<std::vector<double>> gammas;
  gammas.reserve(ps.size());
  for (double p : ps) gammas.push_back(MakeChannelWeights(p, n).gamma);

  std::vector<double> sums(ps.size(), 0.0);
  std::vector<std::uint32_t> counts;
  const std::uint32_t observations = std::uint32_t{1} << n;
  for (std::uint32_t z = 0; z < observations; ++z) {
    FillProfile(flat, n, z, counts);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      sums[i] += ProfileEntropy(counts, flat.bin_count, gammas[i]);
    }
  }
  for (double& s : sums) s /= observations;
  return sums;
}

double TotalEquivocationLinear(const CodeTable& table, double p) {
  const int n = table.n();
  const double reference =
      ConditionalEquivocation(table, Codeword::Zeros(n), p);
  std::vector<std::uint32_t> probes;
  probes.push_back((std::uint32_t{1} << n) - 1);
  for (int i = 0; i < n; ++i) probes.push_back(std::uint32_t{1} << i);
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  std::uniform_int_distribution<std::uint32_t> pick(
      0, (std::uint32_t{1} << n) - 1);
  for (int i = 0; i < 16; ++i) probes.push_back(pick(rng));

  for (std::uint32_t z : probes) {
    const double h = ConditionalEquivocation(table, Codeword(z, n), p);
    if (std::abs(h - reference) > kLinearTolerance) {
      throw NotLinearError(
          "conditional equivocation at z = " + Codeword(z, n).ToString() +
          " differs from z = 0 by " + std::to_string(std::abs(h - reference)));
    }
  }
  return reference;
}

double EquivocationRate(const CodeTable& table, double p) {
  return TotalEquivocation(table, p) / table.n();
}

}  // namespace wiretap
