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


// Exact eavesdropper equivocation of a binning code over BSC(p).
//
// Alice's channel is noiseless; Eve observes z = x + e with e i.i.d.
// Bernoulli(p). For observation z, bin i has posterior mass
// P_i = sum over codewords x in bin i of p^d(x,z) q^(n-d(x,z)), which groups
// by distance into P = R * gamma with R the per-bin distance histogram.

#ifndef WIRETAP_EQUIVOCATION_H_
#define WIRETAP_EQUIVOCATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "wiretap/bitcore.h"

namespace wiretap {

struct ChannelWeights {
  double p = 0.0;
  int n = 0;
  // gamma[eta] = p^eta (1-p)^(n-eta).
  std::vector<double> gamma;
};

// Throws UsageError unless 0 <= p <= 1 and n >= 1.
ChannelWeights MakeChannelWeights(double p, int n);

// rows[i][j] = number of codewords in bin i at distance j from z.
struct DistanceProfile {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

// Requires a valid table (throws ValidationError otherwise) and
// z.length() == t.n().
DistanceProfile ComputeDistanceProfile(const CodeTable& table,
                                       const Codeword& z);

// Bin probabilities R * gamma.
std::vector<double> BinPosterior(const DistanceProfile& profile,
                                 const ChannelWeights& weights);

// -sum p log2 p with 0 log 0 = 0. Entries are not required to sum to one.
double Entropy(std::span<const double> probs);

// H(M | Z = z) in bits.
double ConditionalEquivocation(const CodeTable& table, const Codeword& z,
                               double p);

// Average of H(M | Z = z) over all 2^n observations. X^n is uniform because
// M and the bin choice are, so Z^n is uniform for every p including 0 and 1.
double TotalEquivocation(const CodeTable& table, double p);

// TotalEquivocation at several crossover probabilities, computing each
// distance profile once.
std::vector<double> TotalEquivocationCurve(const CodeTable& table,
                                           std::span<const double> ps);

// Shortcut for coset tables: H(M | Z = 0). Verifies the claim on the
// all-ones word, every weight-1 word and 16 pseudo-random observations and
// throws NotLinearError on a difference above 1e-9. A non-linear table can
// still pass at values of p where every observation gives the same entropy
// (p in {0, 0.5, 1}).
double TotalEquivocationLinear(const CodeTable& table, double p);

// TotalEquivocation / n.
double EquivocationRate(const CodeTable& table, double p);

}  // namespace wiretap

#endif  // WIRETAP_EQUIVOCATION_H_
