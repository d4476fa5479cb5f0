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


// Finite-blocklength equivocation limit from a linear program over
// distance-spectrum rows.
//
// For one observation z, every bin of a form-(l, k) code contributes a row
// r of length n + 1 counting its e = 2^l codewords by distance from z. The
// rows of all bins together cover each distance j exactly C(n, j) times.
// Relaxing "rows come from a real partition" to "any multiset of rows with
// those column totals" gives
//
//   maximize   sum_i x_i f_i,   f_i = -P_i log2 P_i,  P_i = r_i . gamma
//   subject to sum_i x_i r_i[j] = C(n, j),  x >= 0,
//
// whose optimum upper-bounds the total equivocation of every uniform
// binning code of that form.

#ifndef WIRETAP_LP_LIMIT_H_
#define WIRETAP_LP_LIMIT_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wiretap/combinatorics.h"
#include "wiretap/equivocation.h"
#include "wiretap/simplex.h"

namespace wiretap {

inline constexpr std::uint64_t kDefaultRowCap = 10'000'000;

struct CandidateRow {
  std::vector<int> counts;

  friend bool operator==(const CandidateRow&, const CandidateRow&) = default;
  friend auto operator<=>(const CandidateRow&, const CandidateRow&) = default;
};

// All weak compositions of e into n + 1 parts in colexicographic order
// (the last entry varies slowest). Throws ResourceCapError naming the count
// if C(e + n, e) exceeds `cap`, UsageError unless n >= 1 and e >= 1.
std::vector<CandidateRow> EnumerateRows(int n, int e,
                                        std::uint64_t cap = kDefaultRowCap);

// Ways to fill e slots with n + 1 colours, by the nested recursion over
// the number of distinct colours used.
BigInt AppendixCountRecursive(int n, int e);
// Same count as sum_{i=1}^{min(e, n+1)} C(n+1, i) C(e-1, i-1).
BigInt AppendixCountClosed(int n, int e);
// Evaluates both and throws InternalError if they disagree.
BigInt AppendixCount(int n, int e);

// f = -P log2 P with P = counts . gamma, evaluated even when P > 1.
double RowObjective(const CandidateRow& row, const ChannelWeights& weights);

struct LpInstance {
  int n = 0;
  int e = 0;
  double p = 0.0;
  std::vector<CandidateRow> rows;
  // Standard form: a is (n+1) x N with column i = rows[i], b_j = C(n, j),
  // c = objective coefficients.
  StandardFormLp lp;

  std::size_t size() const { return rows.size(); }
  // Index of `row` in `rows`; throws UsageError if absent.
  std::size_t IndexOf(const CandidateRow& row) const;
};

LpInstance BuildLp(int n, int e, double p, std::uint64_t cap = kDefaultRowCap);

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  // Indices of rows with positive multiplicity, ascending.
  std::vector<std::size_t> support;
  std::size_t iterations = 0;
};

LpSolution SolveLp(const LpInstance& instance,
                   const SimplexOptions& options = {});

// (row, multiplicity) pairs for the support of `solution`.
std::vector<std::pair<CandidateRow, double>> SelectedRows(
    const LpInstance& instance, const LpSolution& solution);

// Multiplicity vector of the rows of a distance profile. Feasible for the
// matching instance whenever the profile comes from a valid table.
std::vector<double> SelectionFromProfile(const LpInstance& instance,
                                         const DistanceProfile& profile);

// Optimal objective divided by n. Zero at p in {0, 1} by convention: gamma
// is a unit vector there and every bin is identified exactly.
double LpLimitRate(int l, int k, double p, std::uint64_t cap = kDefaultRowCap);

std::vector<double> LpLimitCurve(int l, int k, std::span<const double> ps,
                                 std::uint64_t cap = kDefaultRowCap);

// Row pattern for e = 2: C(n, j) copies of the row with one count at j and
// one at n - j, for j < n - j. For even n the central row [0..2..0] gets
// C(n, n/2) / 2 copies, which is what A x = b requires.
std::vector<std::pair<CandidateRow, double>> OptimalRowsL1(int n);

// Objective of a row multiset at crossover probability p.
double SelectionObjective(
    const std::vector<std::pair<CandidateRow, double>>& selection, int n,
    double p);

struct PatternCheck {
  double pattern_objective = 0.0;
  double simplex_objective = 0.0;
  // Set when the two differ by more than 1e-9. Reported, not thrown.
  bool diverged = false;
};

PatternCheck CompareL1Pattern(int n, double p);

}  // namespace wiretap

#endif  // WIRETAP_LP_LIMIT_H_
