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


#include "wiretap/lp_limit.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "wiretap/errors.h"

namespace wiretap {
namespace {

void RequireShape(int n, int e) {
  if (n < 1) throw UsageError("blocklength must be >= 1");
  if (e < 1) throw UsageError("bin size must be >= 1");
}

}  // namespace

std::vector<CandidateRow> EnumerateRows(int n, int e, std::uint64_t cap) {
  RequireShape(n, e);
  const BigInt count = Binomial(e + n, e);
  if (count > cap) {
    throw ResourceCapError("candidate row count N = " + count.str() +
                           " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<CandidateRow> rows;
  rows.reserve(count.convert_to<std::size_t>());
  std::vector<int> current(static_cast<std::size_t>(n) + 1, 0);
  // Fill from the last position down; position 0 takes the remainder.
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == 0) {
      current[0] = remaining;
      rows.push_back(CandidateRow{current});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      fill(pos - 1, remaining - v);
    }
    current[static_cast<std::size_t>(pos)] = 0;
  };
  fill(n, e);
  return rows;
}

BigInt AppendixCountRecursive(int n, int e) {
  RequireShape(n, e);
  // f[s][c]: ways to spread s further slots over c already-chosen colours,
  // each later level using at most as many colours as the one before.
  std::map<std::pair<int, int>, BigInt> memo;
  std::function<BigInt(int, int)> f = [&](int s, int c) -> BigInt {
    if (s == 0) return 1;
    auto key = std::make_pair(s, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int j = 1; j <= std::min(s, c); ++j) {
      total += Binomial(c, j) * f(s - j, j);
    }
    memo.emplace(key, total);
    return total;
  };
  const int delta = std::min(e, n + 1);
  BigInt total = 0;
  for (int i = 1; i <= delta; ++i) total += Binomial(n + 1, i) * f(e - i, i);
  return total;
}

BigInt AppendixCountClosed(int n, int e) {
  RequireShape(n, e);
  const int delta = std::min(e, n + 1);
  BigInt total = 0;
  for (int i = 1; i <= delta; ++i) {
    total += Binomial(n + 1, i) * Binomial(e - 1, i - 1);
  }
  return total;
}

BigInt AppendixCount(int n, int e) {
  const BigInt recursive = AppendixCountRecursive(n, e);
  const BigInt closed = AppendixCountClosed(n, e);
  if (recursive != closed) {
    throw InternalError("row counts disagree for n = " + std::to_string(n) +
                        ", e = " + std::to_string(e) + ": " +
                        recursive.str() + " vs " + closed.str());
  }
  return closed;
}

double RowObjective(const CandidateRow& row, const ChannelWeights& weights) {
  double mass = 0.0;
  for (std::size_t j = 0; j < row.counts.size(); ++j) {
    mass += row.counts[j] * weights.gamma[j];
  }
  return mass > 0.0 ? -mass * std::log2(mass) : 0.0;
}

std::size_t LpInstance::IndexOf(const CandidateRow& row) const {
  auto it = std::find(rows.begin(), rows.end(), row);
  if (it == rows.end()) throw UsageError("row is not a candidate row");
  return static_cast<std::size_t>(it - rows.begin());
}

LpInstance BuildLp(int n, int e, double p, std::uint64_t cap) {
  const ChannelWeights weights = MakeChannelWeights(p, n);
  LpInstance instance;
  instance.n = n;
  instance.e = e;
  instance.p = p;
  instance.rows = EnumerateRows(n, e, cap);
  StandardFormLp& lp = instance.lp;
  lp.rows = static_cast<std::size_t>(n) + 1;
  lp.cols = instance.rows.size();
  lp.a.assign(lp.rows * lp.cols, 0.0);
  lp.c.resize(lp.cols);
  for (std::size_t i = 0; i < lp.cols; ++i) {
    const CandidateRow& row = instance.rows[i];
    for (std::size_t j = 0; j < lp.rows; ++j) {
      lp.a[j * lp.cols + i] = row.counts[j];
    }
    lp.c[i] = RowObjective(row, weights);
  }
  lp.b.resize(lp.rows);
  for (int j = 0; j <= n; ++j) {
    lp.b[static_cast<std::size_t>(j)] = Binomial(n, j).convert_to<double>();
  }
  return instance;
}

LpSolution SolveLp(const LpInstance& instance, const SimplexOptions& options) {
  SimplexResult result = SolveSimplex(instance.lp, options);
  LpSolution solution;
  solution.x = std::move(result.x);
  solution.objective = result.objective;
  solution.iterations = result.iterations;
  for (std::size_t i = 0; i < solution.x.size(); ++i) {
    if (solution.x[i] > 0.0) solution.support.push_back(i);
  }
  return solution;
}

std::vector<std::pair<CandidateRow, double>> SelectedRows(
    const LpInstance& instance, const LpSolution& solution) {
  std::vector<std::pair<CandidateRow, double>> out;
  for (std::size_t i : solution.support) {
    out.emplace_back(instance.rows[i], solution.x[i]);
  }
  return out;
}

std::vector<double> SelectionFromProfile(const LpInstance& instance,
                                         const DistanceProfile& profile) {
  if (profile.n != instance.n) {
    throw UsageError("profile blocklength does not match the instance");
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < instance.rows.size(); ++i) {
    index.emplace(instance.rows[i].counts, i);
  }
  std::vector<double> x(instance.rows.size(), 0.0);
  for (const auto& row : profile.rows) {
    std::vector<int> counts(row.begin(), row.end());
    auto it = index.find(counts);
    if (it == index.end()) {
      throw UsageError("profile row is not a candidate row of this instance");
    }
    x[it->second] += 1.0;
  }
  return x;
}

double LpLimitRate(int l, int k, double p, std::uint64_t cap) {
  if (l < 0) throw UsageError("l must be >= 0");
  if (k < 1) throw UsageError("k must be >= 1");
  if (l > 30) throw ResourceCapError("bin size 2^l is too large");
  const int n = l + k;
  // Validates p before the shortcut.
  MakeChannelWeights(p, n);
  if (p == 0.0 || p == 1.0) return 0.0;
  const LpInstance instance = BuildLp(n, 1 << l, p, cap);
  return SolveLp(instance).objective / n;
}

std::vector<double> LpLimitCurve(int l, int k, std::span<const double> ps,
                                 std::uint64_t cap) {
  std::vector<double> out;
  out.reserve(ps.size());
  for (double p : ps) out.push_back(LpLimitRate(l, k, p, cap));
  return out;
}

std::vector<std::pair<CandidateRow, double>> OptimalRowsL1(int n) {
  if (n < 1) throw UsageError("blocklength must be >= 1");
  std::vector<std::pair<CandidateRow, double>> out;
  for (int j = 0; 2 * j <= n; ++j) {
    CandidateRow row{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    double copies = Binomial(n, j).convert_to<double>();
    if (2 * j == n) {
      row.counts[static_cast<std::size_t>(j)] = 2;
      copies /= 2.0;
    } else {
      row.counts[static_cast<std::size_t>(j)] = 1;
      row.counts[static_cast<std::size_t>(n - j)] = 1;
    }
    out.emplace_back(std::move(row), copies);
  }
  return out;
}

double SelectionObjective(
    const std::vector<std::pair<CandidateRow, double>>& selection, int n,
    double p) {
  const ChannelWeights weights = MakeChannelWeights(p, n);
  double total = 0.0;
  for (const auto& [row, copies] : selection) {
    total += copies * RowObjective(row, weights);
  }
  return total;
}

PatternCheck CompareL1Pattern(int n, double p) {
  PatternCheck check;
  check.pattern_objective = SelectionObjective(OptimalRowsL1(n), n, p);
  check.simplex_objective =
      (p == 0.0 || p == 1.0) ? 0.0 : SolveLp(BuildLp(n, 2, p)).objective;
  check.diverged =
      std::abs(check.pattern_objective - check.simplex_objective) > 1e-9;
  return check;
}

}  // namespace wiretap
