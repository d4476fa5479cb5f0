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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "testing/oracles.h"
#include "testing/reference_tables.h"
#include "wiretap/baselines.h"
#include "wiretap/combinatorics.h"
#include "wiretap/errors.h"
#include "wiretap/ni_code.h"

namespace wiretap {
namespace {

const std::vector<double> kGrid = {0.05, 0.15, 0.25, 0.35, 0.45};

CodeTable D11() {
  return CodeTable::FromStrings(1, 1, {{"00", "11"}, {"01", "10"}});
}

// Tables with n <= 6 from every construction the library offers.
std::vector<CodeTable> SmallTables() {
  std::vector<CodeTable> out;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) out.push_back(StandardTable({n - k, k}));
  }
  BinningSampler sampler({{2, 3}, 5, 4});
  for (int i = 0; i < 4; ++i) out.push_back(sampler.SampleAt(i));
  return out;
}

TEST(ChannelWeightsTest, Examples) {
  EXPECT_EQ(MakeChannelWeights(0.5, 3).gamma,
            (std::vector<double>{0.125, 0.125, 0.125, 0.125}));
  EXPECT_EQ(MakeChannelWeights(0.0, 4).gamma,
            (std::vector<double>{1, 0, 0, 0, 0}));
  EXPECT_EQ(MakeChannelWeights(1.0, 2).gamma, (std::vector<double>{0, 0, 1}));
  const std::vector<double> g = MakeChannelWeights(0.1, 2).gamma;
  EXPECT_NEAR(g[0], 0.81, 1e-15);
  EXPECT_NEAR(g[1], 0.09, 1e-15);
  EXPECT_NEAR(g[2], 0.01, 1e-15);
}

TEST(ChannelWeightsTest, WeightedSumIsOne) {
  for (int n = 1; n <= 24; ++n) {
    for (double p : {0.0, 0.01, 0.1, 0.3, 0.5, 0.77, 1.0}) {
      const ChannelWeights w = MakeChannelWeights(p, n);
      double total = 0.0;
      for (int eta = 0; eta <= n; ++eta) {
        EXPECT_GE(w.gamma[eta], 0.0);
        total += Binomial(n, eta).convert_to<double>() * w.gamma[eta];
      }
      EXPECT_NEAR(total, 1.0, 1e-12) << "n=" << n << " p=" << p;
    }
  }
}

TEST(ChannelWeightsTest, RejectsBadArguments) {
  EXPECT_THROW(MakeChannelWeights(-0.1, 3), UsageError);
  EXPECT_THROW(MakeChannelWeights(1.5, 3), UsageError);
  EXPECT_THROW(MakeChannelWeights(std::nan(""), 3), UsageError);
  EXPECT_THROW(MakeChannelWeights(0.1, 0), UsageError);
}

TEST(DistanceProfileTest, SmallestTable) {
  using Rows = std::vector<std::vector<std::uint32_t>>;
  EXPECT_EQ(ComputeDistanceProfile(D11(), Codeword::FromString("00")).rows,
            (Rows{{1, 0, 1}, {0, 2, 0}}));
  EXPECT_EQ(ComputeDistanceProfile(D11(), Codeword::FromString("01")).rows,
            (Rows{{0, 2, 0}, {1, 0, 1}}));
}

TEST(DistanceProfileTest, RowAndColumnSums) {
  for (const CodeTable& t : SmallTables()) {
    for (std::uint32_t z = 0; z < (1u << t.n()); ++z) {
      const DistanceProfile r = ComputeDistanceProfile(t, Codeword(z, t.n()));
      std::vector<std::uint64_t> columns(t.n() + 1, 0);
      for (const auto& row : r.rows) {
        EXPECT_EQ(std::accumulate(row.begin(), row.end(), 0u),
                  t.expected_bin_size());
        for (int j = 0; j <= t.n(); ++j) columns[j] += row[j];
      }
      for (int j = 0; j <= t.n(); ++j) {
        EXPECT_EQ(columns[j], testing::PascalBinomial(t.n(), j));
      }
    }
  }
}

TEST(DistanceProfileTest, RejectsInvalidTableAndWrongLength) {
  const CodeTable broken =
      CodeTable::FromStrings(1, 1, {{"00", "00"}, {"01", "10"}});
  EXPECT_THROW(ComputeDistanceProfile(broken, Codeword::FromString("00")),
               ValidationError);
  EXPECT_THROW(ComputeDistanceProfile(D11(), Codeword::FromString("000")),
               UsageError);
}

TEST(ConditionalEquivocationTest, Examples) {
  const Codeword z = Codeword::FromString("00");
  EXPECT_DOUBLE_EQ(ConditionalEquivocation(D11(), z, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(ConditionalEquivocation(D11(), z, 0.0), 0.0);
  // h2(0.82), frozen from the codeword-by-codeword oracle.
  EXPECT_NEAR(ConditionalEquivocation(D11(), z, 0.1), 0.6800770457282799,
              1e-14);
  EXPECT_NEAR(ConditionalEquivocation(D11(), z, 0.1),
              testing::DirectConditionalEquivocation(D11(), 0, 0.1), 1e-14);
}

TEST(BinPosteriorTest, NormalizedAndMatchesDirectSummation) {
  for (const CodeTable& t : SmallTables()) {
    for (double p : {0.03, 0.2, 0.5, 0.9}) {
      const ChannelWeights w = MakeChannelWeights(p, t.n());
      for (std::uint32_t z = 0; z < (1u << t.n()); ++z) {
        const std::vector<double> probs =
            BinPosterior(ComputeDistanceProfile(t, Codeword(z, t.n())), w);
        const std::vector<double> direct = testing::DirectPosterior(t, z, p);
        EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0,
                    1e-12);
        for (std::size_t i = 0; i < probs.size(); ++i) {
          EXPECT_NEAR(probs[i], direct[i], 1e-12);
        }
      }
    }
  }
}

TEST(EntropyTest, ZeroMassContributesNothing) {
  const double probs[] = {0.5, 0.0, 0.5};
  EXPECT_DOUBLE_EQ(Entropy(probs), 1.0);
}

TEST(TotalEquivocationTest, Endpoints) {
  for (const CodeTable& t : SmallTables()) {
    EXPECT_NEAR(TotalEquivocation(t, 0.5), t.k(), 1e-12);
    EXPECT_NEAR(TotalEquivocation(t, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(TotalEquivocation(t, 1.0), 0.0, 1e-12);
  }
}

TEST(TotalEquivocationTest, FrozenValues) {
  EXPECT_NEAR(TotalEquivocation(D11(), 0.1), 0.6800770457282799, 1e-14);
  EXPECT_NEAR(TotalEquivocation(StandardTable({1, 2}), 0.2), 1.759627536341357,
              1e-13);
  EXPECT_NEAR(TotalEquivocation(StandardTable({2, 2}), 0.3),
              1.9763493005902086, 1e-13);
  EXPECT_NEAR(EquivocationRate(StandardTable({1, 4}), 0.2), 0.6746919968329935,
              1e-13);
  EXPECT_NEAR(EquivocationRate(StandardTable({2, 3}), 0.2), 0.5393405113332279,
              1e-13);
}

TEST(TotalEquivocationTest, MatchesDirectAverage) {
  for (const CodeTable& t : SmallTables()) {
    for (double p : kGrid) {
      EXPECT_NEAR(TotalEquivocation(t, p),
                  testing::DirectTotalEquivocation(t, p), 1e-12);
    }
  }
}

TEST(TotalEquivocationTest, SymmetricInCrossoverProbability) {
  for (const CodeTable& t : SmallTables()) {
    for (double p : kGrid) {
      EXPECT_NEAR(TotalEquivocation(t, p), TotalEquivocation(t, 1.0 - p),
                  1e-12);
    }
  }
}

TEST(TotalEquivocationTest, BoundedByMessageBits) {
  for (const CodeTable& t : SmallTables()) {
    for (double p : kGrid) {
      const double h = TotalEquivocation(t, p);
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, t.k() + 1e-12);
    }
  }
}

TEST(TotalEquivocationTest, InvariantUnderTranslation) {
  std::mt19937 rng(3);
  for (const CodeTable& t : SmallTables()) {
    const Codeword z(rng() & ((1u << t.n()) - 1), t.n());
    for (double p : kGrid) {
      EXPECT_NEAR(TotalEquivocation(XorTranslate(t, z), p),
                  TotalEquivocation(t, p), 1e-12);
    }
  }
}

TEST(TotalEquivocationTest, CurveMatchesPointwise) {
  const CodeTable t = StandardTable({2, 3});
  const std::vector<double> curve = TotalEquivocationCurve(t, kGrid);
  for (std::size_t i = 0; i < kGrid.size(); ++i) {
    EXPECT_DOUBLE_EQ(curve[i], TotalEquivocation(t, kGrid[i]));
  }
}

TEST(TotalEquivocationTest, RejectsInvalidTable) {
  const CodeTable broken =
      CodeTable::FromStrings(1, 1, {{"00", "00"}, {"01", "10"}});
  EXPECT_THROW(TotalEquivocation(broken, 0.1), ValidationError);
}

TEST(TotalEquivocationLinearTest, AgreesOnLinearTables) {
  const CodeTable d12 = StandardTable({1, 2});
  EXPECT_NEAR(TotalEquivocationLinear(d12, 0.2), TotalEquivocation(d12, 0.2),
              1e-12);
  const CodeTable d22 = StandardTable({2, 2});
  EXPECT_NEAR(TotalEquivocationLinear(d22, 0.3), TotalEquivocation(d22, 0.3),
              1e-12);
}

TEST(TotalEquivocationLinearTest, RejectsNonLinearTable) {
  BinningSampler sampler({{1, 3}, 42, 1});
  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    try {
      TotalEquivocationLinear(sampler.SampleAt(i), 0.2);
    } catch (const NotLinearError&) {
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
  // At p = 0.5 every observation gives k bits, so non-linear tables pass.
  EXPECT_NEAR(TotalEquivocationLinear(sampler.SampleAt(0), 0.5), 3.0, 1e-12);
}

TEST(EquivocationRateTest, Examples) {
  EXPECT_DOUBLE_EQ(EquivocationRate(D11(), 0.5), 0.5);
  EXPECT_DOUBLE_EQ(EquivocationRate(D11(), 0.0), 0.0);
  const double rate = EquivocationRate(StandardTable({1, 4}), 0.2);
  EXPECT_GT(rate, 0.0);
  EXPECT_LE(rate, 0.8);
}

}  // namespace
}  // namespace wiretap
