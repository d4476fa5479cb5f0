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


// Dense two-phase primal simplex for small, heavily degenerate problems in
// standard form:
//
//   maximize c.x  subject to  A x = b,  x >= 0,  b >= 0.
//
// Entering and leaving variables follow Bland's smallest-index rule, so the
// pivot sequence is deterministic and cannot cycle. At termination the basis
// is re-factorized from the original data and the tableau rebuilt; pivoting
// resumes if the fresh reduced costs disagree with the accumulated ones.

#ifndef WIRETAP_SIMPLEX_H_
#define WIRETAP_SIMPLEX_H_

#include <cstddef>
#include <vector>

namespace wiretap {

struct StandardFormLp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Row-major rows x cols.
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct SimplexOptions {
  // Tableau entries at or below this magnitude are not used as pivots.
  double pivot_tolerance = 1e-10;
  // A column enters only if its reduced cost exceeds this.
  double cost_tolerance = 1e-11;
  // Phase 1 residual above this means the problem is infeasible.
  double feasibility_tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
  // Number of refactorize-and-resume rounds after the first optimum.
  int max_refinements = 4;
};

struct SimplexResult {
  std::vector<double> x;
  double objective = 0.0;
  // Basic column per constraint row; artificial columns never remain basic
  // unless the row is redundant, in which case the entry is cols + row.
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
};

// Throws UsageError on malformed input, NumericalError if the problem is
// infeasible or unbounded, the iteration guard trips, or a basis turns out
// singular during refactorization.
SimplexResult SolveSimplex(const StandardFormLp& lp,
                           const SimplexOptions& options = {});

// Solves the square system M y = r by Gaussian elimination with partial
// pivoting. Throws NumericalError if M is singular to working precision.
std::vector<double> SolveDense(std::vector<double> m, std::vector<double> r,
                               std::size_t size);

}  // namespace wiretap

#endif  // WIRETAP_SIMPLEX_H_
