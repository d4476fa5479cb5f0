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


#include "wiretap/simplex.h"

#include <cmath>
#include <string>
#include <utility>

#include "wiretap/errors.h"

namespace wiretap {
namespace {

// Pivots between rebuilds of the tableau from the original data. Drift in
// degenerate rows otherwise lets Bland's rule cycle in floating point.
constexpr std::size_t kRefactorInterval = 16;

class Tableau {
 public:
  Tableau(const StandardFormLp& lp, const SimplexOptions& options)
      : lp_(lp),
        options_(options),
        m_(lp.rows),
        width_(lp.cols + lp.rows),
        t_(m_ * width_, 0.0),
        rhs_(lp.b),
        basis_(m_),
        d_(width_, 0.0),
        cost_(width_, 0.0) {
    for (std::size_t i = 0; i < m_; ++i) {
      // Rows with negative right-hand side are negated so the artificial
      // basis starts feasible.
      const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < lp.cols; ++j) {
        t_[i * width_ + j] = sign * lp.at(i, j);
      }
      t_[i * width_ + lp.cols + i] = 1.0;
      rhs_[i] = sign * lp.b[i];
      basis_[i] = lp.cols + i;
      sign_.push_back(sign);
    }
  }

  void PhaseOne() {
    for (std::size_t j = 0; j < width_; ++j) {
      cost_[j] = j < lp_.cols ? 0.0 : -1.0;
    }
    ComputeReducedCosts();
    Iterate(width_);
    double residual = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= lp_.cols) residual += rhs_[i];
    }
    if (residual > options_.feasibility_tolerance) {
      throw NumericalError("linear program is infeasible (phase 1 residual " +
                           std::to_string(residual) + ")");
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < lp_.cols) continue;
      for (std::size_t j = 0; j < lp_.cols; ++j) {
        if (std::abs(t_[i * width_ + j]) > options_.pivot_tolerance) {
          Pivot(i, j);
          break;
        }
      }
    }
  }

  void PhaseTwo() {
    for (std::size_t j = 0; j < width_; ++j) {
      cost_[j] = j < lp_.cols ? lp_.c[j] : 0.0;
    }
    ComputeReducedCosts();
    Iterate(lp_.cols);
    for (int round = 0; round < options_.max_refinements; ++round) {
      Refactorize();
      ComputeReducedCosts();
      if (Iterate(lp_.cols) == 0) return;
    }
  }

  SimplexResult Result() const {
    SimplexResult result;
    result.x.assign(lp_.cols, 0.0);
    result.basis = basis_;
    result.iterations = iterations_;
    // x_B from a fresh solve against the original data.
    std::vector<double> bm(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t r = 0; r < m_; ++r) bm[r * m_ + i] = Column(basis_[i], r);
    }
    std::vector<double> xb = SolveDense(std::move(bm), SignedRhs(), m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= lp_.cols) continue;
      double v = xb[i];
      if (v < 0.0) {
        if (v < -options_.feasibility_tolerance) {
          throw NumericalError("refined basic solution is infeasible");
        }
        v = 0.0;
      }
      result.x[basis_[i]] = v;
    }
    for (std::size_t j = 0; j < lp_.cols; ++j) {
      result.objective += lp_.c[j] * result.x[j];
    }
    return result;
  }

 private:
  // Entry r of column j of the sign-adjusted original matrix [A | I].
  double Column(std::size_t j, std::size_t r) const {
    if (j < lp_.cols) return sign_[r] * lp_.at(r, j);
    return j - lp_.cols == r ? 1.0 : 0.0;
  }

  std::vector<double> SignedRhs() const {
    std::vector<double> b(m_);
    for (std::size_t i = 0; i < m_; ++i) b[i] = sign_[i] * lp_.b[i];
    return b;
  }

  void ComputeReducedCosts() {
    for (std::size_t j = 0; j < width_; ++j) {
      double z = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        z += cost_[basis_[i]] * t_[i * width_ + j];
      }
      d_[j] = cost_[j] - z;
    }
  }

  // Pivots until no column below `limit` has a positive reduced cost.
  // Returns the number of pivots performed.
  std::size_t Iterate(std::size_t limit) {
    std::size_t pivots = 0;
    while (true) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (d_[j] > options_.cost_tolerance) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return pivots;

      std::size_t leaving = m_;
      double best = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = t_[i * width_ + entering];
        if (a <= options_.pivot_tolerance) continue;
        const double ratio = rhs_[i] / a;
        if (leaving == m_ || ratio < best - 1e-12 * (1.0 + std::abs(best))) {
          leaving = i;
          best = ratio;
        } else if (std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best)) &&
                   basis_[i] < basis_[leaving]) {
          leaving = i;
        }
      }
      if (leaving == m_) throw NumericalError("linear program is unbounded");
      Pivot(leaving, entering);
      if (++since_refactor_ >= kRefactorInterval) {
        Refactorize();
        ComputeReducedCosts();
        since_refactor_ = 0;
      }
      ++pivots;
      if (++iterations_ > options_.max_iterations) {
        throw NumericalError("simplex iteration limit reached");
      }
    }
  }

  void Pivot(std::size_t r, std::size_t j) {
    double* row = &t_[r * width_];
    const double inv = 1.0 / row[j];
    for (std::size_t c = 0; c < width_; ++c) row[c] *= inv;
    rhs_[r] *= inv;
    row[j] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* other = &t_[i * width_];
      const double factor = other[j];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) other[c] -= factor * row[c];
      other[j] = 0.0;
      rhs_[i] -= factor * rhs_[r];
      // Degenerate rows must stay exactly zero; otherwise rounding noise
      // breaks ratio-test ties and Bland's rule can cycle.
      if (std::abs(rhs_[i]) < options_.feasibility_tolerance) rhs_[i] = 0.0;
    }
    const double factor = d_[j];
    if (factor != 0.0) {
      for (std::size_t c = 0; c < width_; ++c) d_[c] -= factor * row[c];
      d_[j] = 0.0;
    }
    basis_[r] = j;
  }

  // Rebuilds the tableau as B^-1 [A | I] from the original data.
  void Refactorize() {
    // Gauss-Jordan on [B | [A I] | b] with partial pivoting.
    const std::size_t aug = width_ + 1;
    std::vector<double> bm(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t r = 0; r < m_; ++r) bm[r * m_ + i] = Column(basis_[i], r);
    }
    std::vector<double> rest(m_ * aug);
    const std::vector<double> b = SignedRhs();
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < width_; ++c) rest[r * aug + c] = Column(c, r);
      rest[r * aug + width_] = b[r];
    }
    for (std::size_t col = 0; col < m_; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < m_; ++r) {
        if (std::abs(bm[r * m_ + col]) > std::abs(bm[pivot * m_ + col])) {
          pivot = r;
        }
      }
      if (std::abs(bm[pivot * m_ + col]) < 1e-12) {
        throw NumericalError("basis matrix is singular");
      }
      if (pivot != col) {
        for (std::size_t c = 0; c < m_; ++c) {
          std::swap(bm[pivot * m_ + c], bm[col * m_ + c]);
        }
        for (std::size_t c = 0; c < aug; ++c) {
          std::swap(rest[pivot * aug + c], rest[col * aug + c]);
        }
      }
      const double inv = 1.0 / bm[col * m_ + col];
      for (std::size_t c = 0; c < m_; ++c) bm[col * m_ + c] *= inv;
      for (std::size_t c = 0; c < aug; ++c) rest[col * aug + c] *= inv;
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == col) continue;
        const double factor = bm[r * m_ + col];
        if (factor == 0.0) continue;
        for (std::size_t c = 0; c < m_; ++c) {
          bm[r * m_ + c] -= factor * bm[col * m_ + c];
        }
        for (std::size_t c = 0; c < aug; ++c) {
          rest[r * aug + c] -= factor * rest[col * aug + c];
        }
      }
    }
    // Row i of the reduced system now corresponds to basis_[i].
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t c = 0; c < width_; ++c) {
        t_[i * width_ + c] = rest[i * aug + c];
      }
      t_[i * width_ + basis_[i]] = 1.0;
      double v = rest[i * aug + width_];
      if (std::abs(v) < options_.feasibility_tolerance) v = 0.0;
      rhs_[i] = v;
    }
  }

  const StandardFormLp& lp_;
  const SimplexOptions& options_;
  std::size_t m_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<double> d_;
  std::vector<double> cost_;
  std::vector<double> sign_;
  std::size_t iterations_ = 0;
  std::size_t since_refactor_ = 0;
};

}  // namespace

std::vector<double> SolveDense(std::vector<double> m, std::vector<double> r,
                               std::size_t size) {
  if (m.size() != size * size || r.size() != size) {
    throw UsageError("dense system dimensions do not match");
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < size; ++i) {
      if (std::abs(m[i * size + col]) > std::abs(m[pivot * size + col])) {
        pivot = i;
      }
    }
    if (std::abs(m[pivot * size + col]) < 1e-12) {
      throw NumericalError("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < size; ++c) {
        std::swap(m[pivot * size + c], m[col * size + c]);
      }
      std::swap(r[pivot], r[col]);
    }
    for (std::size_t i = col + 1; i < size; ++i) {
      const double factor = m[i * size + col] / m[col * size + col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < size; ++c) {
        m[i * size + c] -= factor * m[col * size + c];
      }
      r[i] -= factor * r[col];
    }
  }
  std::vector<double> y(size, 0.0);
  for (std::size_t i = size; i-- > 0;) {
    double s = r[i];
    for (std::size_t c = i + 1; c < size; ++c) s -= m[i * size + c] * y[c];
    y[i] = s / m[i * size + i];
  }
  return y;
}

SimplexResult SolveSimplex(const StandardFormLp& lp,
                           const SimplexOptions& options) {
  if (lp.rows == 0 || lp.cols == 0 || lp.a.size() != lp.rows * lp.cols ||
      lp.b.size() != lp.rows || lp.c.size() != lp.cols) {
    throw UsageError("linear program dimensions do not match");
  }
  Tableau tableau(lp, options);
  tableau.PhaseOne();
  tableau.PhaseTwo();
  return tableau.Result();
}

}  // namespace wiretap
