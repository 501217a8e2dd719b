// Copyright 2026 The qcv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Numerical recovery of the Born measure as the unique context-invariant
 * point of the parametrized family. The unknowns are (b, mu, p0) with the
 * gauge a = 1 fixed (the contextual value depends only on b/a). The
 * stationarity conditions, which hold for all contexts, are replaced by a
 * sampled-context residual
 *
 *   sum_A [ spread_A(Ex) + spread_A(Var) ]
 *     + mean_C [ w_norm |sum_w P(w) - 1|^2 + w_real sum_w |Im P(w)|^2 ]
 *
 * which vanishes at the Born point (b = 0, mu = delta_0, p0 = 0) and is
 * positive elsewhere. A restart-capable downhill simplex minimizes it.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcv/hilbert.hpp"
#include "qcv/measure.hpp"
#include "qcv/nelder_mead.hpp"

namespace qcv {

/// The solver unknowns, packed as [Re b, Im b, mu_0..mu_{N-1}, p0].
struct SolverParams {
    Complex b{0.0, 0.0};
    Eigen::VectorXd mu;
    double p0 = 0.0;

    /// The Born point: b = 0, mu = delta_0, p0 = 0.
    static SolverParams born(Index dim);

    Eigen::VectorXd pack() const;
    static SolverParams unpack(const Eigen::VectorXd& x);

    Index dim() const { return mu.size(); }
};

struct SolverOptions {
    int max_iter = 60000;   // residual-descent iterations across restarts
    double tol = 1e-6;      // converged iff final residual < tol
    int n_contexts = 10;
    int n_observables = 5;  // counts the pre-state projector
    double w_norm = 1.0;
    double w_real = 1.0;
    int max_restarts = 40;  // fresh or local restarts within the budget
    /// Explicit start point; default is a seeded random draw in the box
    /// |b| <= 1, |mu_i| <= 2, |p0| <= 1.
    std::optional<SolverParams> start;
};

struct SolverResult {
    SolverParams final_params;
    /// Best residual after each accepted step; non-increasing.
    std::vector<double> residual_trajectory;
    bool converged = false;
    double distance_to_born = 0.0;
    double final_residual = 0.0;
    int iterations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
};

/**
 * The invariance-violation residual at a parameter point, evaluated with
 * the parametrized measure and CvParams(1, b) over the given observables
 * and contexts. A degenerate denominator anywhere makes the point
 * infeasible and the residual +infinity. Requires >= 2 contexts and >= 1
 * observable.
 */
double residual(const SolverParams& params, const StateVector& psi,
                const std::vector<Operator>& observables,
                const std::vector<Context>& contexts, double w_norm = 1.0,
                double w_real = 1.0, const Tolerances& tol = Tolerances{});

/**
 * Sup-norm distance to the Born point, with mu compared after enforcing
 * the measure normalization sum_w P(w) = 1 over the full basis (mu_0 is
 * fixed to 1 by that normalization, so the overall measure scale is
 * divided out first).
 */
double distance_to_born(const SolverParams& params);

/**
 * Draws psi, contexts and observables from the seed, minimizes the
 * residual from a random start, and reports the minimizer. Uniqueness of
 * the invariant measure means the minimizer is the Born point whenever the
 * descent converges. dim must lie in [2, 8]. Failure to converge is
 * reported through the flag, not thrown.
 */
SolverResult solve_uniqueness(Index dim, std::uint64_t seed,
                              const SolverOptions& opts = SolverOptions{},
                              const Tolerances& tol = Tolerances{});

}  // namespace qcv
