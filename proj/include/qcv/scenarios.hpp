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
 * Two worked settings as runnable demonstrations: the Zurek envariance
 * example (an entangled two-qubit state whose SWAP symmetry forces equal
 * probabilities) and the Heisenberg-picture weak-value trajectory, whose
 * endpoint coincides with the eigenvalue selected by the projective
 * measurement.
 */

#pragma once

#include <array>
#include <vector>

#include "qcv/contextual.hpp"
#include "qcv/hilbert.hpp"

namespace qcv {

/// Outcome of the envariance demonstration.
struct ZurekReport {
    std::array<Complex, 2> weak_values{};   // at x1 = |s1 e1>, x2 = |s2 e2>
    std::array<double, 2> probabilities{};  // Born weights at x1, x2
    double swap_symmetry_residual = 0.0;    // |Ex(A (x) 1)|, zero by symmetry
};

/**
 * Builds |psi> = (|s1>|e1> + |s2>|e2>)/sqrt(2), the observable
 * A (x) 1 with A = |s1><s1| - |s2><s2|, and a context extending
 * {|s1>|e1>, |s2>|e2>}; reports the weak values (+1, -1), the Born
 * probabilities (1/2, 1/2) and the SWAP-symmetry residual.
 */
ZurekReport zurek_demo(const Tolerances& tol = Tolerances{});

/// Weak values of A(t) along a uniform time grid, post-selected on an
/// eigenstate of A(T).
struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> values;
    double endpoint_eigenvalue = 0.0;
    double endpoint_residual = 0.0;  // |values.back() - eigenvalue|
};

/**
 * Heisenberg picture A(t) = U(t)^dag A U(t) with U(t) = exp(-iHt). The
 * post-selected state is the eigen_index-th eigenvector of A(T) in the
 * deterministic eigensystem order; it must not be orthogonal to psi
 * (DegenerateDenominatorError suggests picking a different index). The
 * grid has steps + 1 points covering [0, T]; values depend only on t, not
 * on the grid.
 */
Trajectory heisenberg_trajectory(const Operator& h, const Operator& a_op,
                                 const StateVector& psi, double t_final,
                                 int steps, Index eigen_index,
                                 const Tolerances& tol = Tolerances{});

}  // namespace qcv
