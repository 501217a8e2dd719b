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

#include "qcv/scenarios.hpp"

#include <cmath>
#include <string>

#include "qcv/measure.hpp"

namespace qcv {

ZurekReport zurek_demo(const Tolerances& tol) {
    // System (x) environment with the ordering |s e> -> index 2*s + e.
    const Index dim = 4;
    Vector psi_raw = Vector::Zero(dim);
    psi_raw(0) = 1.0;  // |s1>|e1>
    psi_raw(3) = 1.0;  // |s2>|e2>
    const StateVector psi = StateVector::normalized(psi_raw, tol);

    // A (x) 1 with A = |s1><s1| - |s2><s2|.
    Matrix a = Matrix::Zero(dim, dim);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(2, 2) = -1.0;
    a(3, 3) = -1.0;
    const Operator a_op(a, tol);

    // Context extending {x1 = |s1>|e1>, x2 = |s2>|e2>}; the other two
    // basis states are orthogonal to psi and drop out of the sample space.
    const Matrix id = Matrix::Identity(dim, dim);
    Matrix columns(dim, dim);
    columns.col(0) = id.col(0);
    columns.col(1) = id.col(3);
    columns.col(2) = id.col(1);
    columns.col(3) = id.col(2);
    const Context context = Context::from_unitary(columns, "zurek", tol);

    ZurekReport report;
    report.weak_values[0] = weak_value(a_op, psi, context.state(0), tol);
    report.weak_values[1] = weak_value(a_op, psi, context.state(1), tol);

    const Measure born = evaluate_measure(MeasureSpec::born(), psi, context, tol);
    report.probabilities[0] = born.weights[0].real();
    report.probabilities[1] = born.weights[1].real();

    const Complex ex = expectation(a_op, psi, context, MeasureSpec::born(),
                                   CvParams::weak(), tol);
    report.swap_symmetry_residual = std::abs(ex);
    return report;
}

Trajectory heisenberg_trajectory(const Operator& h, const Operator& a_op,
                                 const StateVector& psi, double t_final,
                                 int steps, Index eigen_index,
                                 const Tolerances& tol) {
    if (!h.is_hermitian()) {
        throw NotHermitianError("heisenberg_trajectory requires Hermitian H");
    }
    if (!a_op.is_hermitian()) {
        throw NotHermitianError("heisenberg_trajectory requires Hermitian A");
    }
    if (steps < 1) {
        throw InvalidArgumentError("need at least one time step");
    }
    if (eigen_index < 0 || eigen_index >= a_op.dim()) {
        throw InvalidArgumentError("eigen_index out of range");
    }

    auto at_time = [&](double t) {
        // Heisenberg picture A(t) = U(t)^dag A U(t), U(t) = exp(-iHt).
        const Operator u = hermitian_evolution(h, t, PhaseSign::Negative, tol);
        return Operator(u.entries().adjoint() * a_op.entries() * u.entries(),
                        tol);
    };

    const Operator a_final = at_time(t_final);
    const HermitianEigensystem eigen = hermitian_eigensystem(a_final, tol);
    const StateVector post =
        StateVector::normalized(eigen.eigenvectors.col(eigen_index), tol);

    Trajectory trajectory;
    trajectory.endpoint_eigenvalue = eigen.eigenvalues(eigen_index);
    trajectory.times.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.values.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double t =
            t_final * static_cast<double>(k) / static_cast<double>(steps);
        trajectory.times.push_back(t);
        trajectory.values.push_back(weak_value(at_time(t), psi, post, tol));
    }
    trajectory.endpoint_residual =
        std::abs(trajectory.values.back() - trajectory.endpoint_eigenvalue);
    return trajectory;
}

}  // namespace qcv
