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
 * Contextual values of observables under pre-selection |psi> and
 * post-selection |w>: the general two-parameter form
 *
 *   lambda_w(A) = (a <w|A|psi> + b <psi|A|w>) / (a <w|psi> + b <psi|w>),
 *
 * its b = 0 specialization (the weak value <w|A|psi>/<w|psi>), and
 * executable checks of the sum rule, the product rule on a context's
 * diagonal subalgebra, and the initial conditions.
 *
 * Values are returned as full complex numbers; no real-part truncation.
 * The transverse W_w term anticommuting with |w><w| is implicitly zero
 * here: the rank-two parametrization a|psi><w| + b|w><psi| is taken as the
 * starting point.
 */

#pragma once

#include <vector>

#include "qcv/hilbert.hpp"

namespace qcv {

/// The (a, b) coefficients of the contextual-value form; not both zero.
struct CvParams {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    CvParams() = default;
    CvParams(Complex a_coeff, Complex b_coeff);

    /// The weak-value gauge (a, b) = (1, 0).
    static CvParams weak() { return CvParams{}; }
};

/// The operator W_w = a|psi><w| + b|w><psi|.
Operator w_operator(const StateVector& psi, const StateVector& omega,
                    const CvParams& p);

/**
 * The general contextual value lambda_w(A). Throws
 * DegenerateDenominatorError when |a<w|psi> + b<psi|w>| is at or below the
 * overlap cutoff, which signals that w lies outside the sample space (or
 * that a and b conspire to cancel).
 */
Complex contextual_value(const Operator& a_op, const StateVector& psi,
                         const StateVector& omega, const CvParams& p,
                         const Tolerances& tol = Tolerances{});

/// The weak value <w|A|psi>/<w|psi>; equal to contextual_value with
/// (a, b) = (1, 0).
Complex weak_value(const Operator& a_op, const StateVector& psi,
                   const StateVector& omega,
                   const Tolerances& tol = Tolerances{});

/// Sum-rule residual |lambda(A+B) - lambda(A) - lambda(B)|. Linearity is
/// exact in the formula, so this stays at rounding level for any operands.
double check_sum_rule(const Operator& a_op, const Operator& b_op,
                      const StateVector& psi, const StateVector& omega,
                      const CvParams& p, const Tolerances& tol = Tolerances{});

/// True when the operator commutes with every |w><w| of the context, i.e.
/// its matrix in the context basis is diagonal to the `diagonality`
/// tolerance.
bool diagonal_in_context(const Operator& op, const Context& context,
                         const Tolerances& tol = Tolerances{});

/**
 * Product-rule residual |lambda(TS) - lambda(T) lambda(S)| at the indexed
 * context state. T and S must be diagonal in the context
 * (NotInSubalgebraError otherwise). The residual vanishes for b = 0 and is
 * reported as-is for b != 0, where it is generically nonzero.
 */
double check_product_rule(const Operator& t_op, const Operator& s_op,
                          const Context& context, const StateVector& psi,
                          Index omega_index, const CvParams& p,
                          const Tolerances& tol = Tolerances{});

/// Indices of the context states with |<w|psi>| above the overlap cutoff:
/// the sample space for this (psi, context) pair. Measure and contextual
/// evaluation share this computation.
std::vector<Index> retained_indices(const StateVector& psi,
                                    const Context& context,
                                    const Tolerances& tol = Tolerances{});

/// A context index left out of the sample space, with the overlap
/// magnitude that fell below the cutoff.
struct ExcludedIndex {
    Index index = 0;
    double overlap = 0.0;
};

/// Contextual values over the sample space of one (psi, context) pair.
struct ContextualAssignment {
    Context context;
    StateVector pre_state;
    std::vector<Complex> values;  // parallel to `retained`
    std::vector<Index> retained;
    std::vector<ExcludedIndex> excluded;
};

/// Evaluates lambda_w(A) for every retained w; exclusion is recorded, not
/// an error.
ContextualAssignment assignment(const Operator& a_op, const StateVector& psi,
                                const Context& context, const CvParams& p,
                                const Tolerances& tol = Tolerances{});

}  // namespace qcv
