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
 * Candidate probability measures over a context and the statistical
 * functionals built from contextual values:
 *
 *   Ex(A)  = sum_w P(w) lambda_w(A)
 *   Var(A) = sum_w P(w) |lambda_w(A) - Ex(A)|^2
 *
 * Three measure families are supported: Born |<w|psi>|^2, the quartic
 * counterexample |<w|psi>|^4, and the parametrized family
 * sum_i mu_i <psi_i|w><w|psi> + p0 from which the solver recovers the Born
 * point. Parametrized weights may be complex or negative during
 * exploration; they are represented honestly with validity flags rather
 * than clamped.
 */

#pragma once

#include <optional>
#include <vector>

#include "qcv/contextual.hpp"
#include "qcv/hilbert.hpp"

namespace qcv {

enum class MeasureKind { Born, Quartic, Parametrized };

/// Specification of a measure family over contexts.
class MeasureSpec {
  public:
    static MeasureSpec born();
    static MeasureSpec quartic();
    /// Requires a reference basis {psi_i} whose first vector is the
    /// pre-selected state; checked at evaluation time.
    static MeasureSpec parametrized(std::vector<double> mu, double p0,
                                    Context reference_basis);

    MeasureKind kind() const { return kind_; }
    const std::vector<double>& mu() const { return mu_; }
    double p0() const { return p0_; }
    const Context& reference_basis() const;

  private:
    explicit MeasureSpec(MeasureKind kind) : kind_(kind) {}

    MeasureKind kind_;
    std::vector<double> mu_;
    double p0_ = 0.0;
    std::optional<Context> reference_;
};

/// Diagnostic flags for an evaluated measure.
struct MeasureValidity {
    bool all_real = true;
    bool all_nonneg = true;
    Complex total{0.0, 0.0};
};

/// Weights over the retained sample space of one (psi, context) pair.
struct Measure {
    std::vector<Index> retained;
    std::vector<Complex> weights;  // parallel to `retained`
    MeasureValidity validity;
};

/// Evaluates the measure on the retained indices shared with contextual
/// evaluation.
Measure evaluate_measure(const MeasureSpec& spec, const StateVector& psi,
                         const Context& context,
                         const Tolerances& tol = Tolerances{});

/// Ex(A): measure-weighted sum of contextual values over the sample space.
Complex expectation(const Operator& a_op, const StateVector& psi,
                    const Context& context, const MeasureSpec& spec,
                    const CvParams& p, const Tolerances& tol = Tolerances{});

/// Magnitude of the imaginary part discarded when a non-real measure makes
/// the variance sum complex.
struct VarianceDiagnostics {
    double imaginary_magnitude = 0.0;
};

/// Var(A) as the real part of sum_w P(w)|lambda_w(A) - Ex(A)|^2; any
/// imaginary leakage from a non-real measure is reported in `diagnostics`.
double variance(const Operator& a_op, const StateVector& psi,
                const Context& context, const MeasureSpec& spec,
                const CvParams& p, const Tolerances& tol = Tolerances{},
                VarianceDiagnostics* diagnostics = nullptr);

}  // namespace qcv
