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

#include "qcv/measure.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcv {

MeasureSpec MeasureSpec::born() { return MeasureSpec(MeasureKind::Born); }

MeasureSpec MeasureSpec::quartic() { return MeasureSpec(MeasureKind::Quartic); }

MeasureSpec MeasureSpec::parametrized(std::vector<double> mu, double p0,
                                      Context reference_basis) {
    if (static_cast<Index>(mu.size()) != reference_basis.dim()) {
        throw DimensionMismatchError(
            "parametrized measure needs one mu per reference vector, got " +
            std::to_string(mu.size()) + " for dimension " +
            std::to_string(reference_basis.dim()));
    }
    MeasureSpec spec(MeasureKind::Parametrized);
    spec.mu_ = std::move(mu);
    spec.p0_ = p0;
    spec.reference_ = std::move(reference_basis);
    return spec;
}

const Context& MeasureSpec::reference_basis() const {
    if (!reference_.has_value()) {
        throw InvalidArgumentError(
            "only parametrized measures carry a reference basis");
    }
    return *reference_;
}

Measure evaluate_measure(const MeasureSpec& spec, const StateVector& psi,
                         const Context& context, const Tolerances& tol) {
    if (psi.dim() != context.dim()) {
        throw DimensionMismatchError("measure evaluation between dimensions " +
                                     std::to_string(psi.dim()) + " and " +
                                     std::to_string(context.dim()));
    }

    Measure out;
    out.retained = retained_indices(psi, context, tol);
    out.weights.reserve(out.retained.size());

    if (spec.kind() == MeasureKind::Parametrized) {
        const Context& reference = spec.reference_basis();
        if (reference.dim() != psi.dim()) {
            throw DimensionMismatchError(
                "parametrized reference basis has dimension " +
                std::to_string(reference.dim()) + ", psi has " +
                std::to_string(psi.dim()));
        }
        // The family is anchored on psi_0 = psi.
        if (std::abs(inner(reference.state(0), psi) - Complex(1.0, 0.0)) >=
            tol.norm) {
            throw InvalidArgumentError(
                "parametrized measure requires psi as the first reference "
                "vector");
        }
    }

    for (const Index i : out.retained) {
        const Complex overlap = inner(context.state(i), psi);  // <w|psi>
        Complex weight;
        switch (spec.kind()) {
            case MeasureKind::Born:
                weight = Complex(std::norm(overlap), 0.0);
                break;
            case MeasureKind::Quartic: {
                const double p2 = std::norm(overlap);
                weight = Complex(p2 * p2, 0.0);
                break;
            }
            case MeasureKind::Parametrized: {
                const Context& reference = spec.reference_basis();
                Complex sum(0.0, 0.0);
                for (Index k = 0; k < reference.dim(); ++k) {
                    // mu_k <psi_k|w><w|psi>
                    sum += spec.mu()[static_cast<std::size_t>(k)] *
                           inner(reference.state(k), context.state(i)) *
                           overlap;
                }
                weight = sum + spec.p0();
                break;
            }
        }
        out.weights.push_back(weight);
        out.validity.total += weight;
        if (std::abs(weight.imag()) > tol.reality) {
            out.validity.all_real = false;
            out.validity.all_nonneg = false;
        } else if (weight.real() < 0.0) {
            out.validity.all_nonneg = false;
        }
    }
    return out;
}

Complex expectation(const Operator& a_op, const StateVector& psi,
                    const Context& context, const MeasureSpec& spec,
                    const CvParams& p, const Tolerances& tol) {
    const Measure measure = evaluate_measure(spec, psi, context, tol);
    Complex sum(0.0, 0.0);
    for (std::size_t k = 0; k < measure.retained.size(); ++k) {
        const StateVector& omega = context.state(measure.retained[k]);
        sum += measure.weights[k] * contextual_value(a_op, psi, omega, p, tol);
    }
    return sum;
}

double variance(const Operator& a_op, const StateVector& psi,
                const Context& context, const MeasureSpec& spec,
                const CvParams& p, const Tolerances& tol,
                VarianceDiagnostics* diagnostics) {
    const Measure measure = evaluate_measure(spec, psi, context, tol);
    std::vector<Complex> values;
    values.reserve(measure.retained.size());
    Complex ex(0.0, 0.0);
    for (std::size_t k = 0; k < measure.retained.size(); ++k) {
        const StateVector& omega = context.state(measure.retained[k]);
        values.push_back(contextual_value(a_op, psi, omega, p, tol));
        ex += measure.weights[k] * values[k];
    }
    Complex sum(0.0, 0.0);
    for (std::size_t k = 0; k < values.size(); ++k) {
        sum += measure.weights[k] * std::norm(values[k] - ex);
    }
    if (diagnostics != nullptr) {
        diagnostics->imaginary_magnitude = std::abs(sum.imag());
    }
    return sum.real();
}

}  // namespace qcv
