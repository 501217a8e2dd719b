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

#include "qcv/invariance.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcv {

Complex quantum_expectation(const Operator& a_op, const StateVector& psi) {
    if (a_op.dim() != psi.dim()) {
        throw DimensionMismatchError("quantum expectation between dimensions " +
                                     std::to_string(a_op.dim()) + " and " +
                                     std::to_string(psi.dim()));
    }
    return psi.amplitudes().dot(a_op.entries() * psi.amplitudes());
}

double max_pairwise_spread(std::span<const Complex> values) {
    double spread = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            spread = std::max(spread, std::abs(values[i] - values[j]));
        }
    }
    return spread;
}

double max_pairwise_spread(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    double lo = values[0];
    double hi = values[0];
    for (const double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

ScanReport invariance_scan(const Operator& a_op, const StateVector& psi,
                           const MeasureSpec& spec, const CvParams& p,
                           int n_contexts, std::uint64_t seed,
                           const Tolerances& tol, std::string observable_tag) {
    if (n_contexts < 2) {
        throw InvalidArgumentError(
            "an invariance scan needs at least 2 contexts, got " +
            std::to_string(n_contexts));
    }

    ScanReport report;
    report.observable_tag = std::move(observable_tag);
    report.n_contexts = n_contexts;
    report.seed = seed;
    report.quantum_reference = quantum_expectation(a_op, psi);
    report.ex_values.reserve(static_cast<std::size_t>(n_contexts));
    report.var_values.reserve(static_cast<std::size_t>(n_contexts));

    // Per-context seeds are seed + i so determinism does not depend on
    // evaluation order.
    for (int i = 0; i < n_contexts; ++i) {
        const Context context = haar_random_context(
            psi.dim(), seed + static_cast<std::uint64_t>(i), {}, tol);
        report.ex_values.push_back(
            expectation(a_op, psi, context, spec, p, tol));
        report.var_values.push_back(
            variance(a_op, psi, context, spec, p, tol));
    }

    report.ex_spread = max_pairwise_spread(std::span<const Complex>(
        report.ex_values.data(), report.ex_values.size()));
    report.var_spread = max_pairwise_spread(std::span<const double>(
        report.var_values.data(), report.var_values.size()));
    return report;
}

}  // namespace qcv
