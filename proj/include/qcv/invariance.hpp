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
 * Context-invariance scans: sample Haar-random contexts, evaluate Ex and
 * Var under a measure spec, and quantify how much they depend on the
 * choice of context. The spread metric is the max pairwise absolute
 * difference (a sup-norm over sampled contexts), insensitive to the number
 * of contexts.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcv/measure.hpp"

namespace qcv {

/// Aggregated invariance statistics across sampled contexts.
struct ScanReport {
    std::string observable_tag;
    int n_contexts = 0;
    std::vector<Complex> ex_values;
    std::vector<double> var_values;
    double ex_spread = 0.0;   // max pairwise |Ex_i - Ex_j|
    double var_spread = 0.0;  // max pairwise |Var_i - Var_j|
    Complex quantum_reference{0.0, 0.0};  // <psi|A|psi>
    std::uint64_t seed = 0;
};

/// The standard quantum expectation <psi|A|psi>.
Complex quantum_expectation(const Operator& a_op, const StateVector& psi);

/// Max pairwise distance of a complex point set (its diameter).
double max_pairwise_spread(std::span<const Complex> values);
double max_pairwise_spread(std::span<const double> values);

/**
 * Draws n_contexts Haar contexts deterministically (context i uses seed +
 * i) and fills a ScanReport. Under the Born measure with b = 0, both
 * spreads stay below 1e-10 and every Ex equals <psi|A|psi>. Requires
 * n_contexts >= 2.
 */
ScanReport invariance_scan(const Operator& a_op, const StateVector& psi,
                           const MeasureSpec& spec, const CvParams& p,
                           int n_contexts, std::uint64_t seed,
                           const Tolerances& tol = Tolerances{},
                           std::string observable_tag = "A");

}  // namespace qcv
