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

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qcv {

// Downhill simplex in low dimension. Derivative-free on purpose: the
// objectives it is used on contain max() terms and are not smooth.

struct NelderMeadOptions {
    int max_iter = 10000;
    double f_target = 0.0;    // stop once best value drops below this
    double f_tol = 1e-14;     // simplex value-range stop
    double x_tol = 1e-13;     // simplex diameter stop
    double init_step = 0.25;  // initial simplex edge along each axis
    double alpha = 1.0;       // reflection
    double gamma = 2.0;       // expansion
    double rho = 0.5;         // contraction
    double sigma = 0.5;       // shrink
};

struct NelderMeadResult {
    Eigen::VectorXd best;
    double f_best = 0.0;
    int iterations = 0;
    /// Best objective value after each iteration; non-increasing.
    std::vector<double> trajectory;
};

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const NelderMeadOptions& opts = {});

}  // namespace qcv
