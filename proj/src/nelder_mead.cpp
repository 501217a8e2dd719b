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

#include "qcv/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcv {

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const NelderMeadOptions& opts) {
    const Eigen::Index n = start.size();
    const std::size_t n_vertices = static_cast<std::size_t>(n) + 1;

    std::vector<Eigen::VectorXd> x(n_vertices, start);
    std::vector<double> f(n_vertices);
    for (std::size_t v = 1; v < n_vertices; ++v) {
        x[v](static_cast<Eigen::Index>(v) - 1) += opts.init_step;
    }
    for (std::size_t v = 0; v < n_vertices; ++v) {
        f[v] = objective(x[v]);
    }

    std::vector<std::size_t> order(n_vertices);
    auto sort_order = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    };

    NelderMeadResult result;
    result.trajectory.reserve(64);

    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        sort_order();
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n_vertices - 2];

        result.trajectory.push_back(f[best]);
        if (f[best] <= opts.f_target) {
            break;
        }
        if (f[worst] - f[best] <= opts.f_tol) {
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t v = 0; v < n_vertices; ++v) {
            if (v != worst) {
                centroid += x[v];
            }
        }
        centroid /= static_cast<double>(n);

        double diameter = 0.0;
        for (std::size_t v = 0; v < n_vertices; ++v) {
            diameter = std::max(diameter, (x[v] - x[best]).norm());
        }
        if (diameter <= opts.x_tol) {
            break;
        }

        const Eigen::VectorXd reflected =
            centroid + opts.alpha * (centroid - x[worst]);
        const double f_reflected = objective(reflected);

        if (f_reflected < f[best]) {
            const Eigen::VectorXd expanded =
                centroid + opts.gamma * (reflected - centroid);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                x[worst] = expanded;
                f[worst] = f_expanded;
            } else {
                x[worst] = reflected;
                f[worst] = f_reflected;
            }
        } else if (f_reflected < f[second_worst]) {
            x[worst] = reflected;
            f[worst] = f_reflected;
        } else {
            const bool outside = f_reflected < f[worst];
            const Eigen::VectorXd contracted =
                outside ? centroid + opts.rho * (reflected - centroid)
                        : centroid + opts.rho * (x[worst] - centroid);
            const double f_contracted = objective(contracted);
            if (f_contracted < (outside ? f_reflected : f[worst])) {
                x[worst] = contracted;
                f[worst] = f_contracted;
            } else {
                for (std::size_t v = 0; v < n_vertices; ++v) {
                    if (v == best) {
                        continue;
                    }
                    x[v] = x[best] + opts.sigma * (x[v] - x[best]);
                    f[v] = objective(x[v]);
                }
            }
        }
    }

    sort_order();
    result.best = x[order.front()];
    result.f_best = f[order.front()];
    result.iterations = iter;
    if (result.trajectory.empty() || result.trajectory.back() > result.f_best) {
        result.trajectory.push_back(result.f_best);
    }
    return result;
}

}  // namespace qcv
