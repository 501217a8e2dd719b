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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "qcv/report.hpp"
#include "qcv/solver.hpp"

using namespace qcv;

namespace {

struct Draw {
    StateVector psi;
    std::vector<Operator> observables;
    std::vector<Context> contexts;
};

Draw make_draw(Index dim, std::uint64_t seed, int n_contexts = 10,
               int n_observables = 5) {
    Draw d{haar_random_state(dim, derive_seed(seed, 140)), {}, {}};
    d.observables.push_back(Operator::projector(d.psi));
    for (int j = 1; j < n_observables; ++j) {
        d.observables.push_back(random_hermitian(
            dim, derive_seed(seed, 141) + static_cast<std::uint64_t>(j)));
    }
    for (int i = 0; i < n_contexts; ++i) {
        d.contexts.push_back(haar_random_context(
            dim, derive_seed(seed, 142) + static_cast<std::uint64_t>(i)));
    }
    return d;
}

}  // namespace

TEST_CASE("params pack and unpack round trip", "[solver]") {
    SolverParams p;
    p.b = Complex(0.3, -0.7);
    p.mu = Eigen::Vector3d(1.0, -0.5, 0.25);
    p.p0 = 0.125;
    const SolverParams q = SolverParams::unpack(p.pack());
    REQUIRE(q.b == p.b);
    REQUIRE(q.mu == p.mu);
    REQUIRE(q.p0 == p.p0);
}

TEST_CASE("residual vanishes at the Born point", "[solver]") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Index dim = 2 + static_cast<Index>(seed % 3);
        const Draw d = make_draw(dim, seed);
        const double r = residual(SolverParams::born(dim), d.psi,
                                  d.observables, d.contexts);
        REQUIRE(r >= 0.0);
        REQUIRE(r < 1e-10);
    }
}

TEST_CASE("normalization penalty dominates a pure p0 shift", "[solver]") {
    const Index dim = 3;
    const Draw d = make_draw(dim, 4);
    SolverParams p = SolverParams::born(dim);
    p.p0 = 0.5;
    const double r = residual(p, d.psi, d.observables, d.contexts);
    // Every retained weight gains +0.5, so each context's total is off by
    // N' * 0.5 with N' = 3 in generic position.
    const double floor = std::pow(static_cast<double>(dim) * 0.5, 2.0);
    REQUIRE(r >= 0.999 * floor);
}

TEST_CASE("a nonzero b breaks invariance", "[solver]") {
    const Draw d = make_draw(3, 9);
    SolverParams p = SolverParams::born(3);
    p.b = Complex(0.3, 0.0);
    REQUIRE(residual(p, d.psi, d.observables, d.contexts) > 1e-6);
}

TEST_CASE("the Born point is a strict local minimum", "[solver]") {
    for (Index dim = 2; dim <= 4; ++dim) {
        const Draw d = make_draw(dim, static_cast<std::uint64_t>(dim) * 17);
        const double at_born = residual(SolverParams::born(dim), d.psi,
                                        d.observables, d.contexts);
        std::mt19937_64 rng(derive_seed(static_cast<std::uint64_t>(dim), 150));
        std::normal_distribution<double> gauss(0.0, 1.0);
        const Eigen::VectorXd born = SolverParams::born(dim).pack();
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXd direction(born.size());
            for (Index i = 0; i < born.size(); ++i) {
                direction(i) = gauss(rng);
            }
            direction.normalize();
            const SolverParams probe =
                SolverParams::unpack(born + 0.05 * direction);
            const double r = residual(probe, d.psi, d.observables, d.contexts);
            REQUIRE(r > at_born + 1e-8);
        }
    }
}

TEST_CASE("solver recovers the Born point from a random start", "[solver]") {
    const SolverResult result = solve_uniqueness(2, 7);
    REQUIRE(result.converged);
    REQUIRE(result.distance_to_born < 1e-4);
    // Trajectory is non-increasing at accepted steps.
    for (std::size_t i = 1; i < result.residual_trajectory.size(); ++i) {
        REQUIRE(result.residual_trajectory[i] <=
                result.residual_trajectory[i - 1]);
    }
}

TEST_CASE("solver started at the Born point converges immediately",
          "[solver]") {
    SolverOptions opts;
    opts.start = SolverParams::born(3);
    const SolverResult result = solve_uniqueness(3, 11, opts);
    REQUIRE(result.converged);
    REQUIRE(result.iterations == 0);
    REQUIRE(result.distance_to_born < 1e-12);
}

TEST_CASE("solver rejects out-of-range dimensions", "[solver]") {
    REQUIRE_THROWS_AS(solve_uniqueness(9, 1), InvalidArgumentError);
    REQUIRE_THROWS_AS(solve_uniqueness(1, 1), InvalidArgumentError);
}

TEST_CASE("solver results serialize deterministically", "[solver]") {
    SolverOptions opts;
    opts.max_iter = 2000;  // keep the unit test quick; no need to converge
    const SolverResult a = solve_uniqueness(2, 3, opts);
    const SolverResult b = solve_uniqueness(2, 3, opts);
    REQUIRE(report::dump(report::solver_result_to_json(a)) ==
            report::dump(report::solver_result_to_json(b)));
}
