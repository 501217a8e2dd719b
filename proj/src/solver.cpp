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

#include "qcv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "qcv/invariance.hpp"

namespace qcv {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Overlap data for one context, fixed across parameter points: the solver
// re-evaluates the residual thousands of times against the same draws, so
// everything that does not depend on (b, mu, p0) is computed once.
struct ContextData {
    std::vector<Index> retained;
    Vector overlaps;            // o_i = <w_i|psi>, retained only
    Matrix reference_overlaps;  // r(k, i) = <psi_k|w_i>, retained only
    // Per observable: numerator brackets <w_i|A|psi> and <psi|A|w_i>.
    std::vector<Vector> bra_a_ket;
    std::vector<Vector> ket_a_bra;
};

class ResidualEvaluator {
  public:
    ResidualEvaluator(const StateVector& psi,
                      const std::vector<Operator>& observables,
                      const std::vector<Context>& contexts, double w_norm,
                      double w_real, const Tolerances& tol)
        : n_observables_(observables.size()),
          w_norm_(w_norm),
          w_real_(w_real),
          cutoff_(tol.overlap_cutoff) {
        if (contexts.size() < 2) {
            throw InvalidArgumentError(
                "the residual needs at least 2 contexts");
        }
        if (observables.empty()) {
            throw InvalidArgumentError(
                "the residual needs at least 1 observable");
        }
        const Index dim = psi.dim();
        for (const auto& a : observables) {
            if (a.dim() != dim) {
                throw DimensionMismatchError(
                    "observable dimension does not match psi");
            }
        }
        const Context reference = orthonormal_completion(psi);

        for (const auto& context : contexts) {
            if (context.dim() != dim) {
                throw DimensionMismatchError(
                    "context dimension does not match psi");
            }
            ContextData data;
            data.retained = retained_indices(psi, context, tol);
            const auto n_ret = static_cast<Index>(data.retained.size());
            data.overlaps.resize(n_ret);
            data.reference_overlaps.resize(dim, n_ret);
            for (Index k = 0; k < n_ret; ++k) {
                const StateVector& omega =
                    context.state(data.retained[static_cast<std::size_t>(k)]);
                data.overlaps(k) = inner(omega, psi);
                for (Index r = 0; r < dim; ++r) {
                    data.reference_overlaps(r, k) =
                        inner(reference.state(r), omega);
                }
            }
            for (const auto& a : observables) {
                const Vector a_psi = a.entries() * psi.amplitudes();
                const Vector adj_psi = a.entries().adjoint() * psi.amplitudes();
                Vector bra(n_ret);
                Vector ket(n_ret);
                for (Index k = 0; k < n_ret; ++k) {
                    const StateVector& omega = context.state(
                        data.retained[static_cast<std::size_t>(k)]);
                    bra(k) = omega.amplitudes().dot(a_psi);
                    ket(k) = std::conj(omega.amplitudes().dot(adj_psi));
                }
                data.bra_a_ket.push_back(std::move(bra));
                data.ket_a_bra.push_back(std::move(ket));
            }
            contexts_.push_back(std::move(data));
        }
    }

    double evaluate(const SolverParams& params) const {
        const Complex b = params.b;
        const std::size_t n_ctx = contexts_.size();

        std::vector<std::vector<Complex>> ex(n_observables_);
        std::vector<std::vector<double>> var(n_observables_);
        double penalty = 0.0;

        for (const ContextData& data : contexts_) {
            const Index n_ret = data.overlaps.size();

            // Measure weights: (mu^T r)_i o_i + p0.
            Vector weights(n_ret);
            Complex total(0.0, 0.0);
            double imag_sq = 0.0;
            for (Index k = 0; k < n_ret; ++k) {
                Complex sum(0.0, 0.0);
                for (Index r = 0; r < params.mu.size(); ++r) {
                    sum += params.mu(r) * data.reference_overlaps(r, k);
                }
                const Complex w = sum * data.overlaps(k) + params.p0;
                weights(k) = w;
                total += w;
                imag_sq += w.imag() * w.imag();
            }
            penalty += w_norm_ * std::norm(total - Complex(1.0, 0.0)) +
                       w_real_ * imag_sq;

            // Contextual-value denominators under the gauge a = 1.
            Vector denoms(n_ret);
            for (Index k = 0; k < n_ret; ++k) {
                denoms(k) = data.overlaps(k) + b * std::conj(data.overlaps(k));
                if (std::abs(denoms(k)) <= cutoff_) {
                    return kInfinity;  // infeasible parameter point
                }
            }

            Vector lambda(n_ret);
            for (std::size_t a = 0; a < n_observables_; ++a) {
                Complex ex_c(0.0, 0.0);
                for (Index k = 0; k < n_ret; ++k) {
                    lambda(k) =
                        (data.bra_a_ket[a](k) + b * data.ket_a_bra[a](k)) /
                        denoms(k);
                    ex_c += weights(k) * lambda(k);
                }
                Complex var_c(0.0, 0.0);
                for (Index k = 0; k < n_ret; ++k) {
                    var_c += weights(k) * std::norm(lambda(k) - ex_c);
                }
                ex[a].push_back(ex_c);
                var[a].push_back(var_c.real());
            }
        }

        double total_residual = penalty / static_cast<double>(n_ctx);
        for (std::size_t a = 0; a < n_observables_; ++a) {
            total_residual += max_pairwise_spread(
                std::span<const Complex>(ex[a].data(), ex[a].size()));
            total_residual += max_pairwise_spread(
                std::span<const double>(var[a].data(), var[a].size()));
        }
        return total_residual;
    }

  private:
    std::vector<ContextData> contexts_;
    std::size_t n_observables_;
    double w_norm_;
    double w_real_;
    double cutoff_;
};

SolverParams random_start(Index dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SolverParams params;
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    params.b = radius * Complex(std::cos(angle), std::sin(angle));
    params.mu.resize(dim);
    for (Index i = 0; i < dim; ++i) {
        params.mu(i) = 4.0 * unit(rng) - 2.0;
    }
    params.p0 = 2.0 * unit(rng) - 1.0;
    return params;
}

}  // namespace

SolverParams SolverParams::born(Index dim) {
    SolverParams params;
    params.mu = Eigen::VectorXd::Zero(dim);
    params.mu(0) = 1.0;
    return params;
}

Eigen::VectorXd SolverParams::pack() const {
    Eigen::VectorXd x(2 + mu.size() + 1);
    x(0) = b.real();
    x(1) = b.imag();
    x.segment(2, mu.size()) = mu;
    x(x.size() - 1) = p0;
    return x;
}

SolverParams SolverParams::unpack(const Eigen::VectorXd& x) {
    if (x.size() < 2 + kMinDim + 1) {
        throw InvalidArgumentError("packed solver vector is too short");
    }
    SolverParams params;
    params.b = Complex(x(0), x(1));
    params.mu = x.segment(2, x.size() - 3);
    params.p0 = x(x.size() - 1);
    return params;
}

double residual(const SolverParams& params, const StateVector& psi,
                const std::vector<Operator>& observables,
                const std::vector<Context>& contexts, double w_norm,
                double w_real, const Tolerances& tol) {
    if (params.mu.size() != psi.dim()) {
        throw DimensionMismatchError("mu length does not match psi dimension");
    }
    return ResidualEvaluator(psi, observables, contexts, w_norm, w_real, tol)
        .evaluate(params);
}

double distance_to_born(const SolverParams& params) {
    // Sum over the full basis: sum_w P(w) = mu_0 + N p0; divide the measure
    // scale out before comparing, since that normalization is what fixes
    // mu_0 = 1.
    const double total =
        params.mu(0) + static_cast<double>(params.mu.size()) * params.p0;
    double dist = std::abs(params.b);
    if (std::abs(total) < 1e-9) {
        return kInfinity;
    }
    dist = std::max(dist, std::abs(params.mu(0) / total - 1.0));
    for (Index i = 1; i < params.mu.size(); ++i) {
        dist = std::max(dist, std::abs(params.mu(i) / total));
    }
    dist = std::max(dist, std::abs(params.p0 / total));
    return dist;
}

SolverResult solve_uniqueness(Index dim, std::uint64_t seed,
                              const SolverOptions& opts,
                              const Tolerances& tol) {
    if (dim < 2 || dim > 8) {
        throw InvalidArgumentError("solve_uniqueness supports dim in [2, 8], got " +
                                   std::to_string(dim));
    }
    if (opts.tol <= 0.0) {
        throw InvalidArgumentError("solver tolerance must be positive");
    }
    if (opts.n_observables < 1) {
        throw InvalidArgumentError("need at least one observable");
    }

    const StateVector psi = haar_random_state(dim, derive_seed(seed, 1));
    std::vector<Context> contexts;
    contexts.reserve(static_cast<std::size_t>(opts.n_contexts));
    for (int i = 0; i < opts.n_contexts; ++i) {
        contexts.push_back(haar_random_context(
            dim, derive_seed(seed, 2) + static_cast<std::uint64_t>(i), {},
            tol));
    }
    // The pre-state projector is part of the generator set; it pins b the
    // same way the proof's particular choice A = |psi><psi| does.
    std::vector<Operator> observables;
    observables.reserve(static_cast<std::size_t>(opts.n_observables));
    observables.push_back(Operator::projector(psi));
    for (int j = 1; j < opts.n_observables; ++j) {
        observables.push_back(random_hermitian(
            dim, derive_seed(seed, 3) + static_cast<std::uint64_t>(j)));
    }

    const ResidualEvaluator evaluator(psi, observables, contexts, opts.w_norm,
                                      opts.w_real, tol);
    auto objective = [&](const Eigen::VectorXd& x) {
        return evaluator.evaluate(SolverParams::unpack(x));
    };

    std::mt19937_64 rng(derive_seed(seed, 4));
    const SolverParams start =
        opts.start.has_value() ? *opts.start : random_start(dim, rng);
    if (start.mu.size() != dim) {
        throw DimensionMismatchError("start point has wrong mu length");
    }

    SolverResult result;
    result.seed = seed;

    Eigen::VectorXd best = start.pack();
    double f_best = objective(best);
    result.residual_trajectory.push_back(f_best);

    const double f_target = std::min(opts.tol * 1e-3, 1e-9);
    // Restart policy. Chunked descent with periodic fresh simplices: a
    // collapsed simplex on a max() kink, the zero-measure trap at mu = 0
    // (all spreads vanish, the normalization penalty floors at 1) and the
    // mu_0 valley (spread-blind, residual (mu_0 - 1)^2) all need different
    // escapes. Far from the Born point, restart from a fresh random draw;
    // near it, rebuild a full-rank simplex around the incumbent with edge
    // ~ sqrt(residual), which matches the remaining mu_0 gap in the
    // valley.
    const int chunk = 3000;
    int remaining = opts.max_iter;
    int attempts = 0;
    Eigen::VectorXd current = best;
    double f_current = f_best;
    bool progressing = true;  // last chunk improved on its own start

    while (f_best > f_target && remaining > 0 &&
           attempts <= opts.max_restarts) {
        NelderMeadOptions nm;
        nm.max_iter = std::min(remaining, chunk);
        nm.f_target = f_target;
        if (attempts == 0) {
            nm.init_step = 0.25;
        } else if (!progressing &&
                   distance_to_born(SolverParams::unpack(current)) > 0.5) {
            // Stalled away from the Born point (a kink ridge or the
            // zero-measure trap): abandon the locus for a fresh draw.
            current = random_start(dim, rng).pack();
            f_current = objective(current);
            nm.init_step = 0.25;
        } else {
            // Keep descending: rebuild a full-rank simplex around the
            // locus with edge ~ sqrt(residual), which matches the
            // remaining mu_0 gap in the spread-blind valley.
            nm.init_step = std::clamp(std::sqrt(f_current), 1e-7, 0.25);
        }
        const NelderMeadResult inner =
            nelder_mead_minimize(objective, current, nm);
        remaining -= inner.iterations;
        result.iterations += inner.iterations;
        for (const double f : inner.trajectory) {
            if (f <= result.residual_trajectory.back()) {
                result.residual_trajectory.push_back(f);
            }
        }
        progressing = inner.f_best < 0.99 * f_current;
        current = inner.best;
        f_current = inner.f_best;
        if (f_current < f_best) {
            f_best = f_current;
            best = current;
        }
        ++attempts;
    }

    result.restarts = attempts > 0 ? attempts - 1 : 0;
    result.final_params = SolverParams::unpack(best);
    result.final_residual = f_best;
    result.converged = f_best < opts.tol;
    result.distance_to_born = distance_to_born(result.final_params);
    return result;
}

}  // namespace qcv
