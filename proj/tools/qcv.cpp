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

// Batch front end: runs scans, the uniqueness solver and the scenario
// demos with seeded determinism and writes one machine-readable report per
// run. Exit codes: 0 success, 1 numerical-contract violation or run error,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcv/invariance.hpp"
#include "qcv/report.hpp"
#include "qcv/scenarios.hpp"
#include "qcv/solver.hpp"
#include "qcv/version.hpp"

namespace {

using qcv::report::Json;

struct CommonOpts {
    std::uint64_t seed = 1;
    qcv::Index dim = 2;
    std::string output = "json";
    std::string out_path = "-";
    std::string observable_file;
    double tolerance_overlap = qcv::Tolerances{}.overlap_cutoff;
    double tolerance_orthonormal = qcv::Tolerances{}.orthonormal;
};

struct ScanOpts {
    int n_contexts = 100;
    std::string measure = "born";
    std::vector<double> mu;
    double p0 = 0.0;
    double b_re = 0.0;
    double b_im = 0.0;
};

struct SolveOpts {
    int max_iter = 60000;
    double tol = 1e-6;
    int n_contexts = 10;
    int n_observables = 5;
};

struct TrajectoryOpts {
    double time_final = 1.0;
    int steps = 32;
    qcv::Index eigen_index = 0;
};

// Sub-stream tags for seed derivation; scans additionally use seed + i for
// their contexts.
constexpr std::uint64_t kStreamPsi = 11;
constexpr std::uint64_t kStreamContext = 12;
constexpr std::uint64_t kStreamObservable = 13;
constexpr std::uint64_t kStreamHamiltonian = 14;

qcv::Tolerances tolerances_from(const CommonOpts& common) {
    qcv::Tolerances tol;
    tol.overlap_cutoff = common.tolerance_overlap;
    tol.orthonormal = common.tolerance_orthonormal;
    return tol;
}

void add_common_flags(CLI::App* cmd, CommonOpts& common, bool with_dim) {
    cmd->add_option("--seed", common.seed, "Base seed for all randomness")
        ->capture_default_str();
    if (with_dim) {
        cmd->add_option("--dim", common.dim, "Hilbert-space dimension")
            ->capture_default_str();
    }
    cmd->add_option("--output", common.output, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path,
                    "Output path, or - for standard output")
        ->capture_default_str();
    cmd->add_option("--tolerance-overlap", common.tolerance_overlap,
                    "Sample-space overlap cutoff")
        ->capture_default_str();
    cmd->add_option("--tolerance-orthonormal", common.tolerance_orthonormal,
                    "Context orthonormality tolerance")
        ->capture_default_str();
}

qcv::Operator resolve_observable(const CommonOpts& common,
                                 const qcv::Tolerances& tol,
                                 std::string* tag) {
    if (!common.observable_file.empty()) {
        *tag = common.observable_file;
        qcv::Operator op =
            qcv::report::read_observable_file(common.observable_file, tol);
        if (op.dim() != common.dim) {
            throw qcv::InvalidArgumentError(
                "observable file dimension does not match --dim");
        }
        return op;
    }
    *tag = "random-hermitian";
    return qcv::random_hermitian(common.dim,
                                 qcv::derive_seed(common.seed, kStreamObservable));
}

Json meta_for(const std::string& command, const CommonOpts& common,
              const qcv::Tolerances& tol) {
    Json meta;
    meta["tool"] = "qcv";
    meta["version"] = qcv::kVersion;
    meta["command"] = command;
    meta["seed"] = common.seed;
    meta["tolerances"] = qcv::report::tolerances_to_json(tol);
    return meta;
}

void write_report(const CommonOpts& common, const std::string& text) {
    if (common.out_path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) {
        throw qcv::InvalidArgumentError("cannot open output path: " +
                                        common.out_path);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

qcv::MeasureSpec measure_from(const ScanOpts& scan, const qcv::StateVector& psi,
                              const qcv::Tolerances&) {
    if (scan.measure == "born") {
        return qcv::MeasureSpec::born();
    }
    if (scan.measure == "quartic") {
        return qcv::MeasureSpec::quartic();
    }
    std::vector<double> mu = scan.mu;
    if (mu.empty()) {
        mu.assign(static_cast<std::size_t>(psi.dim()), 0.0);
        mu[0] = 1.0;
    }
    if (static_cast<qcv::Index>(mu.size()) != psi.dim()) {
        throw qcv::InvalidArgumentError("--mu needs one value per dimension");
    }
    return qcv::MeasureSpec::parametrized(mu, scan.p0,
                                          qcv::orthonormal_completion(psi));
}

int run_weak_value(const CommonOpts& common, const ScanOpts& scan) {
    const qcv::Tolerances tol = tolerances_from(common);
    const qcv::StateVector psi = qcv::haar_random_state(
        common.dim, qcv::derive_seed(common.seed, kStreamPsi));
    const qcv::Context context = qcv::haar_random_context(
        common.dim, qcv::derive_seed(common.seed, kStreamContext), {}, tol);
    std::string tag;
    const qcv::Operator a = resolve_observable(common, tol, &tag);
    const qcv::CvParams p(1.0, qcv::Complex(scan.b_re, scan.b_im));
    const qcv::ContextualAssignment values =
        qcv::assignment(a, psi, context, p, tol);

    Json doc;
    doc["meta"] = meta_for("weak-value", common, tol);
    doc["meta"]["config"] = {{"dim", common.dim},
                             {"observable", tag},
                             {"b", qcv::report::complex_to_json(p.b)}};
    doc["inputs"]["psi"] = qcv::report::state_to_json(psi);
    doc["inputs"]["observable"] = qcv::report::operator_to_json(a);
    doc["inputs"]["context"] = [&] {
        Json arr = Json::array();
        for (qcv::Index i = 0; i < context.dim(); ++i) {
            arr.push_back(qcv::report::state_to_json(context.state(i)));
        }
        return arr;
    }();
    doc["results"] = qcv::report::assignment_to_json(values);
    doc["results"]["quantum_reference"] =
        qcv::report::complex_to_json(qcv::quantum_expectation(a, psi));

    if (common.output != "json") {
        throw CLI::ValidationError("--output",
                                   "weak-value reports are JSON-only");
    }
    write_report(common, qcv::report::dump(doc));
    return 0;
}

int run_invariance_scan(const CommonOpts& common, const ScanOpts& scan) {
    const qcv::Tolerances tol = tolerances_from(common);
    const qcv::StateVector psi = qcv::haar_random_state(
        common.dim, qcv::derive_seed(common.seed, kStreamPsi));
    std::string tag;
    const qcv::Operator a = resolve_observable(common, tol, &tag);
    const qcv::MeasureSpec spec = measure_from(scan, psi, tol);
    const qcv::CvParams p(1.0, qcv::Complex(scan.b_re, scan.b_im));

    const qcv::ScanReport report = qcv::invariance_scan(
        a, psi, spec, p, scan.n_contexts, common.seed, tol, tag);

    if (common.output == "csv") {
        write_report(common, qcv::report::scan_to_csv(report));
    } else {
        Json doc;
        doc["meta"] = meta_for("invariance-scan", common, tol);
        doc["meta"]["config"] = {{"dim", common.dim},
                                 {"n_contexts", scan.n_contexts},
                                 {"measure", scan.measure},
                                 {"mu", qcv::report::real_vector_to_json(scan.mu)},
                                 {"p0", scan.p0},
                                 {"b", qcv::report::complex_to_json(p.b)},
                                 {"observable", tag}};
        doc["inputs"]["psi"] = qcv::report::state_to_json(psi);
        doc["inputs"]["observable"] = qcv::report::operator_to_json(a);
        doc["results"] = qcv::report::scan_report_to_json(report);
        write_report(common, qcv::report::dump(doc));
    }

    // Contract: Born with b = 0 must be context independent.
    if (scan.measure == "born" && scan.b_re == 0.0 && scan.b_im == 0.0 &&
        (report.ex_spread >= 1e-10 || report.var_spread >= 1e-10)) {
        std::cerr << "contract violation: Born scan spread above tolerance\n";
        return 1;
    }
    return 0;
}

int run_uniqueness_solve(const CommonOpts& common, const SolveOpts& solve) {
    const qcv::Tolerances tol = tolerances_from(common);
    qcv::SolverOptions opts;
    opts.max_iter = solve.max_iter;
    opts.tol = solve.tol;
    opts.n_contexts = solve.n_contexts;
    opts.n_observables = solve.n_observables;
    const qcv::SolverResult result =
        qcv::solve_uniqueness(common.dim, common.seed, opts, tol);

    if (common.output != "json") {
        throw CLI::ValidationError("--output",
                                   "uniqueness-solve reports are JSON-only");
    }
    Json doc;
    doc["meta"] = meta_for("uniqueness-solve", common, tol);
    doc["meta"]["config"] = {{"dim", common.dim},
                             {"max_iter", solve.max_iter},
                             {"tol", solve.tol},
                             {"n_contexts", solve.n_contexts},
                             {"n_observables", solve.n_observables}};
    doc["inputs"]["note"] =
        "psi, contexts and observables are derived from the seed";
    doc["results"] = qcv::report::solver_result_to_json(result);
    write_report(common, qcv::report::dump(doc));

    if (result.converged && result.distance_to_born >= 1e-4) {
        std::cerr << "contract violation: converged away from the Born point\n";
        return 1;
    }
    return 0;
}

int run_zurek(const CommonOpts& common) {
    const qcv::Tolerances tol = tolerances_from(common);
    const qcv::ZurekReport report = qcv::zurek_demo(tol);

    if (common.output != "json") {
        throw CLI::ValidationError("--output", "zurek-demo reports are JSON-only");
    }
    Json doc;
    doc["meta"] = meta_for("zurek-demo", common, tol);
    doc["meta"]["config"] = Json::object();
    doc["results"] = qcv::report::zurek_to_json(report);
    write_report(common, qcv::report::dump(doc));

    const bool ok =
        std::abs(report.weak_values[0] - qcv::Complex(1.0, 0.0)) < 1e-12 &&
        std::abs(report.weak_values[1] + qcv::Complex(1.0, 0.0)) < 1e-12 &&
        std::abs(report.probabilities[0] - 0.5) < 1e-12 &&
        std::abs(report.probabilities[1] - 0.5) < 1e-12 &&
        report.swap_symmetry_residual < 1e-12;
    if (!ok) {
        std::cerr << "contract violation: envariance numbers off\n";
        return 1;
    }
    return 0;
}

int run_heisenberg(const CommonOpts& common, const TrajectoryOpts& traj) {
    const qcv::Tolerances tol = tolerances_from(common);
    const qcv::StateVector psi = qcv::haar_random_state(
        common.dim, qcv::derive_seed(common.seed, kStreamPsi));
    const qcv::Operator h = qcv::random_hermitian(
        common.dim, qcv::derive_seed(common.seed, kStreamHamiltonian));
    std::string tag;
    const qcv::Operator a = resolve_observable(common, tol, &tag);

    const qcv::Trajectory trajectory = qcv::heisenberg_trajectory(
        h, a, psi, traj.time_final, traj.steps, traj.eigen_index, tol);

    if (common.output == "csv") {
        write_report(common, qcv::report::trajectory_to_csv(trajectory));
    } else {
        Json doc;
        doc["meta"] = meta_for("heisenberg-scan", common, tol);
        doc["meta"]["config"] = {{"dim", common.dim},
                                 {"time_final", traj.time_final},
                                 {"steps", traj.steps},
                                 {"eigen_index", traj.eigen_index},
                                 {"observable", tag}};
        doc["inputs"]["psi"] = qcv::report::state_to_json(psi);
        doc["inputs"]["hamiltonian"] = qcv::report::operator_to_json(h);
        doc["inputs"]["observable"] = qcv::report::operator_to_json(a);
        doc["results"] = qcv::report::trajectory_to_json(trajectory);
        write_report(common, qcv::report::dump(doc));
    }

    if (trajectory.endpoint_residual >= 1e-10) {
        std::cerr << "contract violation: trajectory endpoint misses the "
                     "eigenvalue\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contextual (weak) values, invariance scans and Born-rule "
                 "recovery"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qcv::kVersion);

    CommonOpts common;
    ScanOpts scan;
    SolveOpts solve;
    TrajectoryOpts traj;

    CLI::App* weak = app.add_subcommand(
        "weak-value", "Contextual values over one seeded context");
    add_common_flags(weak, common, true);
    weak->add_option("--observable-file", common.observable_file,
                     "JSON observable instead of a seeded random one");
    weak->add_option("--b-re", scan.b_re, "Re b of the contextual-value form")
        ->capture_default_str();
    weak->add_option("--b-im", scan.b_im, "Im b of the contextual-value form")
        ->capture_default_str();

    CLI::App* inv = app.add_subcommand(
        "invariance-scan", "Ex/Var spread across Haar-random contexts");
    add_common_flags(inv, common, true);
    inv->add_option("--observable-file", common.observable_file,
                    "JSON observable instead of a seeded random one");
    inv->add_option("--n-contexts", scan.n_contexts, "Contexts to sample")
        ->capture_default_str();
    inv->add_option("--measure", scan.measure, "born, quartic or param")
        ->check(CLI::IsMember({"born", "quartic", "param"}))
        ->capture_default_str();
    inv->add_option("--mu", scan.mu,
                    "Parametrized-measure coefficients (param only)");
    inv->add_option("--p0", scan.p0, "Parametrized-measure offset")
        ->capture_default_str();
    inv->add_option("--b-re", scan.b_re, "Re b of the contextual-value form")
        ->capture_default_str();
    inv->add_option("--b-im", scan.b_im, "Im b of the contextual-value form")
        ->capture_default_str();

    CLI::App* uniq = app.add_subcommand(
        "uniqueness-solve", "Minimize the invariance residual over (b, mu, p0)");
    add_common_flags(uniq, common, true);
    uniq->add_option("--max-iter", solve.max_iter, "Iteration budget")
        ->capture_default_str();
    uniq->add_option("--tol", solve.tol, "Convergence residual")
        ->capture_default_str();
    uniq->add_option("--n-contexts", solve.n_contexts, "Contexts in the residual")
        ->capture_default_str();
    uniq->add_option("--n-observables", solve.n_observables,
                     "Observables in the residual (includes the projector)")
        ->capture_default_str();

    CLI::App* zurek = app.add_subcommand(
        "zurek-demo", "The envariance example: weak values and probabilities");
    add_common_flags(zurek, common, false);

    CLI::App* heis = app.add_subcommand(
        "heisenberg-scan", "Weak-value trajectory ending on an eigenvalue");
    add_common_flags(heis, common, true);
    heis->add_option("--observable-file", common.observable_file,
                     "JSON observable instead of a seeded random one");
    heis->add_option("--time-final", traj.time_final, "Measurement time T")
        ->capture_default_str();
    heis->add_option("--steps", traj.steps, "Grid intervals in [0, T]")
        ->capture_default_str();
    heis->add_option("--eigen-index", traj.eigen_index,
                     "Eigenvector of A(T) to post-select")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (weak->parsed()) {
            return run_weak_value(common, scan);
        }
        if (inv->parsed()) {
            return run_invariance_scan(common, scan);
        }
        if (uniq->parsed()) {
            return run_uniqueness_solve(common, solve);
        }
        if (zurek->parsed()) {
            return run_zurek(common);
        }
        if (heis->parsed()) {
            return run_heisenberg(common, traj);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qcv::InvalidArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qcv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
