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
 * Machine-readable report documents. Conventions: complex numbers are
 * two-element arrays [re, im]; reals are printed with 17 significant
 * digits so a parsed report round-trips bit-exactly; objects keep
 * insertion order. Identical inputs therefore produce byte-identical
 * documents.
 */

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qcv/contextual.hpp"
#include "qcv/invariance.hpp"
#include "qcv/scenarios.hpp"
#include "qcv/solver.hpp"

namespace qcv::report {

using Json = nlohmann::ordered_json;

/// %.17g rendering of a double (round-trip exact).
std::string format_double(double value);

/// Deterministic serialization with 17-significant-digit reals,
/// two-space indentation and a trailing newline.
std::string dump(const Json& doc);

Json complex_to_json(const Complex& z);
Json complex_vector_to_json(const std::vector<Complex>& values);
Json real_vector_to_json(const std::vector<double>& values);
Json tolerances_to_json(const Tolerances& tol);
Json state_to_json(const StateVector& psi);
Json operator_to_json(const Operator& op);
Json scan_report_to_json(const ScanReport& scan);
Json solver_params_to_json(const SolverParams& params);
Json solver_result_to_json(const SolverResult& result);
Json zurek_to_json(const ZurekReport& zurek);
Json trajectory_to_json(const Trajectory& trajectory);
Json assignment_to_json(const ContextualAssignment& a);

/// One row per context: index, Re Ex, Im Ex, Var.
std::string scan_to_csv(const ScanReport& scan);
/// One row per grid point: t, Re lambda, Im lambda.
std::string trajectory_to_csv(const Trajectory& trajectory);

/// Observable file: {"dim": N, "entries": [[[re, im], ...], ...]},
/// row-major.
Operator read_observable_file(const std::string& path,
                              const Tolerances& tol = Tolerances{});
Operator parse_observable(const nlohmann::json& doc,
                          const Tolerances& tol = Tolerances{});

}  // namespace qcv::report
