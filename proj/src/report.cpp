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

#include "qcv/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcv::report {

namespace {

void escape_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x",
                                  static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void dump_value(const Json& value, std::string& out, int level) {
    const std::string pad(static_cast<std::size_t>(level) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(level + 1) * 2, ' ');
    switch (value.type()) {
        case nlohmann::json::value_t::null:
            out += "null";
            break;
        case nlohmann::json::value_t::boolean:
            out += value.get<bool>() ? "true" : "false";
            break;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(value.get<std::int64_t>());
            break;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(value.get<std::uint64_t>());
            break;
        case nlohmann::json::value_t::number_float:
            out += format_double(value.get<double>());
            break;
        case nlohmann::json::value_t::string:
            escape_string(value.get<std::string>(), out);
            break;
        case nlohmann::json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out += pad_in;
                dump_value(value[i], out, level + 1);
                if (i + 1 < value.size()) {
                    out += ",";
                }
                out += "\n";
            }
            out += pad + "]";
            break;
        }
        case nlohmann::json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = value.begin(); it != value.end(); ++it, ++i) {
                out += pad_in;
                escape_string(it.key(), out);
                out += ": ";
                dump_value(it.value(), out, level + 1);
                if (i + 1 < value.size()) {
                    out += ",";
                }
                out += "\n";
            }
            out += pad + "}";
            break;
        }
        default:
            out += "null";
    }
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";  // JSON has no literal for inf/nan
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string dump(const Json& doc) {
    std::string out;
    dump_value(doc, out, 0);
    out.push_back('\n');
    return out;
}

Json complex_to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

Json complex_vector_to_json(const std::vector<Complex>& values) {
    Json arr = Json::array();
    for (const Complex& z : values) {
        arr.push_back(complex_to_json(z));
    }
    return arr;
}

Json real_vector_to_json(const std::vector<double>& values) {
    Json arr = Json::array();
    for (const double v : values) {
        arr.push_back(v);
    }
    return arr;
}

Json tolerances_to_json(const Tolerances& tol) {
    Json j;
    j["norm"] = tol.norm;
    j["orthonormal"] = tol.orthonormal;
    j["hermitian"] = tol.hermitian;
    j["unitarity"] = tol.unitarity;
    j["overlap_cutoff"] = tol.overlap_cutoff;
    j["diagonality"] = tol.diagonality;
    j["reality"] = tol.reality;
    return j;
}

Json state_to_json(const StateVector& psi) {
    Json arr = Json::array();
    for (Index i = 0; i < psi.dim(); ++i) {
        arr.push_back(complex_to_json(psi.amplitude(i)));
    }
    return arr;
}

Json operator_to_json(const Operator& op) {
    Json j;
    j["dim"] = op.dim();
    Json rows = Json::array();
    for (Index r = 0; r < op.dim(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < op.dim(); ++c) {
            row.push_back(complex_to_json(op.entries()(r, c)));
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Json scan_report_to_json(const ScanReport& scan) {
    Json j;
    j["observable_tag"] = scan.observable_tag;
    j["n_contexts"] = scan.n_contexts;
    j["seed"] = scan.seed;
    j["quantum_reference"] = complex_to_json(scan.quantum_reference);
    j["ex_values"] = complex_vector_to_json(scan.ex_values);
    j["var_values"] = real_vector_to_json(scan.var_values);
    j["ex_spread"] = scan.ex_spread;
    j["var_spread"] = scan.var_spread;
    return j;
}

Json solver_params_to_json(const SolverParams& params) {
    Json j;
    j["b"] = complex_to_json(params.b);
    Json mu = Json::array();
    for (Index i = 0; i < params.mu.size(); ++i) {
        mu.push_back(params.mu(i));
    }
    j["mu"] = mu;
    j["p0"] = params.p0;
    return j;
}

Json solver_result_to_json(const SolverResult& result) {
    Json j;
    j["seed"] = result.seed;
    j["converged"] = result.converged;
    j["final_residual"] = result.final_residual;
    j["distance_to_born"] = result.distance_to_born;
    j["iterations"] = result.iterations;
    j["restarts"] = result.restarts;
    j["final_params"] = solver_params_to_json(result.final_params);
    j["residual_trajectory"] = real_vector_to_json(result.residual_trajectory);
    return j;
}

Json zurek_to_json(const ZurekReport& zurek) {
    Json j;
    j["weak_values"] = Json::array({complex_to_json(zurek.weak_values[0]),
                                    complex_to_json(zurek.weak_values[1])});
    j["probabilities"] =
        Json::array({zurek.probabilities[0], zurek.probabilities[1]});
    j["swap_symmetry_residual"] = zurek.swap_symmetry_residual;
    return j;
}

Json trajectory_to_json(const Trajectory& trajectory) {
    Json j;
    j["times"] = real_vector_to_json(trajectory.times);
    j["values"] = complex_vector_to_json(trajectory.values);
    j["endpoint_eigenvalue"] = trajectory.endpoint_eigenvalue;
    j["endpoint_residual"] = trajectory.endpoint_residual;
    return j;
}

Json assignment_to_json(const ContextualAssignment& a) {
    Json j;
    Json retained = Json::array();
    for (const Index i : a.retained) {
        retained.push_back(i);
    }
    j["retained"] = retained;
    j["values"] = complex_vector_to_json(a.values);
    Json excluded = Json::array();
    for (const ExcludedIndex& e : a.excluded) {
        Json entry;
        entry["index"] = e.index;
        entry["overlap"] = e.overlap;
        excluded.push_back(entry);
    }
    j["excluded"] = excluded;
    return j;
}

std::string scan_to_csv(const ScanReport& scan) {
    std::string out = "context_index,ex_re,ex_im,var\n";
    for (std::size_t i = 0; i < scan.ex_values.size(); ++i) {
        out += std::to_string(i);
        out += ",";
        out += format_double(scan.ex_values[i].real());
        out += ",";
        out += format_double(scan.ex_values[i].imag());
        out += ",";
        out += format_double(scan.var_values[i]);
        out += "\n";
    }
    return out;
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
    std::string out = "t,value_re,value_im\n";
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        out += format_double(trajectory.times[i]);
        out += ",";
        out += format_double(trajectory.values[i].real());
        out += ",";
        out += format_double(trajectory.values[i].imag());
        out += "\n";
    }
    return out;
}

Operator parse_observable(const nlohmann::json& doc, const Tolerances& tol) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
        throw InvalidArgumentError(
            "observable file needs {\"dim\": N, \"entries\": [[[re, im], ...], ...]}");
    }
    const Index dim = doc["dim"].get<Index>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || static_cast<Index>(entries.size()) != dim) {
        throw InvalidArgumentError("observable entries must have dim rows");
    }
    Matrix m(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        const auto& row = entries[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
            throw InvalidArgumentError("observable entries must have dim columns");
        }
        for (Index c = 0; c < dim; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_array() || cell.size() != 2) {
                throw InvalidArgumentError(
                    "observable entries must be [re, im] pairs");
            }
            m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return Operator(m, tol);
}

Operator read_observable_file(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgumentError("cannot open observable file: " + path);
    }
    nlohmann::json doc;
    in >> doc;
    return parse_observable(doc, tol);
}

}  // namespace qcv::report
