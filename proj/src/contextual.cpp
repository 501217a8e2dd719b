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

#include "qcv/contextual.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcv {

namespace {

void check_same_dim(Index a, Index b, const char* what) {
    if (a != b) {
        throw DimensionMismatchError(std::string(what) + " between dimensions " +
                                     std::to_string(a) + " and " +
                                     std::to_string(b));
    }
}

}  // namespace

CvParams::CvParams(Complex a_coeff, Complex b_coeff) : a(a_coeff), b(b_coeff) {
    if (std::abs(a) + std::abs(b) == 0.0) {
        throw InvalidArgumentError("contextual-value parameters a, b are both zero");
    }
}

Operator w_operator(const StateVector& psi, const StateVector& omega,
                    const CvParams& p) {
    check_same_dim(psi.dim(), omega.dim(), "w_operator");
    const Matrix w = p.a * (psi.amplitudes() * omega.amplitudes().adjoint()) +
                     p.b * (omega.amplitudes() * psi.amplitudes().adjoint());
    return Operator(w);
}

Complex contextual_value(const Operator& a_op, const StateVector& psi,
                         const StateVector& omega, const CvParams& p,
                         const Tolerances& tol) {
    check_same_dim(a_op.dim(), psi.dim(), "contextual value");
    check_same_dim(psi.dim(), omega.dim(), "contextual value");
    const Complex overlap = inner(omega, psi);  // <w|psi>
    const Complex denominator = p.a * overlap + p.b * std::conj(overlap);
    if (std::abs(denominator) <= tol.overlap_cutoff) {
        throw DegenerateDenominatorError(
            "contextual-value denominator magnitude " +
            std::to_string(std::abs(denominator)) + " is below the cutoff");
    }
    const Complex bra_a_ket = omega.amplitudes().dot(
        a_op.entries() * psi.amplitudes());  // <w|A|psi>
    const Complex ket_a_bra = psi.amplitudes().dot(
        a_op.entries() * omega.amplitudes());  // <psi|A|w>
    return (p.a * bra_a_ket + p.b * ket_a_bra) / denominator;
}

Complex weak_value(const Operator& a_op, const StateVector& psi,
                   const StateVector& omega, const Tolerances& tol) {
    check_same_dim(a_op.dim(), psi.dim(), "weak value");
    check_same_dim(psi.dim(), omega.dim(), "weak value");
    const Complex overlap = inner(omega, psi);
    if (std::abs(overlap) <= tol.overlap_cutoff) {
        throw DegenerateDenominatorError(
            "post-selected state is orthogonal to psi, overlap " +
            std::to_string(std::abs(overlap)));
    }
    const Complex bra_a_ket =
        omega.amplitudes().dot(a_op.entries() * psi.amplitudes());
    return bra_a_ket / overlap;
}

double check_sum_rule(const Operator& a_op, const Operator& b_op,
                      const StateVector& psi, const StateVector& omega,
                      const CvParams& p, const Tolerances& tol) {
    const Complex lhs = contextual_value(a_op + b_op, psi, omega, p, tol);
    const Complex rhs = contextual_value(a_op, psi, omega, p, tol) +
                        contextual_value(b_op, psi, omega, p, tol);
    return std::abs(lhs - rhs);
}

bool diagonal_in_context(const Operator& op, const Context& context,
                         const Tolerances& tol) {
    check_same_dim(op.dim(), context.dim(), "diagonality check");
    const Matrix u = context.unitary();
    Matrix in_basis = u.adjoint() * op.entries() * u;
    in_basis.diagonal().setZero();
    return in_basis.cwiseAbs().maxCoeff() < tol.diagonality;
}

double check_product_rule(const Operator& t_op, const Operator& s_op,
                          const Context& context, const StateVector& psi,
                          Index omega_index, const CvParams& p,
                          const Tolerances& tol) {
    if (!diagonal_in_context(t_op, context, tol)) {
        throw NotInSubalgebraError("T is not diagonal in the context");
    }
    if (!diagonal_in_context(s_op, context, tol)) {
        throw NotInSubalgebraError("S is not diagonal in the context");
    }
    const StateVector& omega = context.state(omega_index);
    const Complex product = contextual_value(t_op * s_op, psi, omega, p, tol);
    const Complex factors = contextual_value(t_op, psi, omega, p, tol) *
                            contextual_value(s_op, psi, omega, p, tol);
    return std::abs(product - factors);
}

std::vector<Index> retained_indices(const StateVector& psi,
                                    const Context& context,
                                    const Tolerances& tol) {
    check_same_dim(psi.dim(), context.dim(), "retained indices");
    std::vector<Index> retained;
    retained.reserve(static_cast<std::size_t>(context.dim()));
    for (Index i = 0; i < context.dim(); ++i) {
        if (std::abs(inner(context.state(i), psi)) > tol.overlap_cutoff) {
            retained.push_back(i);
        }
    }
    return retained;
}

ContextualAssignment assignment(const Operator& a_op, const StateVector& psi,
                                const Context& context, const CvParams& p,
                                const Tolerances& tol) {
    check_same_dim(a_op.dim(), psi.dim(), "assignment");
    check_same_dim(psi.dim(), context.dim(), "assignment");

    ContextualAssignment out{context, psi, {}, {}, {}};
    for (Index i = 0; i < context.dim(); ++i) {
        const double overlap = std::abs(inner(context.state(i), psi));
        if (overlap > tol.overlap_cutoff) {
            out.retained.push_back(i);
            out.values.push_back(
                contextual_value(a_op, psi, context.state(i), p, tol));
        } else {
            out.excluded.push_back({i, overlap});
        }
    }
    return out;
}

}  // namespace qcv
