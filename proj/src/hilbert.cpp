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

#include "qcv/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

namespace qcv {

namespace {

void check_dim_range(Index dim) {
    if (dim < kMinDim) {
        throw InvalidArgumentError("Hilbert-space dimension must be >= 2, got " +
                                   std::to_string(dim));
    }
    if (dim > kMaxDim) {
        throw InvalidArgumentError("Hilbert-space dimension capped at " +
                                   std::to_string(kMaxDim) + ", got " +
                                   std::to_string(dim));
    }
}

Matrix complex_gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

StateVector StateVector::normalized(const Vector& raw, const Tolerances&) {
    check_dim_range(raw.size());
    const double n = raw.norm();
    if (n <= 1e-14) {
        throw ZeroVectorError("cannot normalize a vector with norm " +
                              std::to_string(n));
    }
    return StateVector(raw / n);
}

Complex inner(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatchError("inner product between dimensions " +
                                     std::to_string(u.dim()) + " and " +
                                     std::to_string(v.dim()));
    }
    // Eigen's dot conjugates the left operand: exactly <u|v>.
    return u.amplitudes().dot(v.amplitudes());
}

Operator::Operator(Matrix entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw InvalidArgumentError("operator matrix must be square");
    }
    check_dim_range(entries_.rows());
    hermitian_ =
        (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() < tol.hermitian;
}

Operator Operator::identity(Index dim) {
    return Operator(Matrix::Identity(dim, dim));
}

Operator Operator::projector(const StateVector& v) {
    return Operator(v.amplitudes() * v.amplitudes().adjoint());
}

Operator Operator::operator+(const Operator& other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatchError("operator sum between dimensions " +
                                     std::to_string(dim()) + " and " +
                                     std::to_string(other.dim()));
    }
    return Operator(entries_ + other.entries_);
}

Operator Operator::operator-(const Operator& other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatchError("operator difference between dimensions " +
                                     std::to_string(dim()) + " and " +
                                     std::to_string(other.dim()));
    }
    return Operator(entries_ - other.entries_);
}

Operator Operator::operator*(const Operator& other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatchError("operator product between dimensions " +
                                     std::to_string(dim()) + " and " +
                                     std::to_string(other.dim()));
    }
    return Operator(entries_ * other.entries_);
}

Operator Operator::scaled(Complex factor) const {
    return Operator(factor * entries_);
}

Context::Context(std::vector<StateVector> basis, std::string label,
                 const Tolerances& tol)
    : basis_(std::move(basis)), label_(std::move(label)) {
    const Index n = static_cast<Index>(basis_.size());
    check_dim_range(n);
    for (const auto& v : basis_) {
        if (v.dim() != n) {
            throw DimensionMismatchError(
                "context needs N vectors of dimension N");
        }
    }
    Matrix u(n, n);
    for (Index j = 0; j < n; ++j) {
        u.col(j) = basis_[static_cast<std::size_t>(j)].amplitudes();
    }
    const double residual =
        (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (residual >= tol.orthonormal) {
        throw InvalidArgumentError(
            "context basis is not orthonormal, worst pairwise residual " +
            std::to_string(residual));
    }
}

Context Context::from_unitary(const Matrix& columns, std::string label,
                              const Tolerances& tol) {
    if (columns.rows() != columns.cols()) {
        throw InvalidArgumentError("context matrix must be square");
    }
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(columns.cols()));
    for (Index j = 0; j < columns.cols(); ++j) {
        basis.push_back(StateVector::normalized(columns.col(j), tol));
    }
    return Context(std::move(basis), std::move(label), tol);
}

Context Context::computational(Index dim, std::string label) {
    return from_unitary(Matrix::Identity(dim, dim), std::move(label));
}

Matrix Context::unitary() const {
    const Index n = dim();
    Matrix u(n, n);
    for (Index j = 0; j < n; ++j) {
        u.col(j) = basis_[static_cast<std::size_t>(j)].amplitudes();
    }
    return u;
}

Matrix gram_matrix(const Context& context) {
    const Matrix u = context.unitary();
    return u.adjoint() * u;
}

Context haar_random_context(Index dim, std::uint64_t seed, std::string label,
                            const Tolerances& tol) {
    check_dim_range(dim);
    std::mt19937_64 rng(seed);
    Matrix a = complex_gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase-fix with the R diagonal so the distribution is exactly Haar.
    for (Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? (d / mag) : Complex(1.0, 0.0);
    }
    return Context::from_unitary(q, std::move(label), tol);
}

StateVector haar_random_state(Index dim, std::uint64_t seed) {
    check_dim_range(dim);
    std::mt19937_64 rng(seed);
    return StateVector::normalized(complex_gaussian_matrix(dim, 1, rng));
}

Operator random_hermitian(Index dim, std::uint64_t seed) {
    check_dim_range(dim);
    std::mt19937_64 rng(seed);
    const Matrix b = complex_gaussian_matrix(dim, dim, rng);
    return Operator(0.5 * (b + b.adjoint()));
}

Context orthonormal_completion(const StateVector& first, std::string label) {
    const Matrix seed_col = first.amplitudes();
    Eigen::HouseholderQR<Matrix> qr(seed_col);
    Matrix q = qr.householderQ();
    // householderQ's first column is `first` up to a unit-modulus factor;
    // the remaining columns are orthogonal to it either way, so pin the
    // first column exactly.
    q.col(0) = first.amplitudes();
    return Context::from_unitary(q, std::move(label));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 finalizer over the combined words.
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Operator hermitian_evolution(const Operator& h, double t, PhaseSign direction,
                             const Tolerances& tol) {
    if (!h.is_hermitian()) {
        throw NotHermitianError("hermitian_evolution requires a Hermitian H");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
    const double sign = static_cast<double>(static_cast<int>(direction));
    const Index n = h.dim();
    Vector phases(n);
    for (Index i = 0; i < n; ++i) {
        phases(i) = std::exp(Complex(0.0, sign * es.eigenvalues()(i) * t));
    }
    const Matrix u = es.eigenvectors() * phases.asDiagonal() *
                     es.eigenvectors().adjoint();
    return Operator(u, tol);
}

HermitianEigensystem hermitian_eigensystem(const Operator& h,
                                           const Tolerances&) {
    if (!h.is_hermitian()) {
        throw NotHermitianError("eigensystem requires a Hermitian operator");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
    const Index n = h.dim();
    Matrix vectors = es.eigenvectors();

    // Canonical phase: first entry with magnitude above 1e-9 made real
    // positive, so the tie-break below does not depend on solver phases.
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            const Complex z = vectors(i, j);
            if (std::abs(z) > 1e-9) {
                vectors.col(j) *= std::conj(z) / std::abs(z);
                break;
            }
        }
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    auto rounded = [](double x) { return std::round(x * 1e9); };
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        const double la = es.eigenvalues()(a);
        const double lb = es.eigenvalues()(b);
        if (la != lb) {
            return la < lb;
        }
        for (Index i = 0; i < n; ++i) {
            const double ra = rounded(vectors(i, a).real());
            const double rb = rounded(vectors(i, b).real());
            if (ra != rb) {
                return ra < rb;
            }
            const double ia = rounded(vectors(i, a).imag());
            const double ib = rounded(vectors(i, b).imag());
            if (ia != ib) {
                return ia < ib;
            }
        }
        return false;
    });

    HermitianEigensystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Index j = 0; j < n; ++j) {
        out.eigenvalues(j) = es.eigenvalues()(order[static_cast<std::size_t>(j)]);
        out.eigenvectors.col(j) = vectors.col(order[static_cast<std::size_t>(j)]);
    }
    return out;
}

}  // namespace qcv
