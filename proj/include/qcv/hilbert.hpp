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
 * Complex linear-algebra substrate: normalized states, operators with a
 * cached Hermitian flag, orthonormal contexts, Haar-random sampling and
 * Hermitian time evolution. All types are immutable values after
 * construction and all functions are pure; randomness enters only through
 * explicit 64-bit seeds.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcv/errors.hpp"
#include "qcv/tolerances.hpp"

namespace qcv {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Smallest Hilbert-space dimension the library accepts.
inline constexpr Index kMinDim = 2;
/// Desk-scale cap; larger spaces are rejected at construction.
inline constexpr Index kMaxDim = 1024;

/**
 * A normalized vector in an N-dimensional complex Hilbert space.
 *
 * Instances always have unit Euclidean norm and fixed dimension
 * 2 <= N <= 1024; the only way to obtain one is through a factory that
 * enforces this.
 */
class StateVector {
  public:
    /// Normalizes a raw amplitude vector, preserving its direction.
    /// Throws ZeroVectorError when the norm is at or below 1e-14.
    static StateVector normalized(const Vector& raw,
                                  const Tolerances& tol = Tolerances{});

    Index dim() const { return amplitudes_.size(); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex amplitude(Index i) const { return amplitudes_(i); }

  private:
    explicit StateVector(Vector amplitudes)
        : amplitudes_(std::move(amplitudes)) {}

    Vector amplitudes_;
};

/// Inner product <u|v> = sum_i conj(u_i) v_i.
Complex inner(const StateVector& u, const StateVector& v);

/**
 * An N x N complex matrix acting on the Hilbert space. Hermiticity is
 * detected once at construction (entrywise |M - M^dag| below the
 * `hermitian` tolerance) and cached.
 */
class Operator {
  public:
    explicit Operator(Matrix entries, const Tolerances& tol = Tolerances{});

    static Operator identity(Index dim);
    /// Rank-one projector |v><v|.
    static Operator projector(const StateVector& v);

    Index dim() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    bool is_hermitian() const { return hermitian_; }

    Operator operator+(const Operator& other) const;
    Operator operator-(const Operator& other) const;
    Operator operator*(const Operator& other) const;
    Operator scaled(Complex factor) const;

  private:
    Matrix entries_;
    bool hermitian_;
};

/**
 * An ordered orthonormal basis {|w_0>, ..., |w_{N-1}>}: the concrete
 * stand-in for a maximal abelian subalgebra's simultaneous eigenbasis, and
 * operationally the set of states to be post-selected.
 */
class Context {
  public:
    /// Validates pairwise orthonormality to the `orthonormal` tolerance.
    explicit Context(std::vector<StateVector> basis, std::string label = {},
                     const Tolerances& tol = Tolerances{});

    /// Builds a context from the columns of a unitary matrix.
    static Context from_unitary(const Matrix& columns, std::string label = {},
                                const Tolerances& tol = Tolerances{});
    /// The standard basis {e_0, ..., e_{N-1}}.
    static Context computational(Index dim, std::string label = {});

    Index dim() const { return static_cast<Index>(basis_.size()); }
    const StateVector& state(Index i) const { return basis_.at(i); }
    const std::vector<StateVector>& basis() const { return basis_; }
    /// Basis vectors as the columns of an N x N matrix.
    Matrix unitary() const;
    const std::string& label() const { return label_; }

  private:
    std::vector<StateVector> basis_;
    std::string label_;
};

/// Gram matrix <w_i|w_j> of a context; identity for a valid one.
Matrix gram_matrix(const Context& context);

/**
 * Samples a Haar-distributed context: complex Gaussian matrix, QR
 * decomposition, R-diagonal phase correction. Deterministic for a fixed
 * seed.
 */
Context haar_random_context(Index dim, std::uint64_t seed,
                            std::string label = {},
                            const Tolerances& tol = Tolerances{});

/// A Haar-random state (normalized complex Gaussian vector).
StateVector haar_random_state(Index dim, std::uint64_t seed);

/// A GUE-style random Hermitian matrix, (B + B^dag)/2 with Gaussian B.
Operator random_hermitian(Index dim, std::uint64_t seed);

/// An orthonormal basis whose first vector is exactly `first`.
Context orthonormal_completion(const StateVector& first,
                               std::string label = {});

/// Decorrelated sub-stream seed for a named purpose (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Sign of the phase in exp(sign * i * H * t).
enum class PhaseSign : int { Positive = +1, Negative = -1 };

/**
 * Matrix exponential exp(direction * i * H * t) of a Hermitian H, computed
 * by eigendecomposition. The result is unitary to the `unitarity`
 * tolerance. Throws NotHermitianError when H is not flagged Hermitian.
 */
Operator hermitian_evolution(const Operator& h, double t, PhaseSign direction,
                             const Tolerances& tol = Tolerances{});

/**
 * Eigendecomposition of a Hermitian operator with a deterministic order:
 * ascending eigenvalue, ties broken by lexicographic comparison of the
 * phase-canonicalized eigenvector entries rounded to 1e-9.
 */
struct HermitianEigensystem {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;  // column i pairs with eigenvalues(i)
};
HermitianEigensystem hermitian_eigensystem(const Operator& h,
                                           const Tolerances& tol = Tolerances{});

}  // namespace qcv
