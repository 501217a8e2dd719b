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

namespace qcv {

/**
 * Central record of every numerical tolerance used by the library.
 *
 * All thresholds are chosen with double-precision headroom for desk-scale
 * dimensions (N <= 64); they are deliberately kept in one place so a run
 * can report the exact tolerance set it was evaluated under.
 */
struct Tolerances {
    /// Unit-norm residual allowed on a constructed state vector.
    double norm = 1e-12;
    /// Entrywise bound on |<w_i|w_j> - delta_ij| for a context basis.
    double orthonormal = 1e-10;
    /// Entrywise bound on |M - M^dag| below which a matrix counts as Hermitian.
    double hermitian = 1e-12;
    /// Bound on ||U^dag U - I|| for unitarity checks.
    double unitarity = 1e-10;
    /// Minimum |<w|psi>| (and contextual-value denominator magnitude) for a
    /// post-selection outcome to belong to the sample space.
    double overlap_cutoff = 1e-12;
    /// Entrywise off-diagonal bound for membership in a context's diagonal
    /// (maximal abelian) subalgebra.
    double diagonality = 1e-10;
    /// |Im| bound below which a measure weight is flagged as real.
    double reality = 1e-12;
};

}  // namespace qcv
