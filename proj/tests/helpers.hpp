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

#include <complex>
#include <initializer_list>

#include "qcv/hilbert.hpp"

namespace qcv::test {

inline Operator pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return Operator(m);
}

inline Operator pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return Operator(m);
}

inline Operator pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return Operator(m);
}

inline StateVector make_state(std::initializer_list<Complex> amplitudes) {
    Vector v(static_cast<Index>(amplitudes.size()));
    Index i = 0;
    for (const Complex& a : amplitudes) {
        v(i++) = a;
    }
    return StateVector::normalized(v);
}

}  // namespace qcv::test
