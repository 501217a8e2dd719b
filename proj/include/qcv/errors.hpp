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

#include <stdexcept>
#include <string>

namespace qcv {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A vector with norm below the construction cutoff cannot be normalized.
class ZeroVectorError : public Error {
  public:
    using Error::Error;
};

/// Operands live in Hilbert spaces of different dimension.
class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

/// An operation required a Hermitian operator and did not get one.
class NotHermitianError : public Error {
  public:
    using Error::Error;
};

/// The contextual-value denominator fell below the overlap cutoff: the
/// outcome is excluded from the sample space (or a/b conspire to cancel).
class DegenerateDenominatorError : public Error {
  public:
    using Error::Error;
};

/// An operator handed to the product rule is not diagonal in the context.
class NotInSubalgebraError : public Error {
  public:
    using Error::Error;
};

/// A precondition on plain arguments (dimension range, counts, ...) failed.
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

}  // namespace qcv
