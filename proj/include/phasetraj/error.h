// Copyright 2026 The phasetraj Authors
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

#ifndef PHASETRAJ_ERROR_H
#define PHASETRAJ_ERROR_H

#include <stdexcept>
#include <string>

namespace phasetraj {

/// Bad argument: wrong matrix dimension, rate outside [0, 1], unknown gate name.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Kraus set that fails completeness, sum_i K_i^dagger K_i = I.
class ChannelInvalid : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix that does not satisfy the density-matrix invariants.
class NotAState : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A geometric fit whose normal equations or conic solution is degenerate.
class DegenerateFit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Sinusoid amplitude below the noise floor; the phase is meaningless.
class UndetectableShift : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A numeric result that contradicts an identity the code relies on
/// (e.g. a Hermitian expectation value with a large imaginary part).
class InternalConsistency : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A file that cannot be opened, read or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace phasetraj

#endif
