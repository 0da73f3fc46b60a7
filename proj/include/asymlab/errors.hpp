// Copyright 2026 The asymlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace asymlab {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad index, size mismatch, malformed argument.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Mathematical domain violation (e.g. a bound evaluated outside its range).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A state, channel or circuit failed its structural invariants.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Density matrix with eigenvalues below the clamp floor.
class InvalidStateError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Requested problem size exceeds a configured capacity limit.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Operation called on an input that does not satisfy its precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Experiment configuration could not be parsed or validated.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace asymlab
