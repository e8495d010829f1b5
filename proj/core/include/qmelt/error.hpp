// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types shared by every qmelt module.
 *
 * Each failure class maps onto one CLI exit code (see tools/qmelt.cpp):
 * usage/config problems exit 1, data problems exit 2, numerical failures
 * exit 3.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qmelt {

/// Precondition violation on an API argument (bad index, wrong length, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size limit (e.g. full unitary of a wide register).
class ResourceLimit : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A feature column has zero variance on the fitting set.
class DegenerateFeature : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration document.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed data file (dataset, result table, model document).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite value encountered during optimization or evaluation.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qmelt
