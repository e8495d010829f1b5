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
 * Shortest round-trip text formatting for doubles, shared by every writer so
 * that emitted tables re-parse to identical values.
 */

#pragma once

#include <string>
#include <string_view>

namespace qmelt {

std::string format_double(double value);

/// Strict parse of a full string; throws std::invalid_argument on trailing
/// characters or an empty cell.
double parse_double(std::string_view text);

} // namespace qmelt
