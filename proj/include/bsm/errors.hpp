// Copyright 2026 The bsm-sim Authors
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

namespace bsm {

/// Unknown, duplicated or colliding mode labels.
class RegistryError : public std::invalid_argument {
  public:
    explicit RegistryError(const std::string &what) : std::invalid_argument(what) {}
};

/// A value violates its type invariant (non-unitary matrix, unnormalized state, ...).
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Invalid user configuration (CLI flags or config file).
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace bsm
