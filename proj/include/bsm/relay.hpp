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

/**
 * @file
 * Success probability of an entanglement-swapping chain.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bsm {

enum class RelayMode {
    Memoryless, ///< p^(n-1): every intermediate swap must succeed
    Memory,     ///< p^(log2 n): regime-dependent scaling with quantum memories
};

struct RelayCurve {
    std::string label;
    double p_c = 0.0;
    RelayMode mode = RelayMode::Memoryless;
    std::vector<std::pair<int, double>> points; ///< (segments, success)
};

/// Throws ValidationError for n < 1 or p_c outside [0, 1].
double relay_success(double p_c, int segments, RelayMode mode = RelayMode::Memoryless);

RelayCurve curve(double p_c, int n_max, RelayMode mode = RelayMode::Memoryless, std::string label = {});

struct RelayPreset {
    const char *label;
    double p_c;
};

/// Ideal standard / enhanced success probabilities and the measured values
/// reported for the experimental realisation.
inline constexpr RelayPreset kRelayPresets[] = {
    {"theory-standard", 0.5},
    {"theory-enhanced", 0.625},
    {"experiment-standard", 0.481},
    {"experiment-enhanced", 0.579},
};

std::vector<RelayCurve> preset_curves(int n_max, RelayMode mode = RelayMode::Memoryless);

} // namespace bsm
