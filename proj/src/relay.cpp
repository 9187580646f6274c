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

#include "bsm/relay.hpp"

#include <cmath>

#include "bsm/errors.hpp"

namespace bsm {

double relay_success(double p_c, int segments, RelayMode mode) {
    if (segments < 1) {
        throw ValidationError("a relay needs at least one segment");
    }
    if (!(p_c >= 0.0 && p_c <= 1.0)) {
        throw ValidationError("p_c must lie in [0, 1]");
    }
    if (mode == RelayMode::Memory) {
        return std::pow(p_c, std::log2(static_cast<double>(segments)));
    }
    return std::pow(p_c, segments - 1);
}

RelayCurve curve(double p_c, int n_max, RelayMode mode, std::string label) {
    if (n_max < 1) {
        throw ValidationError("n_max must be at least 1");
    }
    RelayCurve c{std::move(label), p_c, mode, {}};
    c.points.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        c.points.emplace_back(n, relay_success(p_c, n, mode));
    }
    return c;
}

std::vector<RelayCurve> preset_curves(int n_max, RelayMode mode) {
    std::vector<RelayCurve> curves;
    for (const auto &preset : kRelayPresets) {
        curves.push_back(curve(preset.p_c, n_max, mode, preset.label));
    }
    return curves;
}

} // namespace bsm
