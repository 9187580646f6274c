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
 * Optical elements as mode unitaries and mode routings.
 */
#pragma once

#include <string>

#include "bsm/fock.hpp"

namespace bsm {

enum class WaveplateKind { Half, Quarter };

struct WaveplateSpec {
    WaveplateKind kind;
    double angle; ///< fast-axis angle in radians

    [[nodiscard]] double retardance() const;
};

double degrees(double deg);

/// 50:50 beam splitter between two spatial modes, polarization preserving.
/// Uses the symmetric convention (1/sqrt2)[[1, i], [i, 1]] on H and on V; the
/// outputs keep the input labels (rename them with ModeRouting).
ModeUnitary balanced_bs(const std::string &spatial1, const std::string &spatial2);

/// Retarder R(theta) diag(1, e^{i delta}) R(-theta) on (H, V) of one spatial mode.
ModeUnitary waveplate(const std::string &spatial, const WaveplateSpec &spec);

/// Ideal polarizing beam splitter: (in,H) -> (out_h,H), (in,V) -> (out_v,V).
ModeRouting pbs_split(const std::string &spatial_in, const std::string &spatial_out_h,
                      const std::string &spatial_out_v);

} // namespace bsm
