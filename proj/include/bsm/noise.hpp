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
 * Visibility-driven degradation of the Bell and ancilla inputs.
 *
 * Modelling assumption: imperfect coherence is a mixture of the ideal state
 * with the incoherent mixture of its constituent product terms. A finite H/V
 * visibility admixes the product terms of the complementary Bell pair
 * (Phi <-> Psi). Both channels act independently.
 */
#pragma once

#include "bsm/schemes.hpp"

namespace bsm {

struct NoiseConfig {
    double v_bell_hv = 0.975;
    double v_bell_pm = 0.954;
    double v_aux_hv = 0.9899;

    void validate() const;
};

/// v |Bell><Bell| + (1 - v) * (equal mixture of the two product terms).
MixedState dephase_bell(BellKind kind, double v);
/// v |Aux><Aux| + (1 - v) * (equal mixture of |2_H> and |2_V>).
MixedState dephase_aux(double v);

/// dephase_bell with coherence v_bell_pm, then a (1 - v_bell_hv)/2 admixture
/// of the complementary product terms.
MixedState noisy_bell(BellKind kind, const NoiseConfig &cfg);
MixedState noisy_aux(const NoiseConfig &cfg);

BellDistributions noisy_distributions(SchemeKind scheme, const NoiseConfig &cfg);

enum class CorrelationBasis { HV, PM };

/// Two-photon correlation visibility of a state on modes a, b in the given
/// basis, (P_same - P_diff) / (P_same + P_diff). The +/- basis is reached by
/// a half-wave plate at 22.5 degrees on both photons.
double correlation_visibility(const MixedState &bell, CorrelationBasis basis);

} // namespace bsm
