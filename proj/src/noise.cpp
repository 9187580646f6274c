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

#include "bsm/noise.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bsm/elements.hpp"
#include "bsm/errors.hpp"

namespace bsm {

namespace {

constexpr Polarization H = Polarization::H;
constexpr Polarization V = Polarization::V;

void check_visibility(double v, const char *name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError(std::string(name) + " must lie in [0, 1]");
    }
}

PureState product(Polarization pa, Polarization pb) {
    return PureState::from_creation_polynomial(ModeRegistry::from_spatial({"a", "b"}),
                                               {{Complex{1.0}, {{"a", pa}, {"b", pb}}}});
}

/// The two product terms |a_x b_y> of a Bell state.
std::array<PureState, 2> constituents(BellKind kind) {
    if (kind == BellKind::PsiPlus || kind == BellKind::PsiMinus) {
        return {product(H, V), product(V, H)};
    }
    return {product(H, H), product(V, V)};
}

BellKind complement(BellKind kind) {
    switch (kind) {
    case BellKind::PsiPlus:
        return BellKind::PhiPlus;
    case BellKind::PsiMinus:
        return BellKind::PhiMinus;
    case BellKind::PhiPlus:
        return BellKind::PsiPlus;
    case BellKind::PhiMinus:
        return BellKind::PsiMinus;
    }
    return kind;
}

} // namespace

void NoiseConfig::validate() const {
    check_visibility(v_bell_hv, "v_bell_hv");
    check_visibility(v_bell_pm, "v_bell_pm");
    check_visibility(v_aux_hv, "v_aux_hv");
}

MixedState dephase_bell(BellKind kind, double v) {
    check_visibility(v, "visibility");
    auto terms = constituents(kind);
    return MixedState({{v, make_bell(kind)}, {(1.0 - v) / 2.0, terms[0]}, {(1.0 - v) / 2.0, terms[1]}});
}

MixedState dephase_aux(double v) {
    check_visibility(v, "visibility");
    const auto reg = ModeRegistry::from_spatial({"e"});
    auto two_h = PureState::from_creation_polynomial(reg, {{Complex{1.0 / std::numbers::sqrt2}, {{"e", H}, {"e", H}}}});
    auto two_v = PureState::from_creation_polynomial(reg, {{Complex{1.0 / std::numbers::sqrt2}, {{"e", V}, {"e", V}}}});
    return MixedState({{v, make_aux()}, {(1.0 - v) / 2.0, two_h}, {(1.0 - v) / 2.0, two_v}});
}

MixedState noisy_bell(BellKind kind, const NoiseConfig &cfg) {
    cfg.validate();
    const double flip = (1.0 - cfg.v_bell_hv) / 2.0;
    std::vector<WeightedState> components;
    const MixedState dephased = dephase_bell(kind, cfg.v_bell_pm);
    for (const auto &c : dephased.components()) {
        components.push_back({(1.0 - flip) * c.weight, c.state});
    }
    for (const auto &wrong : constituents(complement(kind))) {
        components.push_back({flip / 2.0, wrong});
    }
    return MixedState(std::move(components));
}

MixedState noisy_aux(const NoiseConfig &cfg) {
    cfg.validate();
    return dephase_aux(cfg.v_aux_hv);
}

BellDistributions noisy_distributions(SchemeKind scheme, const NoiseConfig &cfg) {
    cfg.validate();
    const MixedState aux = noisy_aux(cfg);
    BellDistributions out;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < 4; ++k) {
        out[k] = detection_distribution(scheme, noisy_bell(static_cast<BellKind>(k), cfg), aux);
    }
    return out;
}

double correlation_visibility(const MixedState &bell, CorrelationBasis basis) {
    MixedState s = bell;
    if (basis == CorrelationBasis::PM) {
        const WaveplateSpec hwp{WaveplateKind::Half, degrees(22.5)};
        s = apply_unitary(s, waveplate("a", hwp));
        s = apply_unitary(s, waveplate("b", hwp));
    }
    const std::array<ModeLabel, 4> modes = {ModeLabel{"a", H}, ModeLabel{"a", V}, ModeLabel{"b", H},
                                            ModeLabel{"b", V}};
    const Distribution dist = probability_distribution(s, modes);
    auto prob = [&](const FockBasisState &p) {
        auto it = dist.find(p);
        return it == dist.end() ? 0.0 : it->second;
    };
    const double same = prob({1, 0, 1, 0}) + prob({0, 1, 0, 1});
    const double diff = prob({1, 0, 0, 1}) + prob({0, 1, 1, 0});
    return std::abs(same - diff) / (same + diff);
}

} // namespace bsm
