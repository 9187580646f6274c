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

#include <gtest/gtest.h>

#include "bsm/errors.hpp"
#include "bsm/metrics.hpp"

using namespace bsm;

namespace {

constexpr Polarization H = Polarization::H;
constexpr Polarization V = Polarization::V;

const std::vector<ModeLabel> kAB = {{"a", H}, {"a", V}, {"b", H}, {"b", V}};
const std::vector<ModeLabel> kE = {{"e", H}, {"e", V}};

const double kGrid[] = {1.0, 0.99, 0.95, 0.9, 0.8};

MetricsReport report(SchemeKind scheme, const NoiseConfig &noise) {
    return evaluate(noisy_distributions(scheme, noise), ideal_distributions(scheme), build_classifier(scheme));
}

} // namespace

TEST(DephaseBell, Endpoints) {
    const auto pure = dephase_bell(BellKind::PhiPlus, 1.0);
    double w = 0.0;
    for (const auto &c : pure.components()) {
        w += c.weight;
    }
    EXPECT_NEAR(w, 1.0, 1e-15);
    EXPECT_NEAR(correlation_visibility(pure, CorrelationBasis::PM), 1.0, 1e-12);

    const auto flat = dephase_bell(BellKind::PhiPlus, 0.0);
    const auto d = probability_distribution(flat, kAB);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d.at(FockBasisState{1, 0, 1, 0}), 0.5, 1e-15);
    EXPECT_NEAR(d.at(FockBasisState{0, 1, 0, 1}), 0.5, 1e-15);
    EXPECT_NEAR(correlation_visibility(flat, CorrelationBasis::PM), 0.0, 1e-12);
    EXPECT_NEAR(correlation_visibility(flat, CorrelationBasis::HV), 1.0, 1e-12);

    EXPECT_THROW(dephase_bell(BellKind::PhiPlus, 1.2), ValidationError);
}

TEST(DephaseBell, PlusMinusVisibilityIsTheParameter) {
    for (BellKind k : kAllBellKinds) {
        for (double v : {0.954, 0.8, 0.5}) {
            EXPECT_NEAR(correlation_visibility(dephase_bell(k, v), CorrelationBasis::PM), v, 1e-12);
            EXPECT_NEAR(correlation_visibility(dephase_bell(k, v), CorrelationBasis::HV), 1.0, 1e-12);
        }
    }
}

TEST(NoisyBell, HvVisibilityIsTheParameter) {
    const NoiseConfig cfg{0.975, 0.954, 1.0};
    for (BellKind k : kAllBellKinds) {
        const auto s = noisy_bell(k, cfg);
        EXPECT_NEAR(correlation_visibility(s, CorrelationBasis::HV), 0.975, 1e-12);
        // The flip admixture carries no +/- correlation, so the +/- contrast
        // shrinks by its weight.
        EXPECT_NEAR(correlation_visibility(s, CorrelationBasis::PM), 0.954 * (1.0 - 0.0125), 1e-12);
    }
}

TEST(DephaseAux, Endpoints) {
    const auto pure = dephase_aux(1.0);
    const auto flat = dephase_aux(0.0);
    const auto dp = probability_distribution(pure, kE);
    const auto df = probability_distribution(flat, kE);
    EXPECT_EQ(dp.size(), 2u);
    EXPECT_NEAR(df.at(FockBasisState{2, 0}), 0.5, 1e-15);
    EXPECT_NEAR(df.at(FockBasisState{0, 2}), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(pure.components().front().state, make_aux())), 1.0, 1e-15);
}

TEST(DephaseAux, LowersPhiPlusClassifiableFraction) {
    const auto table = build_classifier(SchemeKind::Enhanced);
    const auto bell = make_bell(BellKind::PhiPlus);
    const auto ideal = detection_distribution(SchemeKind::Enhanced, bell, dephase_aux(1.0));
    const auto noisy = detection_distribution(SchemeKind::Enhanced, bell, dephase_aux(0.9899));
    EXPECT_LT(p_correct(noisy, BellKind::PhiPlus, table), p_correct(ideal, BellKind::PhiPlus, table));
    EXPECT_GT(p_false(noisy, BellKind::PhiPlus, table), 0.0);
}

TEST(NoiseProperty, MonotoneInEveryVisibility) {
    for (auto scheme : {SchemeKind::Standard, SchemeKind::Enhanced}) {
        for (int channel = 0; channel < 3; ++channel) {
            double prev = 2.0;
            for (double v : kGrid) {
                NoiseConfig cfg{1.0, 1.0, 1.0};
                (channel == 0 ? cfg.v_bell_hv : channel == 1 ? cfg.v_bell_pm : cfg.v_aux_hv) = v;
                const double p_c = report(scheme, cfg).p_c;
                EXPECT_LE(p_c, prev + 1e-12) << to_string(scheme) << " channel " << channel << " v " << v;
                prev = p_c;
            }
        }
        double prev = 2.0;
        for (double v : kGrid) {
            const double p_c = report(scheme, {v, v, v}).p_c;
            EXPECT_LE(p_c, prev + 1e-12);
            prev = p_c;
        }
    }
}

TEST(NoiseProperty, EnhancedNeverWorse) {
    for (double a : kGrid) {
        for (double b : kGrid) {
            for (double c : kGrid) {
                const NoiseConfig cfg{a, b, c};
                EXPECT_GE(report(SchemeKind::Enhanced, cfg).p_c, report(SchemeKind::Standard, cfg).p_c - 1e-12);
            }
        }
    }
}

TEST(NoiseProperty, AnyImperfectionCausesFalseLabels) {
    EXPECT_NEAR(*report(SchemeKind::Enhanced, {1.0, 1.0, 1.0}).mdf, 1.0, 1e-12);
    for (int channel = 0; channel < 3; ++channel) {
        NoiseConfig cfg{1.0, 1.0, 1.0};
        (channel == 0 ? cfg.v_bell_hv : channel == 1 ? cfg.v_bell_pm : cfg.v_aux_hv) = 0.99;
        EXPECT_LT(*report(SchemeKind::Enhanced, cfg).mdf, 1.0) << "channel " << channel;
    }
}

TEST(NoisyDistributions, DefaultsStayBetweenBounds) {
    const auto r = report(SchemeKind::Enhanced, NoiseConfig{});
    EXPECT_GT(r.p_c, 0.5);
    EXPECT_LT(r.p_c, 0.625);
    for (const auto &s : r.per_state) {
        EXPECT_NEAR(s.p_c + s.p_f + s.p_amb, 1.0, 1e-12);
    }
}
