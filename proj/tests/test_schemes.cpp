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

#include "bsm/schemes.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "bsm/errors.hpp"

using namespace bsm;

namespace {

double labelled_mass(const Distribution &d, const ClassificationTable &t, Outcome label) {
    double sum = 0.0;
    for (const auto &[pattern, p] : d) {
        if (classify(pattern, t) == label) {
            sum += p;
        }
    }
    return sum;
}

double total(const Distribution &d) {
    double s = 0.0;
    for (const auto &[pattern, p] : d) {
        s += p;
    }
    return s;
}

} // namespace

TEST(MakeBell, Amplitudes) {
    const double s = 1.0 / std::numbers::sqrt2;
    const auto psi = make_bell(BellKind::PsiPlus);
    EXPECT_NEAR(std::abs(psi.amplitude(FockBasisState{1, 0, 0, 1}) - s), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(psi.amplitude(FockBasisState{0, 1, 1, 0}) - s), 0.0, 1e-15);

    const auto phi = make_bell(BellKind::PhiMinus);
    EXPECT_NEAR(std::abs(phi.amplitude(FockBasisState{1, 0, 1, 0}) - s), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(phi.amplitude(FockBasisState{0, 1, 0, 1}) + s), 0.0, 1e-15);

    for (BellKind a : kAllBellKinds) {
        for (BellKind b : kAllBellKinds) {
            EXPECT_NEAR(std::abs(inner_product(make_bell(a), make_bell(b))), a == b ? 1.0 : 0.0, 1e-15);
        }
    }
}

TEST(MakeAux, TwoPhotonsHalfEach) {
    const auto aux = make_aux();
    EXPECT_NEAR(aux.norm_squared(), 1.0, 1e-15);
    EXPECT_NEAR(std::norm(aux.amplitude(FockBasisState{2, 0})), 0.5, 1e-15);
    EXPECT_NEAR(std::norm(aux.amplitude(FockBasisState{0, 2})), 0.5, 1e-15);
    for (const auto &[basis, amp] : aux.terms()) {
        EXPECT_EQ(basis.total(), 2);
    }
}

TEST(IdealDistribution, StandardPsiPlus) {
    const auto d = ideal_distribution(SchemeKind::Standard, BellKind::PsiPlus);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d.at(FockBasisState{1, 1, 0, 0}), 0.5, 1e-12);
    EXPECT_NEAR(d.at(FockBasisState{0, 0, 1, 1}), 0.5, 1e-12);
}

TEST(IdealDistribution, StandardPhiPlusAndMinusShareSupport) {
    const auto plus = ideal_distribution(SchemeKind::Standard, BellKind::PhiPlus);
    const auto minus = ideal_distribution(SchemeKind::Standard, BellKind::PhiMinus);
    ASSERT_EQ(plus.size(), 4u);
    for (const auto &pattern : {FockBasisState{2, 0, 0, 0}, FockBasisState{0, 2, 0, 0}, FockBasisState{0, 0, 2, 0},
                                FockBasisState{0, 0, 0, 2}}) {
        EXPECT_NEAR(plus.at(pattern), 0.25, 1e-12);
        EXPECT_NEAR(minus.at(pattern), 0.25, 1e-12);
    }
}

TEST(IdealDistribution, EnhancedPsiMinusPhotonSplit) {
    const auto d = ideal_distribution(SchemeKind::Enhanced, BellKind::PsiMinus);
    EXPECT_NEAR(total(d), 1.0, 1e-10);
    for (const auto &[pattern, p] : d) {
        EXPECT_EQ(pattern[0] + pattern[1], 1) << to_key(pattern);
        EXPECT_EQ(pattern[2] + pattern[3] + pattern[4] + pattern[5], 3) << to_key(pattern);
    }
}

TEST(IdealDistribution, AllNormalizedWithFourPhotons) {
    for (auto scheme : {SchemeKind::Standard, SchemeKind::Enhanced}) {
        const auto dists = ideal_distributions(scheme);
        for (const auto &d : dists) {
            EXPECT_NEAR(total(d), 1.0, 1e-10);
            for (const auto &[pattern, p] : d) {
                EXPECT_EQ(pattern.total(), expected_photons(scheme));
                EXPECT_EQ(pattern.size(), detection_modes(scheme).size());
            }
        }
        // The concurrent evaluation equals the one-at-a-time one.
        for (BellKind k : kAllBellKinds) {
            EXPECT_EQ(dists[static_cast<int>(k)], ideal_distribution(scheme, k));
        }
    }
}

TEST(Classifier, StandardTable) {
    const auto dists = ideal_distributions(SchemeKind::Standard);
    const auto t = build_classifier(SchemeKind::Standard, dists);
    int psi_plus = 0;
    int psi_minus = 0;
    for (const auto &[pattern, label] : t.entries()) {
        psi_plus += label == Outcome::PsiPlus;
        psi_minus += label == Outcome::PsiMinus;
        EXPECT_NE(label, Outcome::PhiPlus);
        EXPECT_NE(label, Outcome::PhiMinus);
    }
    EXPECT_EQ(psi_plus, 2);
    EXPECT_EQ(psi_minus, 2);
    EXPECT_NEAR(labelled_mass(dists[0], t, Outcome::PsiPlus), 1.0, 1e-12);
    EXPECT_NEAR(labelled_mass(dists[2], t, Outcome::PhiPlus), 0.0, 1e-12);
}

TEST(Classifier, EnhancedTable) {
    const auto dists = ideal_distributions(SchemeKind::Enhanced);
    const auto t = build_classifier(SchemeKind::Enhanced, dists);
    EXPECT_NEAR(labelled_mass(dists[0], t, Outcome::PsiPlus), 1.0, 1e-12);
    EXPECT_NEAR(labelled_mass(dists[1], t, Outcome::PsiMinus), 1.0, 1e-12);
    EXPECT_NEAR(labelled_mass(dists[2], t, Outcome::PhiPlus), 0.25, 1e-12);
    EXPECT_NEAR(labelled_mass(dists[3], t, Outcome::PhiMinus), 0.25, 1e-12);
    std::set<Outcome> labels;
    for (const auto &[pattern, label] : t.entries()) {
        labels.insert(label);
    }
    EXPECT_EQ(labels.size(), 5u);
}

TEST(Classifier, DegenerateToleranceMakesEverythingAmbiguous) {
    const auto t = build_classifier(SchemeKind::Enhanced, 0.5);
    for (const auto &[pattern, label] : t.entries()) {
        EXPECT_EQ(label, Outcome::Ambiguous);
    }
}

TEST(Classifier, StableUnderTolerance) {
    for (auto scheme : {SchemeKind::Standard, SchemeKind::Enhanced}) {
        EXPECT_EQ(build_classifier(scheme, 1e-12).entries(), build_classifier(scheme, 1e-9).entries());
    }
}

TEST(Classifier, CoversEveryReachablePattern) {
    const auto dists = ideal_distributions(SchemeKind::Enhanced);
    const auto t = build_classifier(SchemeKind::Enhanced, dists);
    std::set<FockBasisState> reachable;
    for (const auto &d : dists) {
        for (const auto &[pattern, p] : d) {
            reachable.insert(pattern);
        }
    }
    EXPECT_EQ(t.entries().size(), reachable.size());
    EXPECT_LE(t.entries().size(), 126u); // C(4 + 5, 5)
}

TEST(Classify, Examples) {
    const auto std_table = build_classifier(SchemeKind::Standard);
    EXPECT_EQ(classify(FockBasisState{1, 1, 0, 0}, std_table), Outcome::PsiPlus);
    EXPECT_EQ(classify(FockBasisState{1, 1, 1, 0}, std_table), Outcome::Ambiguous);
    EXPECT_THROW(classify(FockBasisState{1, 1, 0, 0, 0, 0}, std_table), ValidationError);

    const auto enh = build_classifier(SchemeKind::Enhanced);
    EXPECT_EQ(classify(FockBasisState{0, 0, 4, 0, 0, 0}, enh), Outcome::Ambiguous);
    EXPECT_EQ(classify(FockBasisState{0, 0, 2, 0, 2, 0}, enh), Outcome::Ambiguous);
}

TEST(ClassifierProperty, ExactSuccessAndNoFalseLabels) {
    for (auto [scheme, expect] : {std::pair{SchemeKind::Standard, 0.5}, std::pair{SchemeKind::Enhanced, 0.625}}) {
        const auto dists = ideal_distributions(scheme);
        const auto t = build_classifier(scheme, dists);
        double avg = 0.0;
        for (BellKind k : kAllBellKinds) {
            const auto &d = dists[static_cast<int>(k)];
            avg += labelled_mass(d, t, outcome_of(k)) / 4.0;
            for (BellKind other : kAllBellKinds) {
                if (other != k) {
                    EXPECT_EQ(labelled_mass(d, t, outcome_of(other)), 0.0);
                }
            }
        }
        EXPECT_NEAR(avg, expect, 1e-12);
    }
}

TEST(Names, RoundTrip) {
    for (BellKind k : kAllBellKinds) {
        EXPECT_EQ(parse_bell_kind(to_string(k)), k);
        EXPECT_EQ(parse_outcome(to_string(outcome_of(k))), outcome_of(k));
    }
    EXPECT_EQ(parse_outcome("ambiguous"), Outcome::Ambiguous);
    EXPECT_EQ(parse_scheme("standard"), SchemeKind::Standard);
    EXPECT_THROW(parse_scheme("fancy"), ConfigError);
    EXPECT_THROW(parse_bell_kind("psi"), ConfigError);
}
