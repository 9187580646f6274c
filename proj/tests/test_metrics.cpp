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

#include "bsm/metrics.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bsm/errors.hpp"

using namespace bsm;

namespace {

Distribution random_distribution(std::mt19937_64 &rng, int patterns, int modes, int photons) {
    std::uniform_int_distribution<int> pick(0, modes - 1);
    std::exponential_distribution<double> w(1.0);
    Distribution d;
    double sum = 0.0;
    for (int i = 0; i < patterns; ++i) {
        std::vector<int> occ(static_cast<std::size_t>(modes), 0);
        for (int p = 0; p < photons; ++p) {
            ++occ[static_cast<std::size_t>(pick(rng))];
        }
        const double x = w(rng);
        d[FockBasisState(occ)] += x;
        sum += x;
    }
    for (auto &[pattern, p] : d) {
        p /= sum;
    }
    return d;
}

ClassificationTable random_table(std::mt19937_64 &rng, SchemeKind scheme, const Distribution &d) {
    std::uniform_int_distribution<int> label(0, 4);
    std::map<FockBasisState, Outcome> entries;
    for (const auto &[pattern, p] : d) {
        if (label(rng) != 4 || entries.empty()) {
            entries[pattern] = static_cast<Outcome>(label(rng));
        }
    }
    return ClassificationTable(scheme, 1e-12, std::move(entries));
}

} // namespace

TEST(Mdf, Examples) {
    EXPECT_DOUBLE_EQ(*mdf(0.5, 0.0), 1.0);
    EXPECT_NEAR(*mdf(0.481, 0.01133), 0.977, 5e-4);
    EXPECT_DOUBLE_EQ(*mdf(0.0, 0.3), 0.0);
    EXPECT_FALSE(mdf(0.0, 0.0).has_value());
}

TEST(Tvd, IdentityAndDisjoint) {
    const Distribution a{{FockBasisState{1, 1, 0, 0}, 0.5}, {FockBasisState{0, 0, 1, 1}, 0.5}};
    const Distribution b{{FockBasisState{2, 0, 0, 0}, 1.0}};
    EXPECT_DOUBLE_EQ(tvd(a, a), 0.0);
    EXPECT_DOUBLE_EQ(tvd(a, b), 1.0);
    EXPECT_DOUBLE_EQ(tvd(Distribution{}, b), 0.5);
}

TEST(TvdProperty, MetricAxioms) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_distribution(rng, 6, 3, 2);
        const auto y = random_distribution(rng, 6, 3, 2);
        const auto z = random_distribution(rng, 6, 3, 2);
        EXPECT_NEAR(tvd(x, y), tvd(y, x), 1e-15);
        EXPECT_LE(tvd(x, z), tvd(x, y) + tvd(y, z) + 1e-15);
        EXPECT_GE(tvd(x, y), 0.0);
        EXPECT_LE(tvd(x, y), 1.0 + 1e-15);
        EXPECT_EQ(tvd(x, x), 0.0);
    }
}

TEST(PostSelect, ConditionsOnTotal) {
    const Distribution d{{FockBasisState{1, 1}, 0.3}, {FockBasisState{1, 0}, 0.5}, {FockBasisState{2, 0}, 0.1}};
    const auto out = post_select(d, 2);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_DOUBLE_EQ(out.at(FockBasisState{1, 1}), 0.75);
    EXPECT_DOUBLE_EQ(out.at(FockBasisState{2, 0}), 0.25);
    EXPECT_THROW(post_select(d, 5), ValidationError);
}

TEST(Labels, FalseMassCountsAsFalse) {
    auto d = ideal_distribution(SchemeKind::Standard, BellKind::PsiPlus);
    const auto table = build_classifier(SchemeKind::Standard);
    for (auto &[pattern, p] : d) {
        p *= 0.9;
    }
    d[FockBasisState{1, 0, 0, 1}] += 0.1; // a psi- pattern
    EXPECT_NEAR(p_correct(d, BellKind::PsiPlus, table), 0.9, 1e-12);
    EXPECT_NEAR(p_false(d, BellKind::PsiPlus, table), 0.1, 1e-12);
    EXPECT_NEAR(p_ambiguous(d, table), 0.0, 1e-12);
}

TEST(Labels, AllAmbiguousTableGivesZero) {
    const auto table = build_classifier(SchemeKind::Enhanced, 0.5);
    const auto dists = ideal_distributions(SchemeKind::Enhanced);
    EXPECT_EQ(p_correct(dists, table), 0.0);
    EXPECT_EQ(p_false(dists, table), 0.0);
    const auto report = evaluate(dists, dists, table);
    EXPECT_NEAR(report.p_amb, 1.0, 1e-12);
    EXPECT_FALSE(report.mdf.has_value());
}

TEST(LabelsProperty, PartitionOfUnity) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> scheme_pick(0, 1);
    std::uniform_int_distribution<int> n_patterns(1, 12);
    std::uniform_int_distribution<int> bell(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto scheme = scheme_pick(rng) ? SchemeKind::Enhanced : SchemeKind::Standard;
        const int modes = static_cast<int>(detection_modes(scheme).size());
        const auto d = random_distribution(rng, n_patterns(rng), modes, expected_photons(scheme));
        const auto table = random_table(rng, scheme, random_distribution(rng, 8, modes, expected_photons(scheme)));
        const auto kind = static_cast<BellKind>(bell(rng));
        const double sum = p_correct(d, kind, table) + p_false(d, kind, table) + p_ambiguous(d, table);
        ASSERT_NEAR(sum, 1.0, 1e-12) << "trial " << trial;
    }
}

TEST(LabelsProperty, UniformNoiseCostsAtMostItsWeight) {
    const auto table = build_classifier(SchemeKind::Enhanced);
    const auto dists = ideal_distributions(SchemeKind::Enhanced);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const double eps = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        const auto noise = random_distribution(rng, 20, 6, 4);
        for (BellKind k : kAllBellKinds) {
            const auto &clean = dists[static_cast<int>(k)];
            Distribution mixed;
            for (const auto &[pattern, p] : clean) {
                mixed[pattern] += (1.0 - eps) * p;
            }
            for (const auto &[pattern, p] : noise) {
                mixed[pattern] += eps * p;
            }
            const double drop = p_correct(clean, k, table) - p_correct(mixed, k, table);
            EXPECT_LE(drop, eps + 1e-12);
        }
    }
}

TEST(Evaluate, AveragesPerState) {
    const auto table = build_classifier(SchemeKind::Enhanced);
    const auto expected = ideal_distributions(SchemeKind::Enhanced);
    auto measured = expected;
    measured[2][FockBasisState{0, 0, 0, 1, 2, 1}] += 0.05; // phi- pattern on phi+
    measured[0][FockBasisState{1, 0, 0, 0, 0, 0}] += 0.3;  // loss event, removed by post-selection

    const auto r = evaluate(measured, expected, table);
    double p_c = 0.0;
    double tvd_sum = 0.0;
    for (const auto &s : r.per_state) {
        EXPECT_NEAR(s.p_c + s.p_f + s.p_amb, 1.0, 1e-12);
        p_c += s.p_c / 4.0;
        tvd_sum += s.tvd / 4.0;
    }
    EXPECT_NEAR(r.p_c, p_c, 1e-15);
    EXPECT_NEAR(r.tvd, tvd_sum, 1e-15);
    EXPECT_NEAR(r.per_state[0].tvd, 0.0, 1e-12);
    EXPECT_NEAR(r.per_state[2].p_f, 0.05 / 1.05, 1e-12);
    EXPECT_NEAR(r.per_state[2].tvd, 0.05 / 1.05, 1e-12);
    EXPECT_NEAR(*r.per_state[0].mdf, 1.0, 1e-12);
    EXPECT_LT(*r.mdf, 1.0);
}

TEST(Evaluate, StandardPhiHasNoMdf) {
    const auto dists = ideal_distributions(SchemeKind::Standard);
    const auto r = evaluate(dists, dists, build_classifier(SchemeKind::Standard));
    EXPECT_NEAR(r.p_c, 0.5, 1e-12);
    EXPECT_FALSE(r.per_state[2].mdf.has_value());
    EXPECT_FALSE(r.per_state[3].mdf.has_value());
    EXPECT_DOUBLE_EQ(*r.mdf, 1.0);
    EXPECT_NEAR(r.tvd, 0.0, 1e-15);
}
