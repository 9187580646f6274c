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
 * Figures of merit of a Bell-state measurement: correct / false / ambiguous
 * probabilities, discrimination fidelity and total variation distance.
 */
#pragma once

#include <array>
#include <optional>

#include "bsm/schemes.hpp"

namespace bsm {

struct StateMetrics {
    double p_c = 0.0;
    double p_f = 0.0;
    double p_amb = 0.0;
    std::optional<double> mdf; ///< absent when p_c + p_f == 0
    double tvd = 0.0;
};

struct MetricsReport {
    double p_c = 0.0;
    double p_f = 0.0;
    double p_amb = 0.0;
    std::optional<double> mdf;
    double tvd = 0.0; ///< uniform mean over the four inputs
    std::array<StateMetrics, 4> per_state;
};

/// Conditions `dist` on patterns carrying exactly `total` photons. Throws
/// ValidationError if no mass survives.
Distribution post_select(const Distribution &dist, int total);

/// Probability that input `kind` yields its own label.
double p_correct(const Distribution &dist, BellKind kind, const ClassificationTable &table);
/// Probability that input `kind` yields a different Bell label.
double p_false(const Distribution &dist, BellKind kind, const ClassificationTable &table);
/// Probability of an inconclusive label (including unseen patterns).
double p_ambiguous(const Distribution &dist, const ClassificationTable &table);

/// Averages over the four Bell inputs.
double p_correct(const BellDistributions &dists, const ClassificationTable &table);
double p_false(const BellDistributions &dists, const ClassificationTable &table);

std::optional<double> mdf(double p_c, double p_f);

/// Half the L1 distance; keys missing on either side count as zero.
double tvd(const Distribution &measured, const Distribution &expected);

/// Full report. `measured` is post-selected on the scheme's photon number
/// before any metric is evaluated.
MetricsReport evaluate(const BellDistributions &measured, const BellDistributions &expected,
                       const ClassificationTable &table);

} // namespace bsm
