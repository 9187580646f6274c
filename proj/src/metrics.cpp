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

#include "bsm/errors.hpp"

namespace bsm {

Distribution post_select(const Distribution &dist, int total) {
    Distribution out;
    double mass = 0.0;
    for (const auto &[pattern, p] : dist) {
        if (pattern.total() == total) {
            out.emplace(pattern, p);
            mass += p;
        }
    }
    if (mass <= 0.0) {
        throw ValidationError("no probability mass survives post-selection on " +
                              std::to_string(total) + " photons");
    }
    for (auto &[pattern, p] : out) {
        p /= mass;
    }
    return out;
}

double p_correct(const Distribution &dist, BellKind kind, const ClassificationTable &table) {
    const Outcome want = outcome_of(kind);
    double sum = 0.0;
    for (const auto &[pattern, p] : dist) {
        if (classify(pattern, table) == want) {
            sum += p;
        }
    }
    return sum;
}

double p_false(const Distribution &dist, BellKind kind, const ClassificationTable &table) {
    const Outcome want = outcome_of(kind);
    double sum = 0.0;
    for (const auto &[pattern, p] : dist) {
        const Outcome got = classify(pattern, table);
        if (got != want && got != Outcome::Ambiguous) {
            sum += p;
        }
    }
    return sum;
}

double p_ambiguous(const Distribution &dist, const ClassificationTable &table) {
    double sum = 0.0;
    for (const auto &[pattern, p] : dist) {
        if (classify(pattern, table) == Outcome::Ambiguous) {
            sum += p;
        }
    }
    return sum;
}

double p_correct(const BellDistributions &dists, const ClassificationTable &table) {
    double sum = 0.0;
    for (BellKind k : kAllBellKinds) {
        sum += p_correct(dists[static_cast<int>(k)], k, table);
    }
    return sum / 4.0;
}

double p_false(const BellDistributions &dists, const ClassificationTable &table) {
    double sum = 0.0;
    for (BellKind k : kAllBellKinds) {
        sum += p_false(dists[static_cast<int>(k)], k, table);
    }
    return sum / 4.0;
}

std::optional<double> mdf(double p_c, double p_f) {
    if (p_c + p_f <= 0.0) {
        return std::nullopt;
    }
    return p_c / (p_c + p_f);
}

double tvd(const Distribution &measured, const Distribution &expected) {
    double sum = 0.0;
    auto it_m = measured.begin();
    auto it_e = expected.begin();
    // Merge walk in canonical key order.
    while (it_m != measured.end() || it_e != expected.end()) {
        if (it_e == expected.end() || (it_m != measured.end() && it_m->first < it_e->first)) {
            sum += std::abs(it_m->second);
            ++it_m;
        } else if (it_m == measured.end() || it_e->first < it_m->first) {
            sum += std::abs(it_e->second);
            ++it_e;
        } else {
            sum += std::abs(it_m->second - it_e->second);
            ++it_m;
            ++it_e;
        }
    }
    return sum / 2.0;
}

MetricsReport evaluate(const BellDistributions &measured, const BellDistributions &expected,
                       const ClassificationTable &table) {
    const int total = expected_photons(table.scheme());
    MetricsReport report;
    for (BellKind k : kAllBellKinds) {
        const int i = static_cast<int>(k);
        const Distribution dist = post_select(measured[i], total);
        auto &s = report.per_state[i];
        s.p_c = p_correct(dist, k, table);
        s.p_f = p_false(dist, k, table);
        s.p_amb = p_ambiguous(dist, table);
        s.mdf = mdf(s.p_c, s.p_f);
        s.tvd = tvd(dist, expected[i]);
        report.p_c += s.p_c / 4.0;
        report.p_f += s.p_f / 4.0;
        report.p_amb += s.p_amb / 4.0;
        report.tvd += s.tvd / 4.0;
    }
    report.mdf = mdf(report.p_c, report.p_f);
    return report;
}

} // namespace bsm
