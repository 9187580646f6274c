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

#include "bsm/detector.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bsm/errors.hpp"

namespace bsm {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Ideal distribution flattened for inverse-CDF draws.
struct SamplingTable {
    std::vector<FockBasisState> patterns;
    std::vector<double> cumulative;
    int total = 0;

    explicit SamplingTable(const Distribution &ideal) {
        if (ideal.empty()) {
            throw ValidationError("cannot sample from an empty distribution");
        }
        double acc = 0.0;
        total = ideal.begin()->first.total();
        for (const auto &[pattern, p] : ideal) {
            if (p < 0.0) {
                throw ValidationError("negative probability in sampling distribution");
            }
            if (pattern.total() != total) {
                throw ValidationError("sampling distribution mixes different photon numbers");
            }
            acc += p;
            patterns.push_back(pattern);
            cumulative.push_back(acc);
        }
        if (std::abs(acc - 1.0) > 1e-9) {
            throw ValidationError("sampling distribution is not normalized");
        }
    }

    [[nodiscard]] std::size_t draw(double u) const {
        const double target = u * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        return std::min(static_cast<std::size_t>(it - cumulative.begin()), patterns.size() - 1);
    }
};

/// One shot. Returns the index of the detected pattern, or -1 if the shot
/// fails post-selection. Loss and collisions only ever lower a mode's count,
/// so a kept shot always reproduces the drawn pattern.
long detect_shot(const SamplingTable &table, const PnrConfig &cfg, std::uint64_t shot) {
    ShotRng rng(cfg.seed, shot);
    const std::size_t idx = table.draw(rng.uniform());
    const FockBasisState &pattern = table.patterns[idx];

    int observed_total = 0;
    std::uint64_t fired[16];
    for (std::size_t mode = 0; mode < pattern.size(); ++mode) {
        int distinct = 0;
        for (int photon = 0; photon < pattern[mode]; ++photon) {
            if (rng.uniform() >= cfg.eta) {
                continue;
            }
            const std::uint64_t det = rng.below(static_cast<std::uint64_t>(cfg.k));
            if (std::find(fired, fired + distinct, det) == fired + distinct) {
                fired[distinct++] = det;
            }
        }
        observed_total += distinct;
    }
    return observed_total == table.total ? static_cast<long>(idx) : -1;
}

CountRecord to_record(const SamplingTable &table, const std::vector<std::uint64_t> &counts,
                      std::uint64_t shots) {
    CountRecord rec;
    rec.shots = shots;
    rec.expected_total = table.total;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            rec.raw.emplace(table.patterns[i], counts[i]);
            rec.post_selected += counts[i];
        }
    }
    return rec;
}

void check_inputs(const Distribution &ideal, const PnrConfig &cfg, std::uint64_t shots) {
    cfg.validate();
    if (shots < 1) {
        throw ValidationError("shots must be at least 1");
    }
    for (const auto &[pattern, p] : ideal) {
        for (int n : pattern.occupations()) {
            if (n > 16) {
                throw ValidationError("more than 16 photons in one mode are not supported");
            }
        }
    }
}

} // namespace

void PnrConfig::validate() const {
    if (k < 1) {
        throw ValidationError("detector count k must be at least 1");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw ValidationError("efficiency eta must lie in [0, 1]");
    }
}

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t shot)
    : state_(mix64(seed ^ mix64(shot * kGolden + 0x632be59bd9b4e019ULL))) {}

std::uint64_t ShotRng::next() {
    state_ += kGolden;
    return mix64(state_);
}

double ShotRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t ShotRng::below(std::uint64_t n) {
    // Lemire's multiply-shift with rejection.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        const std::uint64_t threshold = -n % n;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double p_resolve(int n, int k) {
    if (n < 0 || k < 1) {
        throw ValidationError("p_resolve needs n >= 0 and k >= 1");
    }
    if (n > k) {
        return 0.0;
    }
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
        p *= static_cast<double>(k - j) / k;
    }
    return p;
}

double ppnr_factor(const FockBasisState &pattern, int k) {
    double f = 1.0;
    for (int n : pattern.occupations()) {
        f *= p_resolve(n, k);
    }
    return f;
}

CountRecord sample_serial(const Distribution &ideal, const PnrConfig &cfg, std::uint64_t shots) {
    check_inputs(ideal, cfg, shots);
    const SamplingTable table(ideal);
    std::vector<std::uint64_t> counts(table.patterns.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const long idx = detect_shot(table, cfg, shot);
        if (idx >= 0) {
            ++counts[static_cast<std::size_t>(idx)];
        }
    }
    return to_record(table, counts, shots);
}

CountRecord sample(const Distribution &ideal, const PnrConfig &cfg, std::uint64_t shots) {
    check_inputs(ideal, cfg, shots);
    const SamplingTable table(ideal);
    std::vector<std::uint64_t> counts(table.patterns.size(), 0);
    const auto n_shots = static_cast<long long>(shots);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(counts.size(), 0);
#pragma omp for schedule(static) nowait
        for (long long shot = 0; shot < n_shots; ++shot) {
            const long idx = detect_shot(table, cfg, static_cast<std::uint64_t>(shot));
            if (idx >= 0) {
                ++local[static_cast<std::size_t>(idx)];
            }
        }
#pragma omp critical(bsm_sample_merge)
        for (std::size_t i = 0; i < counts.size(); ++i) {
            counts[i] += local[i];
        }
    }
    return to_record(table, counts, shots);
}

Distribution correct_counts(const CountRecord &record, int k) {
    Distribution out;
    double total = 0.0;
    for (const auto &[pattern, count] : record.raw) {
        if (count == 0) {
            continue;
        }
        const double f = ppnr_factor(pattern, k);
        if (f <= 0.0) {
            throw ValidationError("pattern " + to_key(pattern) +
                                  " was counted but cannot be resolved with k = " + std::to_string(k));
        }
        const double w = static_cast<double>(count) / f;
        out.emplace(pattern, w);
        total += w;
    }
    if (total <= 0.0) {
        throw ValidationError("no post-selected counts to correct");
    }
    for (auto &[pattern, w] : out) {
        w /= total;
    }
    return out;
}

Distribution corrected_standard_errors(const CountRecord &record, int k) {
    const Distribution corrected = correct_counts(record, k);
    const auto n = static_cast<double>(record.post_selected);
    double s = 0.0;
    for (const auto &[pattern, count] : record.raw) {
        s += static_cast<double>(count) / n / ppnr_factor(pattern, k);
    }
    Distribution se;
    for (const auto &[pi, fi] : corrected) {
        const double p_i = ppnr_factor(pi, k);
        double var = 0.0;
        for (const auto &[pj, count] : record.raw) {
            const double xj = static_cast<double>(count) / n;
            const double g = (pi == pj ? 1.0 / p_i : 0.0) - fi / ppnr_factor(pj, k);
            var += xj * g * g;
        }
        se.emplace(pi, std::sqrt(var / (n * s * s)));
    }
    return se;
}

} // namespace bsm
