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
 * Pseudo photon-number-resolving detection: each detection mode is split
 * uniformly onto k binary detectors; the observed photon number of a mode is
 * the number of detectors that fired. Shots whose observed photon number
 * differs from the expected total are discarded (post-selection).
 */
#pragma once

#include <cstdint>
#include <map>

#include "bsm/fock.hpp"

namespace bsm {

struct PnrConfig {
    int k = 8;          ///< binary detectors per mode
    double eta = 0.886; ///< per-photon detection efficiency
    std::uint64_t seed = 0;

    void validate() const;
};

struct CountRecord {
    std::map<FockBasisState, std::uint64_t> raw;
    std::uint64_t shots = 0;
    std::uint64_t post_selected = 0;
    int expected_total = 0;
};

/// Counter-based generator: the stream for a shot depends only on
/// (seed, shot index), so sampling is reproducible under any scheduling.
class ShotRng {
  public:
    ShotRng(std::uint64_t seed, std::uint64_t shot);

    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform integer in [0, n), unbiased.
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

/// Probability that n photons routed uniformly onto k detectors all land on
/// distinct detectors: k! / ((k - n)! k^n). Zero when n > k.
double p_resolve(int n, int k);

/// Product of p_resolve over the modes of a pattern.
double ppnr_factor(const FockBasisState &pattern, int k);

/// Monte Carlo detection of `shots` draws from `ideal`. Parallel over shots;
/// the result is identical to sample_serial for the same inputs.
CountRecord sample(const Distribution &ideal, const PnrConfig &cfg, std::uint64_t shots);
/// Single-threaded reference implementation of sample.
CountRecord sample_serial(const Distribution &ideal, const PnrConfig &cfg, std::uint64_t shots);

/// Undoes the splitter bias: weight_i = raw_i / ppnr_factor_i, renormalized.
Distribution correct_counts(const CountRecord &record, int k);

/// Delta-method standard errors of the corrected frequencies, using the
/// observed counts as plug-in estimates.
Distribution corrected_standard_errors(const CountRecord &record, int k);

} // namespace bsm
