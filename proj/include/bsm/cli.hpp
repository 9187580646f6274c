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
 * Command implementations behind the `bsm` executable. Every command is a
 * pure function of its RunConfig and returns the artifacts to write, so
 * identical configs (including the seed) give byte-identical output.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bsm/detector.hpp"
#include "bsm/noise.hpp"
#include "bsm/relay.hpp"
#include "bsm/schemes.hpp"

namespace bsm::cli {

enum class Format { Json, Csv };

struct RunConfig {
    SchemeKind scheme = SchemeKind::Enhanced;
    std::optional<BellKind> input; ///< nullopt means all four inputs
    std::optional<NoiseConfig> noise;
    std::optional<PnrConfig> pnr;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed; ///< overrides pnr->seed when set
    std::string output; ///< empty: standard output
    Format format = Format::Json;

    std::optional<std::string> table_path; ///< metrics: classification table override
    std::vector<double> relay_p_c;         ///< relay: curves in addition to the presets
    int relay_n_max = 20;
    RelayMode relay_mode = RelayMode::Memoryless;

    /// Throws ConfigError.
    void validate() const;
};

/// Fields mirror RunConfig: scheme, input, noise{...}, pnr{k, eta, seed},
/// shots, seed, output, format, table, relay{p_c[], n_max, mode}.
RunConfig config_from_json(const nlohmann::json &j);

struct Artifact {
    std::string path; ///< empty: standard output
    std::string content;
};

std::vector<Artifact> cmd_distribution(const RunConfig &cfg);
std::vector<Artifact> cmd_metrics(const RunConfig &cfg);
std::vector<Artifact> cmd_classify_table(const RunConfig &cfg);
std::vector<Artifact> cmd_relay(const RunConfig &cfg);

/// Independent RNG stream for one Bell input.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// "out.json" + "psi+" -> "out_psi+.json"; empty stays empty.
std::string suffixed_path(const std::string &path, const std::string &suffix);

} // namespace bsm::cli
