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
 * JSON and CSV encodings of distributions, classification tables, metrics,
 * count records and relay curves, plus validators for re-parsed artifacts.
 *
 * Pattern keys are comma separated occupations in detection-mode order.
 * Probabilities are written with 12 significant digits.
 */
#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bsm/detector.hpp"
#include "bsm/metrics.hpp"
#include "bsm/noise.hpp"
#include "bsm/relay.hpp"

namespace bsm::io {

inline constexpr int kSchemaVersion = 1;

/// x rounded to `digits` significant decimal digits.
double round_sig(double x, int digits = 12);
std::string format_number(double x);

nlohmann::json to_json(const Distribution &dist);
Distribution distribution_from_json(const nlohmann::json &j);

nlohmann::json to_json(const NoiseConfig &cfg);
NoiseConfig noise_from_json(const nlohmann::json &j);
nlohmann::json to_json(const PnrConfig &cfg);
PnrConfig pnr_from_json(const nlohmann::json &j);

/// Raw counts, totals, config echo and the corrected distribution.
nlohmann::json to_json(const CountRecord &rec, const PnrConfig &cfg);

/// Table rows carry the ideal probability of each pattern for every input.
nlohmann::json to_json(const ClassificationTable &table, const BellDistributions &ideal);
ClassificationTable table_from_json(const nlohmann::json &j);

nlohmann::json to_json(const StateMetrics &m);
nlohmann::json to_json(const MetricsReport &report);

nlohmann::json to_json(const RelayCurve &c);

std::string distribution_csv(const Distribution &exact, const std::optional<Distribution> &corrected,
                             const std::optional<Distribution> &std_errors);
std::string table_csv(const ClassificationTable &table, const BellDistributions &ideal);
std::string metrics_csv(const MetricsReport &report);
std::string relay_csv(const RelayCurve &c);

/// Checks the invariants of any artifact produced by the CLI, dispatching on
/// its "kind" field. Throws ValidationError on the first violation.
void validate_artifact(const nlohmann::json &artifact);

} // namespace bsm::io
