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

#include "bsm/cli.hpp"

#include <filesystem>
#include <fstream>

#include "bsm/errors.hpp"
#include "bsm/io.hpp"
#include "bsm/metrics.hpp"

namespace bsm::cli {

using nlohmann::json;

namespace {

std::vector<BellKind> selected_inputs(const RunConfig &cfg) {
    if (cfg.input) {
        return {*cfg.input};
    }
    return {kAllBellKinds.begin(), kAllBellKinds.end()};
}

BellDistributions exact_distributions(const RunConfig &cfg) {
    return cfg.noise ? noisy_distributions(cfg.scheme, *cfg.noise) : ideal_distributions(cfg.scheme);
}

PnrConfig stream_config(const RunConfig &cfg, BellKind kind) {
    PnrConfig pnr = *cfg.pnr;
    pnr.seed = derive_seed(cfg.seed.value_or(pnr.seed), static_cast<std::uint64_t>(kind));
    return pnr;
}

json config_echo(const RunConfig &cfg) {
    json j = {{"scheme", to_string(cfg.scheme)},
              {"input", cfg.input ? to_string(*cfg.input) : "all"},
              {"noise", cfg.noise ? io::to_json(*cfg.noise) : json(nullptr)},
              {"pnr", cfg.pnr ? io::to_json(*cfg.pnr) : json(nullptr)},
              {"shots", cfg.shots ? json(*cfg.shots) : json(nullptr)},
              {"seed", cfg.seed ? json(*cfg.seed) : json(nullptr)}};
    if (cfg.table_path) {
        j["table"] = *cfg.table_path;
    }
    return j;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

ClassificationTable load_table(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open classification table '" + path + "'");
    }
    try {
        return io::table_from_json(json::parse(in));
    } catch (const json::exception &e) {
        throw ConfigError("cannot parse classification table '" + path + "': " + e.what());
    } catch (const ValidationError &e) {
        throw ConfigError(e.what());
    }
}

} // namespace

void RunConfig::validate() const {
    try {
        if (noise) {
            noise->validate();
        }
        if (pnr) {
            pnr->validate();
        }
    } catch (const ValidationError &e) {
        throw ConfigError(e.what());
    }
    if (pnr.has_value() != shots.has_value()) {
        throw ConfigError("detector sampling needs --shots together with the detector settings");
    }
    if (shots && *shots < 1) {
        throw ConfigError("--shots must be at least 1");
    }
    if (relay_n_max < 1) {
        throw ConfigError("relay n_max must be at least 1");
    }
    for (double p : relay_p_c) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError("relay p_c must lie in [0, 1]");
        }
    }
}

RunConfig config_from_json(const json &j) {
    RunConfig cfg;
    try {
        if (j.contains("scheme")) {
            cfg.scheme = parse_scheme(j.at("scheme").get<std::string>());
        }
        if (j.contains("input")) {
            const auto in = j.at("input").get<std::string>();
            if (in != "all") {
                cfg.input = parse_bell_kind(in);
            }
        }
        if (j.contains("noise") && !j.at("noise").is_null()) {
            cfg.noise = io::noise_from_json(j.at("noise"));
        }
        if (j.contains("pnr") && !j.at("pnr").is_null()) {
            cfg.pnr = io::pnr_from_json(j.at("pnr"));
        }
        if (j.contains("shots") && !j.at("shots").is_null()) {
            cfg.shots = j.at("shots").get<std::uint64_t>();
        }
        if (j.contains("seed") && !j.at("seed").is_null()) {
            cfg.seed = j.at("seed").get<std::uint64_t>();
        }
        cfg.output = j.value("output", cfg.output);
        if (j.contains("format")) {
            const auto f = j.at("format").get<std::string>();
            if (f != "json" && f != "csv") {
                throw ConfigError("format must be json or csv");
            }
            cfg.format = f == "csv" ? Format::Csv : Format::Json;
        }
        if (j.contains("table")) {
            cfg.table_path = j.at("table").get<std::string>();
        }
        if (j.contains("relay")) {
            const auto &r = j.at("relay");
            cfg.relay_p_c = r.value("p_c", cfg.relay_p_c);
            cfg.relay_n_max = r.value("n_max", cfg.relay_n_max);
            cfg.relay_mode = r.value("mode", std::string("memoryless")) == "memory" ? RelayMode::Memory
                                                                                    : RelayMode::Memoryless;
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config file: ") + e.what());
    }
    return cfg;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    ShotRng rng(seed, ~stream);
    return rng.next();
}

std::string suffixed_path(const std::string &path, const std::string &suffix) {
    if (path.empty()) {
        return path;
    }
    std::filesystem::path p(path);
    const auto ext = p.extension().string();
    p.replace_extension();
    return p.string() + "_" + suffix + ext;
}

std::vector<Artifact> cmd_distribution(const RunConfig &cfg) {
    cfg.validate();
    const BellDistributions exact = exact_distributions(cfg);
    const auto inputs = selected_inputs(cfg);
    const auto modes = detection_mode_names(cfg.scheme);

    std::vector<Artifact> out;
    for (BellKind kind : inputs) {
        const Distribution &d = exact[static_cast<int>(kind)];
        std::optional<CountRecord> rec;
        std::optional<Distribution> corrected;
        std::optional<Distribution> errors;
        const PnrConfig pnr = cfg.pnr ? stream_config(cfg, kind) : PnrConfig{};
        if (cfg.shots) {
            rec = sample(d, pnr, *cfg.shots);
            if (rec->post_selected > 0) {
                corrected = correct_counts(*rec, pnr.k);
                errors = corrected_standard_errors(*rec, pnr.k);
            }
        }

        std::string content;
        if (cfg.format == Format::Csv) {
            content = io::distribution_csv(d, corrected, errors);
        } else {
            json j = {{"schema_version", io::kSchemaVersion},
                      {"kind", "distribution"},
                      {"scheme", to_string(cfg.scheme)},
                      {"input", to_string(kind)},
                      {"modes", modes},
                      {"config", config_echo(cfg)},
                      {"noise", cfg.noise ? io::to_json(*cfg.noise) : json(nullptr)},
                      {"exact", io::to_json(d)}};
            if (rec) {
                j["sampled"] = io::to_json(*rec, pnr);
            }
            content = dump(j);
        }
        const std::string path = inputs.size() > 1 ? suffixed_path(cfg.output, to_string(kind)) : cfg.output;
        out.push_back({path, std::move(content)});
    }
    return out;
}

std::vector<Artifact> cmd_metrics(const RunConfig &cfg) {
    cfg.validate();
    const BellDistributions expected = ideal_distributions(cfg.scheme);
    const BellDistributions exact = exact_distributions(cfg);
    BellDistributions measured = exact;
    if (cfg.shots) {
        for (BellKind kind : kAllBellKinds) {
            const int i = static_cast<int>(kind);
            const PnrConfig pnr = stream_config(cfg, kind);
            measured[i] = correct_counts(sample(exact[i], pnr, *cfg.shots), pnr.k);
        }
    }
    const ClassificationTable table =
        cfg.table_path ? load_table(*cfg.table_path) : build_classifier(cfg.scheme, expected);
    if (table.scheme() != cfg.scheme) {
        throw ConfigError("classification table was built for the " + to_string(table.scheme()) + " scheme");
    }
    const MetricsReport report = evaluate(measured, expected, table);

    if (cfg.format == Format::Csv) {
        return {{cfg.output, io::metrics_csv(report)}};
    }
    json reference = cfg.scheme == SchemeKind::Standard
                         ? json{{"p_c", 0.481}, {"p_c_error", 0.012}, {"mdf", 0.977}, {"tvd", 0.072}}
                         : json{{"p_c", 0.579}, {"p_c_error", 0.014}};
    json j = {{"schema_version", io::kSchemaVersion},
              {"kind", "metrics"},
              {"scheme", to_string(cfg.scheme)},
              {"config", config_echo(cfg)},
              {"theory_p_c", cfg.scheme == SchemeKind::Standard ? 0.5 : 0.625},
              {"reported_experiment", reference},
              {"report", io::to_json(report)}};
    return {{cfg.output, dump(j)}};
}

std::vector<Artifact> cmd_classify_table(const RunConfig &cfg) {
    cfg.validate();
    const BellDistributions ideal = ideal_distributions(cfg.scheme);
    const ClassificationTable table = build_classifier(cfg.scheme, ideal);
    if (cfg.format == Format::Csv) {
        return {{cfg.output, io::table_csv(table, ideal)}};
    }
    return {{cfg.output, dump(io::to_json(table, ideal))}};
}

std::vector<Artifact> cmd_relay(const RunConfig &cfg) {
    cfg.validate();
    auto curves = preset_curves(cfg.relay_n_max, cfg.relay_mode);
    for (double p : cfg.relay_p_c) {
        curves.push_back(curve(p, cfg.relay_n_max, cfg.relay_mode, "user-" + io::format_number(p)));
    }
    if (cfg.format == Format::Csv) {
        std::vector<Artifact> out;
        for (const auto &c : curves) {
            out.push_back({suffixed_path(cfg.output, c.label), io::relay_csv(c)});
        }
        return out;
    }
    json arr = json::array();
    for (const auto &c : curves) {
        arr.push_back(io::to_json(c));
    }
    json j = {{"schema_version", io::kSchemaVersion}, {"kind", "relay"}, {"curves", arr}};
    return {{cfg.output, dump(j)}};
}

} // namespace bsm::cli
