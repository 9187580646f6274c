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

// Command-line front end: distribution, metrics, classify-table and relay.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bsm/cli.hpp"
#include "bsm/errors.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct Flags {
    std::string config;
    std::string scheme;
    std::string input;
    double v_bell_hv = 0.0;
    double v_bell_pm = 0.0;
    double v_aux = 0.0;
    bool default_noise = false;
    double eta = 0.0;
    int k = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string format;
    std::string table;
    std::vector<double> p_c;
    int n_max = 0;
    bool memory = false;
};

struct Options {
    CLI::Option *scheme, *input, *v_bell_hv, *v_bell_pm, *v_aux, *default_noise, *eta, *k, *shots, *seed,
        *output, *format, *table, *p_c, *n_max, *memory;
};

Options add_common(CLI::App *app, Flags &f) {
    Options o{};
    app->add_option("--config", f.config, "JSON config file; flags override its values");
    o.scheme = app->add_option("--scheme", f.scheme, "standard | enhanced")
                   ->check(CLI::IsMember({"standard", "enhanced"}));
    o.input = app->add_option("--input", f.input, "psi+ | psi- | phi+ | phi- | all")
                  ->check(CLI::IsMember({"psi+", "psi-", "phi+", "phi-", "all"}));
    o.v_bell_hv = app->add_option("--v-bell-hv", f.v_bell_hv, "Bell source H/V visibility");
    o.v_bell_pm = app->add_option("--v-bell-pm", f.v_bell_pm, "Bell source +/- visibility");
    o.v_aux = app->add_option("--v-aux", f.v_aux, "ancilla source H/V visibility");
    o.default_noise = app->add_flag("--default-noise", f.default_noise,
                                    "enable the noise model with the default visibilities");
    o.eta = app->add_option("--eta", f.eta, "per-photon detection efficiency");
    o.k = app->add_option("--k", f.k, "binary detectors per mode");
    o.shots = app->add_option("--shots", f.shots, "Monte Carlo shots per Bell input");
    o.seed = app->add_option("--seed", f.seed, "RNG seed (drawn from entropy if absent)");
    o.output = app->add_option("--output", f.output, "output path (default: stdout)");
    o.format = app->add_option("--format", f.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    o.table = app->add_option("--table", f.table, "classification table JSON to use instead of the ideal one");
    o.p_c = app->add_option("--p-c", f.p_c, "additional relay success probabilities");
    o.n_max = app->add_option("--n-max", f.n_max, "largest number of relay segments");
    o.memory = app->add_flag("--memory", f.memory, "memory-assisted relay scaling p^log2(n)");
    return o;
}

bsm::cli::RunConfig build_config(const Flags &f, const Options &o) {
    using namespace bsm;
    cli::RunConfig cfg;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) {
            throw ConfigError("cannot open config file '" + f.config + "'");
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("cannot parse config file: ") + e.what());
        }
        cfg = cli::config_from_json(j);
    }
    if (o.scheme->count()) {
        cfg.scheme = parse_scheme(f.scheme);
    }
    if (o.input->count()) {
        cfg.input = f.input == "all" ? std::nullopt : std::optional(parse_bell_kind(f.input));
    }
    if (o.default_noise->count() || o.v_bell_hv->count() || o.v_bell_pm->count() || o.v_aux->count()) {
        NoiseConfig noise = cfg.noise.value_or(NoiseConfig{});
        if (!cfg.noise && !o.default_noise->count()) {
            // Explicit visibilities only: unspecified channels stay ideal.
            noise = {1.0, 1.0, 1.0};
        }
        if (o.v_bell_hv->count()) {
            noise.v_bell_hv = f.v_bell_hv;
        }
        if (o.v_bell_pm->count()) {
            noise.v_bell_pm = f.v_bell_pm;
        }
        if (o.v_aux->count()) {
            noise.v_aux_hv = f.v_aux;
        }
        cfg.noise = noise;
    }
    if (o.eta->count() || o.k->count() || o.shots->count()) {
        PnrConfig pnr = cfg.pnr.value_or(PnrConfig{});
        if (o.eta->count()) {
            pnr.eta = f.eta;
        }
        if (o.k->count()) {
            pnr.k = f.k;
        }
        cfg.pnr = pnr;
    }
    if (o.shots->count()) {
        cfg.shots = f.shots;
    }
    if (o.seed->count()) {
        cfg.seed = f.seed;
    }
    if (cfg.shots && !cfg.seed) {
        std::random_device rd;
        cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    if (o.output->count()) {
        cfg.output = f.output;
    }
    if (o.format->count()) {
        cfg.format = f.format == "csv" ? cli::Format::Csv : cli::Format::Json;
    }
    if (o.table->count()) {
        cfg.table_path = f.table;
    }
    if (o.p_c->count()) {
        cfg.relay_p_c = f.p_c;
    }
    if (o.n_max->count()) {
        cfg.relay_n_max = f.n_max;
    }
    if (o.memory->count()) {
        cfg.relay_mode = RelayMode::Memory;
    }
    cfg.validate();
    return cfg;
}

void write_artifacts(const std::vector<bsm::cli::Artifact> &artifacts) {
    for (const auto &a : artifacts) {
        if (a.path.empty()) {
            std::cout << a.content;
            continue;
        }
        std::ofstream out(a.path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write '" + a.path + "'");
        }
        out << a.content;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Linear-optical Bell-state measurement simulator"};
    app.require_subcommand(1);

    using Command = std::vector<bsm::cli::Artifact> (*)(const bsm::cli::RunConfig &);
    struct Sub {
        const char *name;
        const char *help;
        Command run;
        Flags flags;
        Options opts;
        CLI::App *app;
    };
    std::vector<Sub> subs = {
        {"distribution", "exact (and optionally sampled) detection-pattern distributions",
         bsm::cli::cmd_distribution, {}, {}, nullptr},
        {"metrics", "p_c, p_f, p_amb, MDF and distance for a scheme", bsm::cli::cmd_metrics, {}, {}, nullptr},
        {"classify-table", "pattern -> label table with ideal probabilities", bsm::cli::cmd_classify_table,
         {}, {}, nullptr},
        {"relay", "entanglement-swapping chain success curves", bsm::cli::cmd_relay, {}, {}, nullptr},
    };
    for (auto &s : subs) {
        s.app = app.add_subcommand(s.name, s.help);
        s.opts = add_common(s.app, s.flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    for (auto &s : subs) {
        if (!s.app->parsed()) {
            continue;
        }
        bsm::cli::RunConfig cfg;
        try {
            cfg = build_config(s.flags, s.opts);
        } catch (const std::exception &e) {
            std::cerr << "bsm: config error: " << e.what() << '\n';
            return kConfigError;
        }
        try {
            write_artifacts(s.run(cfg));
        } catch (const bsm::ConfigError &e) {
            std::cerr << "bsm: config error: " << e.what() << '\n';
            return kConfigError;
        } catch (const std::exception &e) {
            std::cerr << "bsm: error: " << e.what() << '\n';
            return kRuntimeError;
        }
    }
    return 0;
}
