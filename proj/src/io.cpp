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

#include "bsm/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "bsm/errors.hpp"

namespace bsm::io {

using nlohmann::json;

namespace {

constexpr double kSumTolerance = 1e-9;

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw ValidationError("invalid artifact: " + what);
    }
}

void check_probability(double p, const std::string &where) {
    require(p >= -kSumTolerance && p <= 1.0 + kSumTolerance, where + " is not a probability");
}

std::size_t check_distribution(const json &j, std::size_t width, const std::string &where) {
    require(j.is_object(), where + " must be an object");
    double sum = 0.0;
    for (const auto &[key, value] : j.items()) {
        require(from_key(key).size() == width, where + ": pattern '" + key + "' has wrong length");
        require(value.is_number(), where + ": probability must be numeric");
        check_probability(value.get<double>(), where + "[" + key + "]");
        sum += value.get<double>();
    }
    require(std::abs(sum - 1.0) <= kSumTolerance, where + " does not sum to 1");
    return j.size();
}

void check_sampled(const json &j, std::size_t width) {
    const auto shots = j.at("shots").get<std::uint64_t>();
    const auto kept = j.at("post_selected").get<std::uint64_t>();
    require(kept <= shots, "post_selected exceeds shots");
    std::uint64_t sum = 0;
    for (const auto &[key, value] : j.at("raw").items()) {
        require(from_key(key).size() == width, "raw pattern '" + key + "' has wrong length");
        sum += value.get<std::uint64_t>();
    }
    require(sum == kept, "raw counts do not add up to post_selected");
    if (kept > 0) {
        check_distribution(j.at("corrected"), width, "corrected");
    }
}

void check_metrics_block(const json &j, const std::string &where) {
    const double pc = j.at("p_c").get<double>();
    const double pf = j.at("p_f").get<double>();
    const double pa = j.at("p_amb").get<double>();
    check_probability(pc, where + ".p_c");
    check_probability(pf, where + ".p_f");
    check_probability(pa, where + ".p_amb");
    require(std::abs(pc + pf + pa - 1.0) <= kSumTolerance, where + ": p_c + p_f + p_amb != 1");
    const json &m = j.at("mdf");
    if (m.is_null()) {
        require(pc + pf <= kSumTolerance, where + ": mdf missing although p_c + p_f > 0");
    } else {
        require(pc + pf > 0.0, where + ": mdf present although p_c + p_f == 0");
        check_probability(m.get<double>(), where + ".mdf");
        require(std::abs(m.get<double>() - pc / (pc + pf)) <= 1e-9, where + ": mdf inconsistent");
    }
    check_probability(j.at("tvd").get<double>(), where + ".tvd");
}

std::string csv_opt(const std::optional<double> &v) { return v ? format_number(*v) : ""; }

} // namespace

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json to_json(const Distribution &dist) {
    json j = json::object();
    for (const auto &[pattern, p] : dist) {
        j[to_key(pattern)] = round_sig(p);
    }
    return j;
}

Distribution distribution_from_json(const json &j) {
    Distribution d;
    for (const auto &[key, value] : j.items()) {
        d.emplace(from_key(key), value.get<double>());
    }
    return d;
}

json to_json(const NoiseConfig &cfg) {
    return {{"v_bell_hv", cfg.v_bell_hv}, {"v_bell_pm", cfg.v_bell_pm}, {"v_aux_hv", cfg.v_aux_hv}};
}

NoiseConfig noise_from_json(const json &j) {
    NoiseConfig cfg;
    cfg.v_bell_hv = j.value("v_bell_hv", cfg.v_bell_hv);
    cfg.v_bell_pm = j.value("v_bell_pm", cfg.v_bell_pm);
    cfg.v_aux_hv = j.value("v_aux_hv", cfg.v_aux_hv);
    return cfg;
}

json to_json(const PnrConfig &cfg) { return {{"k", cfg.k}, {"eta", cfg.eta}, {"seed", cfg.seed}}; }

PnrConfig pnr_from_json(const json &j) {
    PnrConfig cfg;
    cfg.k = j.value("k", cfg.k);
    cfg.eta = j.value("eta", cfg.eta);
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

json to_json(const CountRecord &rec, const PnrConfig &cfg) {
    json raw = json::object();
    for (const auto &[pattern, count] : rec.raw) {
        raw[to_key(pattern)] = count;
    }
    json j = {{"shots", rec.shots},
              {"post_selected", rec.post_selected},
              {"expected_total", rec.expected_total},
              {"config", to_json(cfg)},
              {"raw", raw}};
    if (rec.post_selected > 0) {
        j["corrected"] = to_json(correct_counts(rec, cfg.k));
        j["standard_errors"] = to_json(corrected_standard_errors(rec, cfg.k));
    } else {
        j["corrected"] = nullptr;
        j["standard_errors"] = nullptr;
    }
    return j;
}

json to_json(const ClassificationTable &table, const BellDistributions &ideal) {
    json rows = json::array();
    for (const auto &[pattern, label] : table.entries()) {
        json probs = json::object();
        for (BellKind k : kAllBellKinds) {
            const auto &d = ideal[static_cast<int>(k)];
            auto it = d.find(pattern);
            probs[to_string(k)] = round_sig(it == d.end() ? 0.0 : it->second);
        }
        rows.push_back({{"pattern", to_key(pattern)}, {"label", to_string(label)}, {"probabilities", probs}});
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "classification_table"},
            {"scheme", to_string(table.scheme())},
            {"modes", detection_mode_names(table.scheme())},
            {"tolerance", table.tolerance()},
            {"rows", rows}};
}

ClassificationTable table_from_json(const json &j) {
    try {
        const SchemeKind scheme = parse_scheme(j.at("scheme").get<std::string>());
        std::map<FockBasisState, Outcome> entries;
        for (const auto &row : j.at("rows")) {
            auto pattern = from_key(row.at("pattern").get<std::string>());
            if (!entries.emplace(pattern, parse_outcome(row.at("label").get<std::string>())).second) {
                throw ValidationError("duplicate pattern " + to_key(pattern));
            }
        }
        return ClassificationTable(scheme, j.value("tolerance", 1e-12), std::move(entries));
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed classification table: ") + e.what());
    } catch (const ConfigError &e) {
        throw ValidationError(std::string("malformed classification table: ") + e.what());
    }
}

json to_json(const StateMetrics &m) {
    return {{"p_c", round_sig(m.p_c)},
            {"p_f", round_sig(m.p_f)},
            {"p_amb", round_sig(m.p_amb)},
            {"mdf", m.mdf ? json(round_sig(*m.mdf)) : json(nullptr)},
            {"tvd", round_sig(m.tvd)}};
}

json to_json(const MetricsReport &report) {
    json per_state = json::object();
    for (BellKind k : kAllBellKinds) {
        per_state[to_string(k)] = to_json(report.per_state[static_cast<int>(k)]);
    }
    return {{"p_c", round_sig(report.p_c)},
            {"p_f", round_sig(report.p_f)},
            {"p_amb", round_sig(report.p_amb)},
            {"mdf", report.mdf ? json(round_sig(*report.mdf)) : json(nullptr)},
            {"tvd", round_sig(report.tvd)},
            {"per_state", per_state}};
}

json to_json(const RelayCurve &c) {
    json points = json::array();
    for (const auto &[n, s] : c.points) {
        points.push_back({{"n", n}, {"success", round_sig(s)}});
    }
    return {{"label", c.label},
            {"p_c", c.p_c},
            {"mode", c.mode == RelayMode::Memory ? "memory" : "memoryless"},
            {"points", points}};
}

std::string distribution_csv(const Distribution &exact, const std::optional<Distribution> &corrected,
                             const std::optional<Distribution> &std_errors) {
    std::set<FockBasisState> patterns;
    for (const auto &[p, v] : exact) {
        patterns.insert(p);
    }
    if (corrected) {
        for (const auto &[p, v] : *corrected) {
            patterns.insert(p);
        }
    }
    auto lookup = [](const Distribution &d, const FockBasisState &p) {
        auto it = d.find(p);
        return it == d.end() ? 0.0 : it->second;
    };
    std::ostringstream out;
    out << "pattern,probability";
    if (corrected) {
        out << ",corrected,standard_error";
    }
    out << '\n';
    for (const auto &p : patterns) {
        out << '"' << to_key(p) << "\"," << format_number(lookup(exact, p));
        if (corrected) {
            out << ',' << format_number(lookup(*corrected, p)) << ','
                << format_number(std_errors ? lookup(*std_errors, p) : 0.0);
        }
        out << '\n';
    }
    return out.str();
}

std::string table_csv(const ClassificationTable &table, const BellDistributions &ideal) {
    std::ostringstream out;
    out << "pattern,label,psi+,psi-,phi+,phi-\n";
    for (const auto &[pattern, label] : table.entries()) {
        out << '"' << to_key(pattern) << "\"," << to_string(label);
        for (const auto &d : ideal) {
            auto it = d.find(pattern);
            out << ',' << format_number(it == d.end() ? 0.0 : it->second);
        }
        out << '\n';
    }
    return out.str();
}

std::string metrics_csv(const MetricsReport &report) {
    std::ostringstream out;
    out << "input,p_c,p_f,p_amb,mdf,tvd\n";
    for (BellKind k : kAllBellKinds) {
        const auto &s = report.per_state[static_cast<int>(k)];
        out << to_string(k) << ',' << format_number(s.p_c) << ',' << format_number(s.p_f) << ','
            << format_number(s.p_amb) << ',' << csv_opt(s.mdf) << ',' << format_number(s.tvd) << '\n';
    }
    out << "average," << format_number(report.p_c) << ',' << format_number(report.p_f) << ','
        << format_number(report.p_amb) << ',' << csv_opt(report.mdf) << ',' << format_number(report.tvd)
        << '\n';
    return out.str();
}

std::string relay_csv(const RelayCurve &c) {
    std::ostringstream out;
    out << "n,success\n";
    for (const auto &[n, s] : c.points) {
        out << n << ',' << format_number(s) << '\n';
    }
    return out.str();
}

void validate_artifact(const json &artifact) {
    try {
        require(artifact.at("schema_version").get<int>() == kSchemaVersion, "unsupported schema_version");
        const auto kind = artifact.at("kind").get<std::string>();
        if (kind == "distribution") {
            const SchemeKind scheme = parse_scheme(artifact.at("scheme").get<std::string>());
            const std::size_t width = detection_modes(scheme).size();
            require(artifact.at("modes").size() == width, "mode list does not match scheme");
            parse_bell_kind(artifact.at("input").get<std::string>());
            check_distribution(artifact.at("exact"), width, "exact");
            if (artifact.contains("sampled")) {
                check_sampled(artifact.at("sampled"), width);
            }
        } else if (kind == "classification_table") {
            const ClassificationTable table = table_from_json(artifact);
            require(table.entries().size() == artifact.at("rows").size(), "duplicate table rows");
            for (const auto &row : artifact.at("rows")) {
                for (const auto &[input, p] : row.at("probabilities").items()) {
                    parse_bell_kind(input);
                    check_probability(p.get<double>(), "table probability");
                }
            }
        } else if (kind == "metrics") {
            parse_scheme(artifact.at("scheme").get<std::string>());
            check_metrics_block(artifact.at("report"), "report");
            for (const auto &[input, block] : artifact.at("report").at("per_state").items()) {
                parse_bell_kind(input);
                check_metrics_block(block, input);
            }
        } else if (kind == "relay") {
            for (const auto &c : artifact.at("curves")) {
                const double p = c.at("p_c").get<double>();
                check_probability(p, "relay p_c");
                int expected_n = 1;
                double previous = 1.0;
                for (const auto &pt : c.at("points")) {
                    require(pt.at("n").get<int>() == expected_n++, "relay points must be n = 1, 2, ...");
                    const double s = pt.at("success").get<double>();
                    check_probability(s, "relay success");
                    if (expected_n > 2) {
                        require(s <= previous, "relay curve is not monotone");
                        if (p > 0.0 && p < 1.0 && c.at("mode") == "memoryless") {
                            require(s < previous, "relay curve is not strictly decreasing");
                        }
                    }
                    previous = s;
                }
            }
        } else {
            require(false, "unknown artifact kind '" + kind + "'");
        }
    } catch (const json::exception &e) {
        throw ValidationError(std::string("invalid artifact: ") + e.what());
    } catch (const ConfigError &e) {
        throw ValidationError(std::string("invalid artifact: ") + e.what());
    }
}

} // namespace bsm::io
