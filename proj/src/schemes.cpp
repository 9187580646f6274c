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

#include "bsm/schemes.hpp"

#include <cmath>
#include <numbers>

#include "bsm/elements.hpp"
#include "bsm/errors.hpp"

namespace bsm {

namespace {

constexpr Polarization H = Polarization::H;
constexpr Polarization V = Polarization::V;

const std::array<const char *, 4> kBellNames = {"psi+", "psi-", "phi+", "phi-"};

} // namespace

Outcome outcome_of(BellKind kind) { return static_cast<Outcome>(static_cast<int>(kind)); }

std::string to_string(BellKind kind) { return kBellNames[static_cast<int>(kind)]; }

std::string to_string(Outcome outcome) {
    return outcome == Outcome::Ambiguous ? "ambiguous" : kBellNames[static_cast<int>(outcome)];
}

std::string to_string(SchemeKind scheme) {
    return scheme == SchemeKind::Standard ? "standard" : "enhanced";
}

BellKind parse_bell_kind(const std::string &text) {
    for (BellKind k : kAllBellKinds) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw ConfigError("unknown Bell state '" + text + "' (expected psi+, psi-, phi+ or phi-)");
}

Outcome parse_outcome(const std::string &text) {
    if (text == "ambiguous") {
        return Outcome::Ambiguous;
    }
    return outcome_of(parse_bell_kind(text));
}

SchemeKind parse_scheme(const std::string &text) {
    if (text == "standard") {
        return SchemeKind::Standard;
    }
    if (text == "enhanced") {
        return SchemeKind::Enhanced;
    }
    throw ConfigError("unknown scheme '" + text + "' (expected standard or enhanced)");
}

PureState make_bell(BellKind kind) {
    const double s = 1.0 / std::numbers::sqrt2;
    const double sign = (kind == BellKind::PsiPlus || kind == BellKind::PhiPlus) ? 1.0 : -1.0;
    const bool psi = kind == BellKind::PsiPlus || kind == BellKind::PsiMinus;
    // a_0 b_{0|1} +- a_1 b_{1|0}
    const Polarization b_first = psi ? V : H;
    const Polarization b_second = psi ? H : V;
    return PureState::from_creation_polynomial(
        ModeRegistry::from_spatial({"a", "b"}),
        {{Complex{s}, {{"a", H}, {"b", b_first}}}, {Complex{sign * s}, {{"a", V}, {"b", b_second}}}});
}

PureState make_aux() {
    return PureState::from_creation_polynomial(ModeRegistry::from_spatial({"e"}),
                                               {{Complex{0.5}, {{"e", H}, {"e", H}}},
                                                {Complex{0.5}, {{"e", V}, {"e", V}}}});
}

std::vector<ModeLabel> detection_modes(SchemeKind scheme) {
    if (scheme == SchemeKind::Standard) {
        return {{"cH", H}, {"cV", V}, {"dH", H}, {"dV", V}};
    }
    return {{"dH", H}, {"dV", V}, {"fH", H}, {"fV", V}, {"gH", H}, {"gV", V}};
}

std::vector<std::string> detection_mode_names(SchemeKind scheme) {
    std::vector<std::string> names;
    for (const auto &m : detection_modes(scheme)) {
        names.push_back(m.spatial);
    }
    return names;
}

int expected_photons(SchemeKind scheme) { return scheme == SchemeKind::Standard ? 2 : 4; }

MixedState propagate(SchemeKind scheme, const MixedState &bell, const MixedState &aux) {
    if (scheme == SchemeKind::Standard) {
        MixedState s = apply_unitary(bell, balanced_bs("a", "b"));
        s = apply_routing(s, ModeRouting::rename_spatial("a", "c"));
        s = apply_routing(s, ModeRouting::rename_spatial("b", "d"));
        s = apply_routing(s, pbs_split("c", "cH", "cV"));
        return apply_routing(s, pbs_split("d", "dH", "dV"));
    }
    // BS1 on (a, b) -> (c, d); c and the ancilla e meet on BS2 -> (f, g).
    MixedState s = apply_unitary(tensor(bell, aux), balanced_bs("a", "b"));
    s = apply_routing(s, ModeRouting::rename_spatial("a", "c"));
    s = apply_routing(s, ModeRouting::rename_spatial("b", "d"));
    s = apply_unitary(s, balanced_bs("c", "e"));
    s = apply_routing(s, ModeRouting::rename_spatial("c", "f"));
    s = apply_routing(s, ModeRouting::rename_spatial("e", "g"));
    s = apply_routing(s, pbs_split("d", "dH", "dV"));
    s = apply_routing(s, pbs_split("f", "fH", "fV"));
    return apply_routing(s, pbs_split("g", "gH", "gV"));
}

Distribution detection_distribution(SchemeKind scheme, const MixedState &bell, const MixedState &aux) {
    const auto modes = detection_modes(scheme);
    return probability_distribution(propagate(scheme, bell, aux), modes);
}

Distribution ideal_distribution(SchemeKind scheme, BellKind input) {
    return detection_distribution(scheme, make_bell(input), make_aux());
}

BellDistributions ideal_distributions(SchemeKind scheme) {
    BellDistributions out;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < 4; ++k) {
        out[k] = ideal_distribution(scheme, static_cast<BellKind>(k));
    }
    return out;
}

ClassificationTable::ClassificationTable(SchemeKind scheme, double tolerance,
                                         std::map<FockBasisState, Outcome> entries)
    : scheme_(scheme), tolerance_(tolerance), entries_(std::move(entries)) {
    const std::size_t n = detection_modes(scheme_).size();
    for (const auto &[pattern, label] : entries_) {
        if (pattern.size() != n) {
            throw ValidationError("classification table pattern has wrong length for the " +
                                  to_string(scheme_) + " scheme");
        }
    }
}

ClassificationTable build_classifier(SchemeKind scheme, const BellDistributions &dists, double tolerance) {
    std::map<FockBasisState, Outcome> entries;
    for (const auto &dist : dists) {
        for (const auto &[pattern, p] : dist) {
            if (entries.contains(pattern)) {
                continue;
            }
            int owner = -1;
            int above = 0;
            for (int k = 0; k < 4; ++k) {
                auto it = dists[k].find(pattern);
                if (it != dists[k].end() && it->second > tolerance) {
                    owner = k;
                    ++above;
                }
            }
            entries.emplace(pattern, above == 1 ? static_cast<Outcome>(owner) : Outcome::Ambiguous);
        }
    }
    return ClassificationTable(scheme, tolerance, std::move(entries));
}

ClassificationTable build_classifier(SchemeKind scheme, double tolerance) {
    return build_classifier(scheme, ideal_distributions(scheme), tolerance);
}

Outcome classify(const FockBasisState &pattern, const ClassificationTable &table) {
    if (pattern.size() != table.pattern_size()) {
        throw ValidationError("pattern length " + std::to_string(pattern.size()) +
                              " does not match the " + to_string(table.scheme()) + " scheme");
    }
    auto it = table.entries().find(pattern);
    return it == table.entries().end() ? Outcome::Ambiguous : it->second;
}

} // namespace bsm
