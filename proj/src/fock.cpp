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

#include "bsm/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "bsm/errors.hpp"

namespace bsm {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

std::vector<std::size_t> indices_of(const ModeRegistry &registry, std::span<const ModeLabel> labels) {
    std::vector<std::size_t> idx;
    idx.reserve(labels.size());
    for (const auto &label : labels) {
        idx.push_back(registry.index_of(label));
    }
    return idx;
}

} // namespace

std::string to_string(const ModeLabel &label) {
    return label.spatial + (label.pol == Polarization::H ? "H" : "V");
}

// ---------------------------------------------------------------------------
// ModeRegistry

ModeRegistry::ModeRegistry(std::vector<ModeLabel> modes) : modes_(std::move(modes)) {
    std::set<ModeLabel> seen;
    for (const auto &m : modes_) {
        if (m.spatial.empty()) {
            throw RegistryError("empty spatial id in mode registry");
        }
        if (!seen.insert(m).second) {
            throw RegistryError("duplicate mode label " + to_string(m));
        }
    }
}

ModeRegistry ModeRegistry::from_spatial(std::initializer_list<std::string> spatial_ids) {
    std::vector<ModeLabel> modes;
    for (const auto &s : spatial_ids) {
        modes.push_back({s, Polarization::H});
        modes.push_back({s, Polarization::V});
    }
    return ModeRegistry(std::move(modes));
}

bool ModeRegistry::contains(const ModeLabel &label) const {
    return std::find(modes_.begin(), modes_.end(), label) != modes_.end();
}

bool ModeRegistry::has_spatial(const std::string &spatial) const {
    return std::any_of(modes_.begin(), modes_.end(),
                       [&](const ModeLabel &m) { return m.spatial == spatial; });
}

std::size_t ModeRegistry::index_of(const ModeLabel &label) const {
    auto it = std::find(modes_.begin(), modes_.end(), label);
    if (it == modes_.end()) {
        throw RegistryError("unknown mode " + to_string(label));
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

ModeRegistry ModeRegistry::concat(const ModeRegistry &other) const {
    for (const auto &m : other.modes_) {
        if (has_spatial(m.spatial)) {
            throw RegistryError("registry conflict on spatial id '" + m.spatial + "'");
        }
    }
    std::vector<ModeLabel> modes = modes_;
    modes.insert(modes.end(), other.modes_.begin(), other.modes_.end());
    return ModeRegistry(std::move(modes));
}

// ---------------------------------------------------------------------------
// FockBasisState

FockBasisState::FockBasisState(std::vector<int> occupations) : occ_(std::move(occupations)) {
    for (int n : occ_) {
        if (n < 0) {
            throw ValidationError("negative occupation number");
        }
    }
}

FockBasisState::FockBasisState(std::initializer_list<int> occupations)
    : FockBasisState(std::vector<int>(occupations)) {}

int FockBasisState::total() const { return std::accumulate(occ_.begin(), occ_.end(), 0); }

std::string to_key(const FockBasisState &state) {
    std::string key;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i != 0) {
            key += ',';
        }
        key += std::to_string(state[i]);
    }
    return key;
}

FockBasisState from_key(const std::string &key) {
    std::vector<int> occ;
    std::istringstream in(key);
    std::string field;
    while (std::getline(in, field, ',')) {
        if (field.empty() || !std::all_of(field.begin(), field.end(), ::isdigit)) {
            throw ValidationError("malformed pattern key '" + key + "'");
        }
        occ.push_back(std::stoi(field));
    }
    if (occ.empty() || key.back() == ',') {
        throw ValidationError("malformed pattern key '" + key + "'");
    }
    return FockBasisState(std::move(occ));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ModeRegistry registry, Terms terms)
    : registry_(std::move(registry)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kPruneThreshold; });
    for (const auto &[basis, amp] : terms_) {
        if (basis.size() != registry_.size()) {
            throw ValidationError("basis state length does not match registry size");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw ValidationError("state is not normalized (norm^2 = " + std::to_string(norm_squared()) + ")");
    }
}

PureState PureState::vacuum(ModeRegistry registry) {
    FockBasisState vac(std::vector<int>(registry.size(), 0));
    return PureState(std::move(registry), Terms{{vac, Complex{1.0, 0.0}}});
}

namespace {

PureState::Terms expand_polynomial(const ModeRegistry &registry,
                                   const std::vector<CreationMonomial> &poly) {
    PureState::Terms terms;
    for (const auto &mono : poly) {
        std::vector<int> occ(registry.size(), 0);
        for (const auto &label : mono.modes) {
            ++occ[registry.index_of(label)];
        }
        double fock = 1.0;
        for (int n : occ) {
            fock *= std::sqrt(factorial(n));
        }
        terms[FockBasisState(std::move(occ))] += mono.coefficient * fock;
    }
    return terms;
}

} // namespace

PureState PureState::from_creation_polynomial(ModeRegistry registry,
                                              const std::vector<CreationMonomial> &poly) {
    auto terms = expand_polynomial(registry, poly);
    return PureState(std::move(registry), std::move(terms));
}

PureState PureState::normalized_from_creation_polynomial(ModeRegistry registry,
                                                         const std::vector<CreationMonomial> &poly) {
    auto terms = expand_polynomial(registry, poly);
    double norm2 = 0.0;
    for (const auto &[basis, amp] : terms) {
        norm2 += std::norm(amp);
    }
    if (norm2 <= 0.0) {
        throw ValidationError("cannot normalize the zero polynomial");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &[basis, amp] : terms) {
        amp *= scale;
    }
    return PureState(std::move(registry), std::move(terms));
}

Complex PureState::amplitude(const FockBasisState &basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Complex{} : it->second;
}

double PureState::norm_squared() const {
    double n = 0.0;
    for (const auto &[basis, amp] : terms_) {
        n += std::norm(amp);
    }
    return n;
}

Complex inner_product(const PureState &left, const PureState &right) {
    if (!(left.registry() == right.registry())) {
        throw RegistryError("inner product of states on different registries");
    }
    Complex sum{};
    for (const auto &[basis, amp] : right.terms()) {
        sum += std::conj(left.amplitude(basis)) * amp;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// MixedState

MixedState::MixedState(std::vector<WeightedState> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw ValidationError("mixed state needs at least one component");
    }
    double total = 0.0;
    for (const auto &c : components_) {
        if (c.weight < 0.0) {
            throw ValidationError("negative mixture weight");
        }
        if (!(c.state.registry() == components_.front().state.registry())) {
            throw RegistryError("mixture components live on different registries");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw ValidationError("mixture weights do not sum to 1");
    }
    std::erase_if(components_, [](const WeightedState &c) { return c.weight == 0.0; });
}

MixedState::MixedState(const PureState &pure) : components_{{1.0, pure}} {}

// ---------------------------------------------------------------------------
// ModeUnitary / ModeRouting

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix, std::vector<ModeLabel> targets)
    : matrix_(std::move(matrix)), targets_(std::move(targets)) {
    if (matrix_.rows() != matrix_.cols() ||
        static_cast<std::size_t>(matrix_.rows()) != targets_.size()) {
        throw ValidationError("unitary dimension does not match its target list");
    }
    ModeRegistry check(targets_); // rejects duplicate targets
    if (unitarity_defect() > kNormTolerance) {
        throw ValidationError("matrix is not unitary");
    }
}

double ModeUnitary::unitarity_defect() const {
    const auto n = matrix_.rows();
    Eigen::MatrixXcd d = matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(n, n);
    return d.cwiseAbs().maxCoeff();
}

ModeUnitary compose(const ModeUnitary &second, const ModeUnitary &first) {
    if (second.targets() != first.targets()) {
        throw RegistryError("composed unitaries must act on identical targets");
    }
    return ModeUnitary(second.matrix() * first.matrix(), first.targets());
}

ModeRouting::ModeRouting(std::vector<std::pair<ModeLabel, ModeLabel>> moves) : moves_(std::move(moves)) {
    std::set<ModeLabel> sources;
    std::set<ModeLabel> dests;
    for (const auto &[from, to] : moves_) {
        if (!sources.insert(from).second || !dests.insert(to).second) {
            throw RegistryError("mode routing is not one-to-one");
        }
    }
}

ModeRouting ModeRouting::rename_spatial(const std::string &from, const std::string &to) {
    return ModeRouting({{{from, Polarization::H}, {to, Polarization::H}},
                        {{from, Polarization::V}, {to, Polarization::V}}});
}

ModeRegistry ModeRouting::apply(const ModeRegistry &registry) const {
    std::vector<ModeLabel> modes = registry.modes();
    for (const auto &[from, to] : moves_) {
        modes[registry.index_of(from)] = to;
    }
    return ModeRegistry(std::move(modes)); // throws on collisions
}

// ---------------------------------------------------------------------------
// Operations

PureState tensor(const PureState &left, const PureState &right) {
    ModeRegistry registry = left.registry().concat(right.registry());
    PureState::Terms terms;
    for (const auto &[lb, la] : left.terms()) {
        for (const auto &[rb, ra] : right.terms()) {
            std::vector<int> occ = lb.occupations();
            occ.insert(occ.end(), rb.occupations().begin(), rb.occupations().end());
            terms.emplace(FockBasisState(std::move(occ)), la * ra);
        }
    }
    return PureState(std::move(registry), std::move(terms));
}

MixedState tensor(const MixedState &left, const MixedState &right) {
    std::vector<WeightedState> components;
    for (const auto &l : left.components()) {
        for (const auto &r : right.components()) {
            components.push_back({l.weight * r.weight, tensor(l.state, r.state)});
        }
    }
    return MixedState(std::move(components));
}

PureState apply_unitary(const PureState &state, const ModeUnitary &u) {
    const auto targets = indices_of(state.registry(), u.targets());
    const auto &m = u.matrix();
    const std::size_t t_count = targets.size();

    PureState::Terms out;
    for (const auto &[basis, amp] : state.terms()) {
        // Expand prod_t (sum_j U(j,t) b_j^dag)^{n_t} one photon at a time,
        // merging equal target occupations as we go.
        std::map<std::vector<int>, Complex> poly;
        double norm_in = 1.0;
        for (std::size_t t = 0; t < t_count; ++t) {
            norm_in *= factorial(basis[targets[t]]);
        }
        poly.emplace(std::vector<int>(t_count, 0), amp / std::sqrt(norm_in));
        for (std::size_t t = 0; t < t_count; ++t) {
            for (int photon = 0; photon < basis[targets[t]]; ++photon) {
                std::map<std::vector<int>, Complex> next;
                for (const auto &[occ, c] : poly) {
                    for (std::size_t j = 0; j < t_count; ++j) {
                        const Complex f = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t));
                        if (f == Complex{}) {
                            continue;
                        }
                        auto occ2 = occ;
                        ++occ2[j];
                        next[occ2] += c * f;
                    }
                }
                poly = std::move(next);
            }
        }

        std::vector<int> base = basis.occupations();
        for (const auto &[occ, c] : poly) {
            double norm_out = 1.0;
            for (std::size_t j = 0; j < t_count; ++j) {
                base[targets[j]] = occ[j];
                norm_out *= factorial(occ[j]);
            }
            out[FockBasisState(base)] += c * std::sqrt(norm_out);
        }
    }
    return PureState(state.registry(), std::move(out));
}

MixedState apply_unitary(const MixedState &state, const ModeUnitary &u) {
    std::vector<WeightedState> components;
    for (const auto &c : state.components()) {
        components.push_back({c.weight, apply_unitary(c.state, u)});
    }
    return MixedState(std::move(components));
}

PureState apply_routing(const PureState &state, const ModeRouting &routing) {
    return PureState(routing.apply(state.registry()), state.terms());
}

MixedState apply_routing(const MixedState &state, const ModeRouting &routing) {
    std::vector<WeightedState> components;
    for (const auto &c : state.components()) {
        components.push_back({c.weight, apply_routing(c.state, routing)});
    }
    return MixedState(std::move(components));
}

Distribution probability_distribution(const PureState &state, std::span<const ModeLabel> subset) {
    const auto idx = indices_of(state.registry(), subset);
    Distribution dist;
    std::vector<int> key(idx.size());
    for (const auto &[basis, amp] : state.terms()) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            key[i] = basis[idx[i]];
        }
        dist[FockBasisState(key)] += std::norm(amp);
    }
    return dist;
}

Distribution probability_distribution(const MixedState &state, std::span<const ModeLabel> subset) {
    Distribution dist;
    for (const auto &c : state.components()) {
        for (const auto &[pattern, p] : probability_distribution(c.state, subset)) {
            dist[pattern] += c.weight * p;
        }
    }
    return dist;
}

} // namespace bsm
