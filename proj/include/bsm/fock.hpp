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
 * Sparse multi-photon states over labelled optical modes and linear mode
 * transformations acting on them.
 *
 * Basis states are stored as occupation vectors |n_0 n_1 ...> with
 * normalized-Fock amplitudes, i.e. a term (c, n) denotes
 * c * prod_i (a_i^dag)^{n_i} / sqrt(n_i!) |vac>. Creation-operator
 * polynomials are converted with the sqrt(n!) factors at construction.
 */
#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bsm {

using Complex = std::complex<double>;

/// Amplitudes below this magnitude are dropped from sparse states.
inline constexpr double kPruneThreshold = 1e-14;
/// Tolerance for norm, weight-sum and unitarity checks.
inline constexpr double kNormTolerance = 1e-10;

enum class Polarization : unsigned char { H = 0, V = 1 };

struct ModeLabel {
    std::string spatial;
    Polarization pol = Polarization::H;

    auto operator<=>(const ModeLabel &) const = default;
};

std::string to_string(const ModeLabel &label);

/// Ordered, duplicate-free list of mode labels.
class ModeRegistry {
  public:
    ModeRegistry() = default;
    explicit ModeRegistry(std::vector<ModeLabel> modes);

    /// H and V modes for each spatial id, in the given order.
    static ModeRegistry from_spatial(std::initializer_list<std::string> spatial_ids);

    [[nodiscard]] std::size_t size() const { return modes_.size(); }
    [[nodiscard]] const std::vector<ModeLabel> &modes() const { return modes_; }
    [[nodiscard]] const ModeLabel &operator[](std::size_t i) const { return modes_[i]; }

    [[nodiscard]] bool contains(const ModeLabel &label) const;
    [[nodiscard]] bool has_spatial(const std::string &spatial) const;
    /// Throws RegistryError if the label is absent.
    [[nodiscard]] std::size_t index_of(const ModeLabel &label) const;

    /// Concatenation; spatial ids of the two registries must be disjoint.
    [[nodiscard]] ModeRegistry concat(const ModeRegistry &other) const;

    bool operator==(const ModeRegistry &) const = default;

  private:
    std::vector<ModeLabel> modes_;
};

/// Occupation-number vector over a registry (or a subset of it).
class FockBasisState {
  public:
    FockBasisState() = default;
    explicit FockBasisState(std::vector<int> occupations);
    FockBasisState(std::initializer_list<int> occupations);

    [[nodiscard]] std::size_t size() const { return occ_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return occ_[i]; }
    [[nodiscard]] const std::vector<int> &occupations() const { return occ_; }
    [[nodiscard]] int total() const;

    auto operator<=>(const FockBasisState &) const = default;

  private:
    std::vector<int> occ_;
};

/// Comma separated occupations, e.g. "0,1,2,0,1,0".
std::string to_key(const FockBasisState &state);
/// Inverse of to_key. Throws ValidationError on malformed keys.
FockBasisState from_key(const std::string &key);

using Distribution = std::map<FockBasisState, double>;

/// One monomial of a creation-operator polynomial: coefficient times the
/// product of a^dag over the listed modes (repeats allowed).
struct CreationMonomial {
    Complex coefficient;
    std::vector<ModeLabel> modes;
};

class PureState {
  public:
    using Terms = std::map<FockBasisState, Complex>;

    /// Validates key lengths and unit norm; prunes tiny amplitudes.
    PureState(ModeRegistry registry, Terms terms);

    static PureState vacuum(ModeRegistry registry);
    /// Builds sum_k c_k prod a^dag |vac> with Fock normalization factors.
    static PureState from_creation_polynomial(ModeRegistry registry,
                                              const std::vector<CreationMonomial> &poly);
    /// As from_creation_polynomial but rescales to unit norm first.
    static PureState normalized_from_creation_polynomial(
        ModeRegistry registry, const std::vector<CreationMonomial> &poly);

    [[nodiscard]] const ModeRegistry &registry() const { return registry_; }
    [[nodiscard]] const Terms &terms() const { return terms_; }
    [[nodiscard]] Complex amplitude(const FockBasisState &basis) const;
    [[nodiscard]] double norm_squared() const;

  private:
    ModeRegistry registry_;
    Terms terms_;
};

/// <left|right>. Registries must match.
Complex inner_product(const PureState &left, const PureState &right);

struct WeightedState {
    double weight;
    PureState state;
};

/// Convex mixture of pure states on a common registry.
class MixedState {
  public:
    explicit MixedState(std::vector<WeightedState> components);
    MixedState(const PureState &pure); // NOLINT(google-explicit-constructor)

    [[nodiscard]] const std::vector<WeightedState> &components() const { return components_; }
    [[nodiscard]] const ModeRegistry &registry() const { return components_.front().state.registry(); }

  private:
    std::vector<WeightedState> components_;
};

/// Unitary acting on an ordered subset of modes. Column i holds the image of
/// target i: a_i^dag -> sum_j U(j, i) a_j^dag.
class ModeUnitary {
  public:
    ModeUnitary(Eigen::MatrixXcd matrix, std::vector<ModeLabel> targets);

    [[nodiscard]] const Eigen::MatrixXcd &matrix() const { return matrix_; }
    [[nodiscard]] const std::vector<ModeLabel> &targets() const { return targets_; }

    /// max |(U^dag U - I)_ij|
    [[nodiscard]] double unitarity_defect() const;

  private:
    Eigen::MatrixXcd matrix_;
    std::vector<ModeLabel> targets_;
};

/// second * first (first applied first). Both must act on the same targets.
ModeUnitary compose(const ModeUnitary &second, const ModeUnitary &first);

/// Relabelling of modes; amplitudes are untouched.
class ModeRouting {
  public:
    explicit ModeRouting(std::vector<std::pair<ModeLabel, ModeLabel>> moves);

    /// Renames every mode of `from` to the same polarization of `to`.
    static ModeRouting rename_spatial(const std::string &from, const std::string &to);

    [[nodiscard]] const std::vector<std::pair<ModeLabel, ModeLabel>> &moves() const { return moves_; }
    [[nodiscard]] ModeRegistry apply(const ModeRegistry &registry) const;

  private:
    std::vector<std::pair<ModeLabel, ModeLabel>> moves_;
};

/// Product state on left.registry() ++ right.registry().
PureState tensor(const PureState &left, const PureState &right);
MixedState tensor(const MixedState &left, const MixedState &right);

PureState apply_unitary(const PureState &state, const ModeUnitary &u);
MixedState apply_unitary(const MixedState &state, const ModeUnitary &u);

PureState apply_routing(const PureState &state, const ModeRouting &routing);
MixedState apply_routing(const MixedState &state, const ModeRouting &routing);

/// Marginal photon-number distribution over `subset`, keyed by occupations
/// in subset order.
Distribution probability_distribution(const PureState &state, std::span<const ModeLabel> subset);
Distribution probability_distribution(const MixedState &state, std::span<const ModeLabel> subset);

} // namespace bsm
