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
 * Standard and ancilla-enhanced Bell-state measurement circuits, their ideal
 * detection statistics and the pattern classifier derived from them.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bsm/fock.hpp"

namespace bsm {

enum class BellKind { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3 };

inline constexpr std::array<BellKind, 4> kAllBellKinds = {BellKind::PsiPlus, BellKind::PsiMinus,
                                                          BellKind::PhiPlus, BellKind::PhiMinus};

/// Classifier output: one of the Bell states or an inconclusive result.
enum class Outcome { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3, Ambiguous = 4 };

enum class SchemeKind { Standard, Enhanced };

Outcome outcome_of(BellKind kind);
std::string to_string(BellKind kind);   ///< "psi+", "psi-", "phi+", "phi-"
std::string to_string(Outcome outcome); ///< as BellKind, or "ambiguous"
std::string to_string(SchemeKind scheme);
BellKind parse_bell_kind(const std::string &text);
Outcome parse_outcome(const std::string &text);
SchemeKind parse_scheme(const std::string &text);

/// Per-Bell-input distributions, indexed by static_cast<int>(BellKind).
using BellDistributions = std::array<Distribution, 4>;

/// Bell state on spatial modes a, b (H = logical 0).
PureState make_bell(BellKind kind);
/// (e_H^dag e_H^dag + e_V^dag e_V^dag)|vac> / 2 on spatial mode e.
PureState make_aux();

/// Detection modes in output order: (cH, cV, dH, dV) for the standard scheme
/// and (dH, dV, fH, fV, gH, gV) for the enhanced one.
std::vector<ModeLabel> detection_modes(SchemeKind scheme);
std::vector<std::string> detection_mode_names(SchemeKind scheme);
/// Photon number every ideal detection pattern carries.
int expected_photons(SchemeKind scheme);

/// Runs the interferometer. `aux` is ignored for the standard scheme.
MixedState propagate(SchemeKind scheme, const MixedState &bell, const MixedState &aux);

Distribution detection_distribution(SchemeKind scheme, const MixedState &bell, const MixedState &aux);
Distribution ideal_distribution(SchemeKind scheme, BellKind input);
/// The four ideal distributions, evaluated concurrently.
BellDistributions ideal_distributions(SchemeKind scheme);

class ClassificationTable {
  public:
    ClassificationTable(SchemeKind scheme, double tolerance, std::map<FockBasisState, Outcome> entries);

    [[nodiscard]] SchemeKind scheme() const { return scheme_; }
    [[nodiscard]] double tolerance() const { return tolerance_; }
    [[nodiscard]] const std::map<FockBasisState, Outcome> &entries() const { return entries_; }
    [[nodiscard]] std::size_t pattern_size() const { return detection_modes(scheme_).size(); }

    bool operator==(const ClassificationTable &) const = default;

  private:
    SchemeKind scheme_;
    double tolerance_;
    std::map<FockBasisState, Outcome> entries_;
};

/// A pattern gets label K iff its probability exceeds `tolerance` for input K
/// only; every other reachable pattern is Ambiguous.
ClassificationTable build_classifier(SchemeKind scheme, const BellDistributions &dists,
                                     double tolerance = 1e-12);
ClassificationTable build_classifier(SchemeKind scheme, double tolerance = 1e-12);

/// Unseen patterns are Ambiguous; wrong pattern length throws ValidationError.
Outcome classify(const FockBasisState &pattern, const ClassificationTable &table);

} // namespace bsm
