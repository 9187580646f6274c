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

#include "bsm/elements.hpp"

#include <cmath>
#include <numbers>

#include "bsm/errors.hpp"

namespace bsm {

double WaveplateSpec::retardance() const {
    return kind == WaveplateKind::Half ? std::numbers::pi : std::numbers::pi / 2.0;
}

double degrees(double deg) { return deg * std::numbers::pi / 180.0; }

ModeUnitary balanced_bs(const std::string &spatial1, const std::string &spatial2) {
    if (spatial1 == spatial2) {
        throw RegistryError("beam splitter inputs must be distinct spatial modes");
    }
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex is{0.0, s};
    // targets: 1H 1V 2H 2V
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    for (int p = 0; p < 2; ++p) {
        m(p, p) = s;
        m(p + 2, p + 2) = s;
        m(p, p + 2) = is;
        m(p + 2, p) = is;
    }
    return ModeUnitary(std::move(m), {{spatial1, Polarization::H},
                                      {spatial1, Polarization::V},
                                      {spatial2, Polarization::H},
                                      {spatial2, Polarization::V}});
}

ModeUnitary waveplate(const std::string &spatial, const WaveplateSpec &spec) {
    if (!std::isfinite(spec.angle)) {
        throw ValidationError("waveplate angle must be finite");
    }
    const double c = std::cos(spec.angle);
    const double s = std::sin(spec.angle);
    Eigen::Matrix2cd rot;
    rot << c, -s, s, c;
    Eigen::Matrix2cd retard = Eigen::Matrix2cd::Zero();
    retard(0, 0) = 1.0;
    retard(1, 1) = std::polar(1.0, spec.retardance());
    Eigen::MatrixXcd m = rot * retard * rot.transpose();
    return ModeUnitary(std::move(m), {{spatial, Polarization::H}, {spatial, Polarization::V}});
}

ModeRouting pbs_split(const std::string &spatial_in, const std::string &spatial_out_h,
                      const std::string &spatial_out_v) {
    if (spatial_out_h == spatial_out_v) {
        throw RegistryError("PBS outputs must be distinct spatial modes");
    }
    return ModeRouting({{{spatial_in, Polarization::H}, {spatial_out_h, Polarization::H}},
                        {{spatial_in, Polarization::V}, {spatial_out_v, Polarization::V}}});
}

} // namespace bsm
