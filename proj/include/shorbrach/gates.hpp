// Copyright 2026 The shorbrach Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shorbrach/linalg.hpp"

namespace shorbrach {

/// A named one- or two-qubit unitary. For controlled gates the control is the
/// first (most significant) gate index.
struct Gate {
  std::string name;
  int arity = 1;
  Operator matrix;
  std::optional<double> param;

  /// Name with the angle in compact form, e.g. "CPHASE(-pi/2)".
  std::string label() const;
};

/// Names accepted by standard_gate, in a stable order.
const std::vector<std::string>& standard_gate_names();

bool takes_param(std::string_view name);

/// Builds H, X, SX, SXDG, CNOT, CSX, CSXDG, CPHASE(phi), PH or PHI.
/// CPHASE(phi) = diag(1, 1, 1, e^{i phi}); PH is the 90 degree y rotation and PHI
/// its inverse. Throws DomainError for an unknown name or a missing/extra angle.
Gate standard_gate(std::string_view name, std::optional<double> param = std::nullopt);

/// Inverse gate, named where the inverse is itself a standard gate.
Gate adjoint(const Gate& g);

/// Formats an angle as a multiple of pi when it is k*pi/8, otherwise as a number.
std::string format_angle(double radians);

}  // namespace shorbrach
