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

#include "shorbrach/gates.hpp"

#include <cmath>
#include <fmt/core.h>
#include <numbers>

#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

using std::numbers::pi;

Operator controlled(const Operator& u) {
  Operator m = Operator::Identity(4, 4);
  m.bottomRightCorner(2, 2) = u;
  return m;
}

Operator pauli_x() {
  Operator m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Operator sqrt_not() {
  Operator m(2, 2);
  m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
  return m;
}

Operator y_rotation(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Operator m(2, 2);
  m << c, -s, s, c;
  return m;
}

}  // namespace

const std::vector<std::string>& standard_gate_names() {
  static const std::vector<std::string> names = {"H",   "X",     "SX",     "SXDG", "CNOT",
                                                 "CSX", "CSXDG", "CPHASE", "PH",   "PHI"};
  return names;
}

bool takes_param(std::string_view name) { return name == "CPHASE"; }

Gate standard_gate(std::string_view name, std::optional<double> param) {
  if (takes_param(name) && !param)
    throw DomainError(fmt::format("gate {} requires an angle", name));
  if (!takes_param(name) && param)
    throw DomainError(fmt::format("gate {} takes no angle", name));
  if (param && !std::isfinite(*param)) throw DomainError(fmt::format("gate {}: non-finite angle", name));

  Gate g{std::string(name), 1, {}, param};
  if (name == "H") {
    g.matrix = Operator(2, 2);
    g.matrix << 1.0, 1.0, 1.0, -1.0;
    g.matrix /= std::sqrt(2.0);
  } else if (name == "X") {
    g.matrix = pauli_x();
  } else if (name == "SX") {
    g.matrix = sqrt_not();
  } else if (name == "SXDG") {
    g.matrix = sqrt_not().adjoint();
  } else if (name == "PH") {
    g.matrix = y_rotation(pi / 2);
  } else if (name == "PHI") {
    g.matrix = y_rotation(-pi / 2);
  } else if (name == "CNOT") {
    g.arity = 2;
    g.matrix = controlled(pauli_x());
  } else if (name == "CSX") {
    g.arity = 2;
    g.matrix = controlled(sqrt_not());
  } else if (name == "CSXDG") {
    g.arity = 2;
    g.matrix = controlled(sqrt_not().adjoint());
  } else if (name == "CPHASE") {
    g.arity = 2;
    g.matrix = Operator::Identity(4, 4);
    g.matrix(3, 3) = std::polar(1.0, *param);
  } else {
    throw DomainError(fmt::format("unknown gate '{}'", name));
  }
  return g;
}

Gate adjoint(const Gate& g) {
  static const std::pair<const char*, const char*> pairs[] = {
      {"H", "H"}, {"X", "X"}, {"CNOT", "CNOT"}, {"SX", "SXDG"}, {"SXDG", "SX"},
      {"CSX", "CSXDG"}, {"CSXDG", "CSX"}, {"PH", "PHI"}, {"PHI", "PH"}};
  for (auto [from, to] : pairs)
    if (g.name == from) return standard_gate(to);
  if (g.name == "CPHASE" && g.param) return standard_gate("CPHASE", -*g.param);
  return Gate{g.name + "^-1", g.arity, g.matrix.adjoint(), g.param};
}

std::string format_angle(double radians) {
  const double eighths = radians / (pi / 8);
  const double k = std::round(eighths);
  if (std::abs(eighths - k) > 1e-12 || k == 0) return fmt::format("{}", radians);
  // Reduce k/8 to lowest terms.
  long num = static_cast<long>(k), den = 8;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  const std::string sign = num < 0 ? "-" : "";
  const long mag = std::labs(num);
  const std::string head = mag == 1 ? "pi" : fmt::format("{}pi", mag);
  return den == 1 ? sign + head : fmt::format("{}{}/{}", sign, head, den);
}

std::string Gate::label() const {
  return param ? fmt::format("{}({})", name, format_angle(*param)) : name;
}

}  // namespace shorbrach
