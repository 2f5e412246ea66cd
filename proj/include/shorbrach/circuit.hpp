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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shorbrach/gates.hpp"
#include "shorbrach/state.hpp"

namespace shorbrach {

struct CircuitStep {
  int index = 0;
  Gate gate;
  /// Control first for controlled gates.
  std::vector<int> targets;
};

/// Ordered list of steps on a fixed register. Step indices strictly increase and
/// every target lies inside the register.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  /// Validates the step against the register and the previous index.
  void add_step(CircuitStep step);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<CircuitStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

 private:
  int n_qubits_;
  std::vector<CircuitStep> steps_;
};

/// Line-oriented circuit text:
///
///     # comment
///     step <int>: <GATE>[(<float>)] q<int> [q<int>]
///
/// With no explicit `n_qubits` the register is sized by the largest index used.
Circuit parse_circuit(std::string_view text, std::optional<int> n_qubits = std::nullopt);

/// Inverse of parse_circuit; angles are written in shortest round-trip form.
std::string render_circuit(const Circuit& c);

/// Reads and parses a circuit file. Throws InputFileError if unreadable.
Circuit load_circuit(const std::filesystem::path& path, std::optional<int> n_qubits = std::nullopt);

StateVector run_circuit(const Circuit& c, const StateVector& s0);

/// Runs steps at positions [first, last) of the step list.
StateVector run_steps(const Circuit& c, std::size_t first, std::size_t last, const StateVector& s0);

/// Full 2^n x 2^n unitary of the circuit.
Operator circuit_unitary(const Circuit& c);

/// Step-wise reversed circuit of adjoint gates, renumbered from 1.
Circuit inverse_circuit(const Circuit& c);

}  // namespace shorbrach
