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

#include <cstdint>
#include <span>
#include <vector>

#include "shorbrach/linalg.hpp"

namespace shorbrach {

inline constexpr int kMaxQubits = 10;

/// Dense pure state over n qubits. Basis index bit (n-1-q) holds qubit q, so
/// qubit 0 is the most significant bit.
class StateVector {
 public:
  StateVector(int n_qubits, Amplitudes amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dimension() const noexcept { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }
  /// Throws DomainError for the zero vector.
  StateVector normalized() const;

 private:
  int n_qubits_;
  Amplitudes amplitudes_;
};

/// Number of qubits for a power-of-two dimension; throws otherwise.
int qubits_for_dimension(Eigen::Index dim);

/// Wraps a raw amplitude vector whose length is a power of two.
StateVector make_state(Amplitudes amplitudes);

StateVector new_basis_state(int n_qubits, std::uint64_t bitstring);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

StateVector apply_operator(const Operator& m, const StateVector& s);

/// Lifts a 2^k x 2^k gate acting on `targets` (first target = most significant
/// gate index) to the full 2^n register.
Operator embed_gate(const Operator& gate, std::span<const int> targets, int n_qubits);

/// exp(-i H t) s via eigendecomposition of the Hermitian generator.
StateVector evolve(const Operator& hamiltonian, double t, const StateVector& s);

/// Propagator exp(-i H t) itself.
Operator propagator(const Operator& hamiltonian, double t);

/// Marginal outcome probabilities; `qubits[0]` is the outcome's most significant bit.
std::vector<double> measure_register(const StateVector& s, std::span<const int> qubits);

/// Spin-1/2 operators I_k = sigma_k / 2 and the two-spin products used for
/// coupled evolution (I acts on the first spin, S on the second).
namespace spin {
Operator Ix();
Operator Iy();
Operator Iz();
/// I_z (x) 1
Operator Iz1();
/// 1 (x) S_z
Operator Sz2();
/// I_z (x) S_z
Operator IzSz();
}  // namespace spin

}  // namespace shorbrach
