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

#include "shorbrach/state.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/core.h>

#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

void check_qubit_list(std::span<const int> qubits, int n_qubits, const char* who) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits)
      throw DomainError(fmt::format("{}: qubit index {} out of range for {} qubits", who, qubits[i], n_qubits));
    for (std::size_t j = 0; j < i; ++j)
      if (qubits[i] == qubits[j]) throw DomainError(fmt::format("{}: repeated qubit index {}", who, qubits[i]));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, Amplitudes amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DomainError(fmt::format("StateVector: {} qubits outside [1, {}]", n_qubits, kMaxQubits));
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits))
    throw DomainError(fmt::format("StateVector: {} amplitudes for {} qubits", amplitudes_.size(), n_qubits));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("StateVector: cannot normalize the zero vector");
  return StateVector(n_qubits_, amplitudes_ / n);
}

int qubits_for_dimension(Eigen::Index dim) {
  for (int n = 1; n <= kMaxQubits; ++n)
    if ((Eigen::Index{1} << n) == dim) return n;
  throw DomainError(fmt::format("dimension {} is not 2^n for 1 <= n <= {}", dim, kMaxQubits));
}

StateVector make_state(Amplitudes amplitudes) {
  const int n = qubits_for_dimension(amplitudes.size());
  return StateVector(n, std::move(amplitudes));
}

StateVector new_basis_state(int n_qubits, std::uint64_t bitstring) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DomainError(fmt::format("new_basis_state: {} qubits outside [1, {}]", n_qubits, kMaxQubits));
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (bitstring >= dim)
    throw DomainError(fmt::format("new_basis_state: bitstring {} out of range for {} qubits", bitstring, n_qubits));
  Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
  a[static_cast<Eigen::Index>(bitstring)] = 1.0;
  return StateVector(n_qubits, std::move(a));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension())
    throw DomainError(fmt::format("inner_product: dimensions {} and {} differ", a.dimension(), b.dimension()));
  return a.amplitudes().dot(b.amplitudes());
}

StateVector apply_operator(const Operator& m, const StateVector& s) {
  if (m.rows() != m.cols() || m.cols() != s.dimension())
    throw DomainError(fmt::format("apply_operator: {}x{} operator on dimension {}", m.rows(), m.cols(), s.dimension()));
  return StateVector(s.n_qubits(), m * s.amplitudes());
}

Operator embed_gate(const Operator& gate, std::span<const int> targets, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DomainError(fmt::format("embed_gate: {} qubits outside [1, {}]", n_qubits, kMaxQubits));
  check_qubit_list(targets, n_qubits, "embed_gate");
  const int k = static_cast<int>(targets.size());
  const Eigen::Index sub = Eigen::Index{1} << k;
  if (gate.rows() != sub || gate.cols() != sub)
    throw DomainError(fmt::format("embed_gate: {}x{} gate for {} targets", gate.rows(), gate.cols(), k));

  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::Index target_mask = 0;
  for (int t : targets) target_mask |= Eigen::Index{1} << (n_qubits - 1 - t);

  // Scatter the gate's sub-index bits into register positions.
  std::vector<Eigen::Index> scatter(static_cast<std::size_t>(sub), 0);
  for (Eigen::Index r = 0; r < sub; ++r)
    for (int i = 0; i < k; ++i)
      if ((r >> (k - 1 - i)) & 1) scatter[r] |= Eigen::Index{1} << (n_qubits - 1 - targets[i]);

  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index c = 0;
    for (int i = 0; i < k; ++i) c = (c << 1) | ((col >> (n_qubits - 1 - targets[i])) & 1);
    const Eigen::Index rest = col & ~target_mask;
    for (Eigen::Index r = 0; r < sub; ++r) {
      const Complex v = gate(r, c);
      if (v != Complex{}) out(rest | scatter[r], col) = v;
    }
  }
  return out;
}

Operator propagator(const Operator& hamiltonian, double t) {
  if (!is_hermitian(hamiltonian)) throw DomainError("evolve: generator is not Hermitian");
  if (t == 0.0) return Operator::Identity(hamiltonian.rows(), hamiltonian.cols());
  const Eigen::SelfAdjointEigenSolver<Operator> eig(hamiltonian);
  if (eig.info() != Eigen::Success) throw DomainError("evolve: eigendecomposition failed");
  const Amplitudes phases = (eig.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

StateVector evolve(const Operator& hamiltonian, double t, const StateVector& s) {
  if (hamiltonian.rows() != s.dimension())
    throw DomainError(fmt::format("evolve: {}x{} generator on dimension {}", hamiltonian.rows(), hamiltonian.cols(), s.dimension()));
  return apply_operator(propagator(hamiltonian, t), s);
}

std::vector<double> measure_register(const StateVector& s, std::span<const int> qubits) {
  const int n = s.n_qubits();
  check_qubit_list(qubits, n, "measure_register");
  const int k = static_cast<int>(qubits.size());
  std::vector<double> probs(std::size_t{1} << k, 0.0);
  for (Eigen::Index i = 0; i < s.dimension(); ++i) {
    std::size_t outcome = 0;
    for (int q : qubits) outcome = (outcome << 1) | static_cast<std::size_t>((i >> (n - 1 - q)) & 1);
    probs[outcome] += std::norm(s[i]);
  }
  return probs;
}

namespace spin {

Operator Ix() {
  Operator m(2, 2);
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}

Operator Iy() {
  Operator m(2, 2);
  m << Complex(0, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0, 0);
  return m;
}

Operator Iz() {
  Operator m(2, 2);
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

Operator Iz1() { return kron(Iz(), Operator::Identity(2, 2)); }
Operator Sz2() { return kron(Operator::Identity(2, 2), Iz()); }
Operator IzSz() { return kron(Iz(), Iz()); }

}  // namespace spin

}  // namespace shorbrach
