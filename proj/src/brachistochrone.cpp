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

#include "shorbrach/brachistochrone.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>

#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

void require_normalized(const StateVector& s, const char* which) {
  if (std::abs(s.norm() - 1.0) > kNumericTol)
    throw DomainError(fmt::format("BrachInstance: {} is not normalized (norm {})", which, s.norm()));
}

Operator projector(const StateVector& s) { return s.amplitudes() * s.amplitudes().adjoint(); }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace

BrachInstance::BrachInstance(StateVector psi_i, StateVector psi_f, double omega)
    : psi_i_(std::move(psi_i)), psi_f_(std::move(psi_f)), omega_(omega) {
  if (psi_i_.dimension() != psi_f_.dimension())
    throw DomainError(fmt::format("BrachInstance: dimensions {} and {} differ", psi_i_.dimension(), psi_f_.dimension()));
  if (!(omega_ > 0.0) || !std::isfinite(omega_))
    throw DomainError(fmt::format("BrachInstance: omega must be positive and finite, got {}", omega_));
  require_normalized(psi_i_, "psi_i");
  require_normalized(psi_f_, "psi_f");
}

Operator make_traceless(const Operator& h) {
  if (h.rows() != h.cols()) throw DomainError("make_traceless: operator is not square");
  const Complex mean = h.trace() / static_cast<double>(h.rows());
  return h - mean * Operator::Identity(h.rows(), h.cols());
}

double energy_variance(const Operator& h, const StateVector& psi) {
  if (!is_hermitian(h)) throw DomainError("energy_variance: operator is not Hermitian");
  if (h.rows() != psi.dimension()) throw DomainError("energy_variance: dimension mismatch");
  const Amplitudes hpsi = h * psi.amplitudes();
  const double mean = psi.amplitudes().dot(hpsi).real();
  const double second = hpsi.squaredNorm();
  return std::sqrt(std::max(0.0, second - mean * mean));
}

std::optional<StateVector> gram_schmidt_target(const StateVector& psi_i, const StateVector& psi_f) {
  const Complex ov = inner_product(psi_i, psi_f);
  const double mag = std::abs(ov);
  Amplitudes aligned = psi_f.amplitudes();
  if (mag > 0.0) aligned *= std::conj(ov) / mag;
  Amplitudes residual = aligned - mag * psi_i.amplitudes();
  const double rn = residual.norm();
  if (rn < kDegenerateNorm) return std::nullopt;
  return StateVector(psi_i.n_qubits(), residual / rn);
}

Operator optimal_hamiltonian(const BrachInstance& inst) {
  const auto perp = gram_schmidt_target(inst.psi_i(), inst.psi_f());
  const Eigen::Index n = inst.psi_i().dimension();
  if (!perp) return Operator::Zero(n, n);
  const Amplitudes& i = inst.psi_i().amplitudes();
  const Amplitudes& f = perp->amplitudes();
  return Complex(0.0, inst.omega()) * (f * i.adjoint() - i * f.adjoint());
}

StateVector optimal_state(const BrachInstance& inst, double t) {
  const auto perp = gram_schmidt_target(inst.psi_i(), inst.psi_f());
  if (!perp) return inst.psi_i();
  const double wt = inst.omega() * t;
  return StateVector(inst.psi_i().n_qubits(),
                     std::cos(wt) * inst.psi_i().amplitudes() + std::sin(wt) * perp->amplitudes());
}

double optimal_time_from_overlap(double overlap_abs, double omega, bool degenerate) {
  if (degenerate) return 0.0;
  return std::acos(std::clamp(overlap_abs, 0.0, 1.0)) / omega;
}

double optimal_time(const BrachInstance& inst) {
  const Complex ov = inner_product(inst.psi_f(), inst.psi_i());
  const Amplitudes residual = inst.psi_f().amplitudes() - std::conj(ov) * inst.psi_i().amplitudes();
  return optimal_time_from_overlap(std::abs(ov), inst.omega(), residual.norm() < kDegenerateNorm);
}

BrachistochroneSolution solve_brachistochrone(const BrachInstance& inst) {
  BrachistochroneSolution sol;
  sol.psi_f_perp = gram_schmidt_target(inst.psi_i(), inst.psi_f());
  sol.H_op = optimal_hamiltonian(inst);
  sol.T_op = optimal_time(inst);
  sol.overlap = std::abs(inner_product(inst.psi_f(), inst.psi_i()));
  return sol;
}

ConstraintOperator constraint_operator(const Operator& h, const StateVector& psi, double lambda) {
  if (!is_hermitian(h)) throw DomainError("constraint_operator: operator is not Hermitian");
  if (h.rows() != psi.dimension()) throw DomainError("constraint_operator: dimension mismatch");
  const double mean = psi.amplitudes().dot(h * psi.amplitudes()).real();
  const Operator f = lambda * (h - mean * projector(psi));
  return ConstraintOperator{0.5 * (f + f.adjoint()), lambda};
}

BrachResidualReport check_brachistochrone(const BrachInstance& inst, int n_steps, double dt) {
  BrachResidualReport rep;
  if (!gram_schmidt_target(inst.psi_i(), inst.psi_f())) return rep;
  n_steps = std::max(n_steps, 1);
  const double T = optimal_time(inst);
  rep.dt = dt > 0.0 ? dt : T / (8.0 * n_steps);
  const Operator H = optimal_hamiltonian(inst);
  const Complex i(0.0, 1.0);

  auto F_at = [&](double t) { return constraint_operator(H, optimal_state(inst, t), 1.0).F; };
  auto P_at = [&](double t) { return projector(optimal_state(inst, t)); };

  for (int k = 0; k <= n_steps; ++k) {
    const double t = T * k / n_steps;
    rep.times.push_back(t);
    const Operator F = F_at(t);
    const Operator P = P_at(t);
    const Operator dF = (F_at(t + rep.dt) - F_at(t - rep.dt)) / (2.0 * rep.dt);
    const Operator dP = (P_at(t + rep.dt) - P_at(t - rep.dt)) / (2.0 * rep.dt);
    rep.max_motion_residual = std::max(rep.max_motion_residual, max_abs(dF - i * commutator(H, F)));
    rep.max_projection_residual = std::max(rep.max_projection_residual, max_abs(F - F * P - P * F));
    rep.max_liouville_residual = std::max(rep.max_liouville_residual, max_abs(dP + i * commutator(H, P)));
  }
  return rep;
}

}  // namespace shorbrach
