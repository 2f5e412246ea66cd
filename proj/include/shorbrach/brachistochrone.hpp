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
#include <vector>

#include "shorbrach/state.hpp"

namespace shorbrach {

/// Start state, target state and energy-variance budget omega (rad/s).
/// Both states are normalized and of equal dimension; omega > 0.
class BrachInstance {
 public:
  BrachInstance(StateVector psi_i, StateVector psi_f, double omega);

  const StateVector& psi_i() const noexcept { return psi_i_; }
  const StateVector& psi_f() const noexcept { return psi_f_; }
  double omega() const noexcept { return omega_; }

 private:
  StateVector psi_i_;
  StateVector psi_f_;
  double omega_;
};

struct BrachistochroneSolution {
  /// Empty when psi_f lies on the ray of psi_i.
  std::optional<StateVector> psi_f_perp;
  Operator H_op;
  double T_op = 0.0;
  double overlap = 0.0;
};

/// Constraint operator F = lambda (H - <H> P) of the energy-variance
/// constraint, with P = |psi><psi|.
struct ConstraintOperator {
  Operator F;
  double lambda = 1.0;
};

/// H - (Tr H / N) 1.
Operator make_traceless(const Operator& h);

/// sqrt(<H^2> - <H>^2), clamped at 0. Throws DomainError if H is not Hermitian.
double energy_variance(const Operator& h, const StateVector& psi);

/// Residual norm below which the target is treated as lying on the ray of psi_i.
inline constexpr double kDegenerateNorm = 1e-9;

/// Phase-aligns psi_f so that <psi_i|psi_f> is real and non-negative, then
/// returns the normalized component orthogonal to psi_i. Empty when degenerate.
std::optional<StateVector> gram_schmidt_target(const StateVector& psi_i, const StateVector& psi_f);

/// H_op = i omega (|psi_f'><psi_i| - |psi_i><psi_f'|); zero when degenerate.
Operator optimal_hamiltonian(const BrachInstance& inst);

/// cos(omega t) psi_i + sin(omega t) psi_f'; psi_i when degenerate.
StateVector optimal_state(const BrachInstance& inst, double t);

/// arccos(|<psi_f|psi_i>|) / omega, with the overlap clamped to [0, 1] and the
/// degenerate case defined as 0.
double optimal_time(const BrachInstance& inst);

/// Same formula on a precomputed |overlap|; `degenerate` forces 0.
double optimal_time_from_overlap(double overlap_abs, double omega, bool degenerate = false);

BrachistochroneSolution solve_brachistochrone(const BrachInstance& inst);

ConstraintOperator constraint_operator(const Operator& h, const StateVector& psi, double lambda);

struct BrachResidualReport {
  std::vector<double> times;
  double dt = 0.0;
  /// max || dF/dt - i[H_op, F] || over sampled times (central differences).
  double max_motion_residual = 0.0;
  /// max || F - F P - P F ||.
  double max_projection_residual = 0.0;
  /// max || dP/dt + i[H_op, P] ||, the Liouville equation for the trajectory.
  double max_liouville_residual = 0.0;
  bool empty() const noexcept { return times.empty(); }
};

/// Samples the optimal trajectory at n_steps + 1 times in [0, T_op] (n_steps = 1
/// gives the endpoints) with lambda = 1. Finite differences use step `dt`, or
/// T_op / (8 n_steps) when dt <= 0. Empty for a degenerate instance.
BrachResidualReport check_brachistochrone(const BrachInstance& inst, int n_steps, double dt = 0.0);

}  // namespace shorbrach
