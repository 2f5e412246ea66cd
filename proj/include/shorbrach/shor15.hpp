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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shorbrach/circuit.hpp"

namespace shorbrach {

/// The 7-qubit factor-15 register and the circuit that runs on it.
///
/// Circuit layout: the first 3 steps prepare the x-register, the last 6 are the
/// swap-free inverse QFT, and everything between is the modular-exponentiation
/// block. Because the inverse QFT omits its swaps, the x-register is read out in
/// reverse qubit order.
struct ShorInstance {
  static constexpr int kN = 15;
  static constexpr int kQubits = 7;
  static constexpr std::size_t kSuperpositionSteps = 3;
  static constexpr std::size_t kInverseQftSteps = 6;

  int a = 7;
  std::array<int, 3> x_register{0, 1, 2};
  std::array<int, 4> f_register{3, 4, 5, 6};
  std::array<int, 3> readout{2, 1, 0};
  Circuit circuit{kQubits};

  /// Index range [first, last) of the modular-exponentiation steps.
  std::pair<std::size_t, std::size_t> function_steps() const;
};

/// Validates gcd(a, 15) = 1, the register width and the minimum step count.
ShorInstance make_shor_instance(int a, Circuit circuit);

/// a^x mod n by repeated squaring. Throws DomainError unless gcd(a, n) = 1.
std::uint64_t modexp_oracle(std::uint64_t a, std::uint64_t x, std::uint64_t n);

/// Basis index of |x>|f> on the 7-qubit register.
std::uint64_t shor_basis_index(int x, int f);

struct FunctionCheck {
  int x = 0;
  int expected_f = 0;
  int observed_x = 0;
  int observed_f = 0;
  double magnitude = 0.0;
  bool passed = false;
};

struct FunctionGateReport {
  std::vector<FunctionCheck> checks;
  bool all_passed() const;
  /// Throws VerificationError naming the first failing x.
  void require_pass() const;
};

/// Runs the modular-exponentiation steps on |x>|0001> for x = 0..7 and compares
/// the f-register with a^x mod 15 (amplitude magnitude within `tol` of 1).
FunctionGateReport verify_function_gates(const ShorInstance& inst, double tol = 1e-9);

/// Exact x-register outcome distribution of the full circuit from |0000001>.
std::vector<double> x_register_distribution(const ShorInstance& inst);

struct PeriodResult {
  int period = 0;
  std::vector<int> peaks;
  /// Set when only the zero outcome carries weight (period 1).
  bool trivial = false;
};

/// Reads the period off an 8-outcome distribution: peaks above `threshold` must
/// be 0, s, 2s, ... and the period is 8 / s. Throws VerificationError otherwise.
PeriodResult extract_period(const std::vector<double>& dist, double threshold = 1e-6);

/// Classical post-processing: gcd(a^{r/2} -/+ 1, n). Empty when r is odd, when
/// a^{r/2} = -1 mod n, or when a factor comes out trivial.
std::optional<std::pair<std::uint64_t, std::uint64_t>> factors_from_period(std::uint64_t a, std::uint64_t r,
                                                                           std::uint64_t n);

}  // namespace shorbrach
