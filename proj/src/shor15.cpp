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

#include "shorbrach/shor15.hpp"

#include <algorithm>
#include <fmt/core.h>
#include <numeric>

#include "shorbrach/errors.hpp"

namespace shorbrach {

std::pair<std::size_t, std::size_t> ShorInstance::function_steps() const {
  return {kSuperpositionSteps, circuit.size() - kInverseQftSteps};
}

ShorInstance make_shor_instance(int a, Circuit circuit) {
  if (a < 2 || a >= ShorInstance::kN || std::gcd(a, ShorInstance::kN) != 1)
    throw DomainError(fmt::format("base a = {} is not a nontrivial unit mod 15", a));
  if (circuit.n_qubits() != ShorInstance::kQubits)
    throw DomainError(fmt::format("Shor-15 circuit must act on 7 qubits, got {}", circuit.n_qubits()));
  if (circuit.size() < ShorInstance::kSuperpositionSteps + ShorInstance::kInverseQftSteps)
    throw DomainError(fmt::format("Shor-15 circuit has only {} steps", circuit.size()));
  ShorInstance inst;
  inst.a = a;
  inst.circuit = std::move(circuit);
  return inst;
}

std::uint64_t modexp_oracle(std::uint64_t a, std::uint64_t x, std::uint64_t n) {
  if (n < 2 || std::gcd(a, n) != 1) throw DomainError(fmt::format("modexp: gcd({}, {}) != 1", a, n));
  std::uint64_t result = 1 % n, base = a % n;
  while (x > 0) {
    if (x & 1) result = result * base % n;
    base = base * base % n;
    x >>= 1;
  }
  return result;
}

std::uint64_t shor_basis_index(int x, int f) { return static_cast<std::uint64_t>(x) * 16 + static_cast<std::uint64_t>(f); }

bool FunctionGateReport::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

void FunctionGateReport::require_pass() const {
  if (checks.empty()) throw VerificationError("function-gate check: no inputs were checked");
  for (const auto& c : checks)
    if (!c.passed)
      throw VerificationError(fmt::format(
          "function-gate check failed for x = {}: expected f = {}, observed |x={}, f={}> with |amplitude| = {:.12f}",
          c.x, c.expected_f, c.observed_x, c.observed_f, c.magnitude));
}

FunctionGateReport verify_function_gates(const ShorInstance& inst, double tol) {
  const auto [first, last] = inst.function_steps();
  FunctionGateReport report;
  for (int x = 0; x < 8; ++x) {
    const auto in = new_basis_state(ShorInstance::kQubits, shor_basis_index(x, 1));
    const auto out = run_steps(inst.circuit, first, last, in);
    Eigen::Index best = 0;
    out.amplitudes().cwiseAbs().maxCoeff(&best);
    FunctionCheck c;
    c.x = x;
    c.expected_f = static_cast<int>(modexp_oracle(inst.a, x, ShorInstance::kN));
    c.observed_x = static_cast<int>(best / 16);
    c.observed_f = static_cast<int>(best % 16);
    c.magnitude = std::abs(out[static_cast<Eigen::Index>(shor_basis_index(x, c.expected_f))]);
    c.passed = std::abs(c.magnitude - 1.0) <= tol;
    report.checks.push_back(c);
  }
  return report;
}

std::vector<double> x_register_distribution(const ShorInstance& inst) {
  const auto out = run_circuit(inst.circuit, new_basis_state(ShorInstance::kQubits, 1));
  return measure_register(out, inst.readout);
}

PeriodResult extract_period(const std::vector<double>& dist, double threshold) {
  if (dist.size() != 8) throw DomainError(fmt::format("extract_period: expected 8 outcomes, got {}", dist.size()));
  PeriodResult res;
  for (int y = 0; y < 8; ++y)
    if (dist[static_cast<std::size_t>(y)] > threshold) res.peaks.push_back(y);
  if (res.peaks.empty() || res.peaks.front() != 0)
    throw VerificationError("extract_period: outcome 0 carries no weight");
  if (res.peaks.size() == 1) {
    res.period = 1;
    res.trivial = true;
    return res;
  }
  const int spacing = res.peaks[1] - res.peaks[0];
  for (std::size_t i = 1; i < res.peaks.size(); ++i)
    if (res.peaks[i] - res.peaks[i - 1] != spacing)
      throw VerificationError("extract_period: peaks are not equally spaced");
  if (8 % spacing != 0 || static_cast<int>(res.peaks.size()) != 8 / spacing)
    throw VerificationError(fmt::format("extract_period: spacing {} does not tile 8 outcomes", spacing));
  res.period = 8 / spacing;
  return res;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> factors_from_period(std::uint64_t a, std::uint64_t r,
                                                                           std::uint64_t n) {
  if (r == 0 || r % 2 != 0) return std::nullopt;
  const std::uint64_t half = modexp_oracle(a, r / 2, n);
  if (half == n - 1) return std::nullopt;
  const std::uint64_t p = std::gcd(half + n - 1, n);
  const std::uint64_t q = std::gcd(half + 1, n);
  if (p == 1 || q == 1 || p == n || q == n || p * q != n) return std::nullopt;
  return std::pair{p, q};
}

}  // namespace shorbrach
