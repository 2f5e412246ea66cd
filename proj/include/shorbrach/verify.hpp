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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "shorbrach/gates.hpp"
#include "shorbrach/montecarlo.hpp"

namespace shorbrach {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path circuit;
  int a = 7;
  std::uint64_t seed = 20240601;
};

/// Every gate must satisfy U^dagger U = 1 within 1e-12.
CheckResult check_gate_unitarity(std::span<const Gate> gates);

/// Standard gate set plus CPHASE at sampled angles.
std::vector<Gate> standard_gate_catalogue();

/// Random Hermitian matrix (A + A^dagger) / 2 with Gaussian entries.
Operator random_hermitian(Eigen::Index dim, Engine& eng);

/// Runs the invariant checks of every module; stops at nothing, reports all.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts);

}  // namespace shorbrach
