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
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shorbrach/circuit.hpp"
#include "shorbrach/config.hpp"
#include "shorbrach/nmr.hpp"

namespace shorbrach {

/// Stream derivation
/// -----------------
/// Every random stream is a std::mt19937_64 seeded with a 64-bit value derived
/// through the SplitMix64 finalizer:
///
///     step seed   = splitmix64(seed XOR step_index)
///     chunk seed  = splitmix64(step_seed + (chunk_index + 1) * 0x9E3779B97F4A7C15)
///
/// Samples are drawn in fixed-size chunks, each from its own chunk stream, so
/// the result does not depend on how chunks are spread over worker threads.
using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t step_stream_seed(std::uint64_t seed, std::uint64_t step_index) noexcept {
  return splitmix64(seed ^ step_index);
}

constexpr std::uint64_t chunk_stream_seed(std::uint64_t stream, std::uint64_t chunk) noexcept {
  return splitmix64(stream + (chunk + 1) * 0x9E3779B97F4A7C15ull);
}

inline constexpr std::uint64_t kChunkSize = 16384;

/// paper_real: uniform on the real unit sphere S^{d-1}; haar: uniform on the
/// complex unit sphere in C^d.
enum class SamplingMode { PaperReal, Haar };

std::string_view to_string(SamplingMode m);
/// Accepts "paper_real" or "haar"; throws ConfigError otherwise.
SamplingMode parse_sampling_mode(std::string_view s);

/// Normalized Gaussian draw written into `out` (resized to d).
void sample_amplitudes(Eigen::Index d, SamplingMode mode, Engine& eng, Amplitudes& out);

/// Random normalized state of dimension d (a power of two).
StateVector sample_state(Eigen::Index d, SamplingMode mode, Engine& eng);

struct McConfig {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::PaperReal;
  /// Per-gate omega overrides (rad/s), keyed by gate name or NAME(|angle|).
  std::map<std::string, double> omega_map;
  /// Worker threads; 0 picks the hardware concurrency. Never changes results.
  unsigned threads = 0;
};

/// Reads samples, seed, mode, threads and omega.<gate> over `base`.
McConfig mc_config_from_config(const KeyValueConfig& cfg, McConfig base = {});

struct McEstimate {
  double mean = 0.0;
  /// Sample standard deviation over sqrt(n).
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::PaperReal;
};

/// Mean over samples psi of optimal_time(psi, gate * psi, omega) drawing from
/// the stream `stream_seed`. Throws std::logic_error if a sample leaves
/// [0, pi / (2 omega)].
McEstimate expected_optimal_time(const Operator& gate, double omega, const McConfig& cfg, std::uint64_t stream_seed);

/// Convenience overload drawing from stream cfg.seed.
McEstimate expected_optimal_time(const Gate& gate, double omega, const McConfig& cfg);

/// Omega used for a step: an override from cfg.omega_map (NAME(|angle|) first,
/// then NAME), else omega_n / 2 for one-qubit gates and pi |J| / 2 for the
/// coupled pair of a two-qubit gate.
double step_omega(const CircuitStep& step, const McConfig& cfg, const NmrParams& p);

struct StepEstimate {
  int step = 0;
  std::string gate;
  double omega = 0.0;
  McEstimate estimate;
};

struct CircuitEstimate {
  std::vector<StepEstimate> steps;
  /// Sum of means; standard errors combined in quadrature.
  McEstimate total;
};

CircuitEstimate circuit_expected_time(const Circuit& c, const McConfig& cfg, const NmrParams& p);

}  // namespace shorbrach
