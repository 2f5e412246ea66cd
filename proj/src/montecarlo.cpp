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

#include "shorbrach/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fmt/core.h>
#include <numbers>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "shorbrach/brachistochrone.hpp"
#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

struct ChunkStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Chan et al. pairwise update; applied in chunk-index order only.
void merge(ChunkStats& acc, const ChunkStats& b) {
  if (b.n == 0) return;
  if (acc.n == 0) {
    acc = b;
    return;
  }
  const double n = static_cast<double>(acc.n + b.n);
  const double delta = b.mean - acc.mean;
  acc.mean += delta * (static_cast<double>(b.n) / n);
  acc.m2 += b.m2 + delta * delta * (static_cast<double>(acc.n) * static_cast<double>(b.n) / n);
  acc.n += b.n;
}

ChunkStats run_chunk(const Operator& gate, double omega, SamplingMode mode, std::uint64_t seed,
                     std::uint64_t count) {
  Engine eng(seed);
  const Eigen::Index d = gate.rows();
  const double bound = (std::numbers::pi / 2) / omega;
  Amplitudes psi(d), out(d), residual(d);
  ChunkStats st;
  for (std::uint64_t k = 0; k < count; ++k) {
    sample_amplitudes(d, mode, eng, psi);
    out.noalias() = gate * psi;
    const Complex ov = psi.dot(out);
    residual = out - ov * psi;
    const double t = optimal_time_from_overlap(std::abs(ov), omega, residual.norm() < kDegenerateNorm);
    if (!(t >= 0.0 && t <= bound))
      throw std::logic_error(fmt::format("optimal time sample {} outside [0, {}]", t, bound));
    ++st.n;
    const double delta = t - st.mean;
    st.mean += delta / static_cast<double>(st.n);
    st.m2 += delta * (t - st.mean);
  }
  return st;
}

unsigned worker_count(unsigned requested, std::uint64_t chunks) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(chunks, 1)));
}

}  // namespace

std::string_view to_string(SamplingMode m) { return m == SamplingMode::Haar ? "haar" : "paper_real"; }

SamplingMode parse_sampling_mode(std::string_view s) {
  if (s == "paper_real") return SamplingMode::PaperReal;
  if (s == "haar") return SamplingMode::Haar;
  throw ConfigError(fmt::format("unknown sampling mode '{}' (expected paper_real or haar)", s));
}

void sample_amplitudes(Eigen::Index d, SamplingMode mode, Engine& eng, Amplitudes& out) {
  std::normal_distribution<double> normal;
  out.resize(d);
  for (;;) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = normal(eng);
      const double im = mode == SamplingMode::Haar ? normal(eng) : 0.0;
      out[i] = Complex(re, im);
    }
    const double n = out.norm();
    if (n > 0.0) {
      out /= n;
      return;
    }
  }
}

StateVector sample_state(Eigen::Index d, SamplingMode mode, Engine& eng) {
  Amplitudes a;
  sample_amplitudes(d, mode, eng, a);
  return make_state(std::move(a));
}

McConfig mc_config_from_config(const KeyValueConfig& cfg, McConfig base) {
  if (auto v = cfg.get_int("samples")) {
    if (*v < 1) throw ConfigError("samples must be at least 1");
    base.n_samples = static_cast<std::uint64_t>(*v);
  }
  if (auto v = cfg.get("seed")) {
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), seed);
    if (ec != std::errc{} || ptr != v->data() + v->size()) throw ConfigError(fmt::format("bad seed '{}'", *v));
    base.seed = seed;
  }
  if (auto v = cfg.get("mode")) base.mode = parse_sampling_mode(*v);
  if (auto v = cfg.get_int("threads")) {
    if (*v < 0) throw ConfigError("threads must be non-negative");
    base.threads = static_cast<unsigned>(*v);
  }
  for (const auto& [gate, value] : cfg.with_prefix("omega.")) {
    auto w = parse_double(value);
    if (!w || !(*w > 0.0)) throw ConfigError(fmt::format("omega.{} must be a positive number, got '{}'", gate, value));
    base.omega_map[gate] = *w;
  }
  return base;
}

McEstimate expected_optimal_time(const Operator& gate, double omega, const McConfig& cfg, std::uint64_t stream_seed) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError(fmt::format("expected_optimal_time: omega must be positive, got {}", omega));
  if (cfg.n_samples < 1) throw DomainError("expected_optimal_time: need at least one sample");
  if (gate.rows() != gate.cols() || gate.rows() < 2) throw DomainError("expected_optimal_time: bad gate shape");

  const std::uint64_t chunks = (cfg.n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
        const std::uint64_t count = std::min(kChunkSize, cfg.n_samples - c * kChunkSize);
        results[c] = run_chunk(gate, omega, cfg.mode, chunk_stream_seed(stream_seed, c), count);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };

  const unsigned workers = worker_count(cfg.threads, chunks);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  ChunkStats acc;
  for (const auto& r : results) merge(acc, r);
  McEstimate est;
  est.mean = acc.mean;
  est.n = acc.n;
  est.seed = stream_seed;
  est.mode = cfg.mode;
  est.std_error = acc.n > 1 ? std::sqrt(acc.m2 / static_cast<double>(acc.n - 1)) / std::sqrt(static_cast<double>(acc.n)) : 0.0;
  return est;
}

McEstimate expected_optimal_time(const Gate& gate, double omega, const McConfig& cfg) {
  return expected_optimal_time(gate.matrix, omega, cfg, cfg.seed);
}

double step_omega(const CircuitStep& step, const McConfig& cfg, const NmrParams& p) {
  if (auto it = cfg.omega_map.find(DurationRules::key_for(step.gate)); it != cfg.omega_map.end()) return it->second;
  if (auto it = cfg.omega_map.find(step.gate.name); it != cfg.omega_map.end()) return it->second;
  if (step.gate.arity == 1) return p.omega_n / 2;
  const double J = std::abs(p.coupling(step.targets[0], step.targets[1]));
  if (J == 0.0)
    throw ConfigError(fmt::format("J-coupling for pair ({}, {}) is zero", step.targets[0], step.targets[1]));
  return std::numbers::pi * J / 2;
}

CircuitEstimate circuit_expected_time(const Circuit& c, const McConfig& cfg, const NmrParams& p) {
  CircuitEstimate out;
  out.total.seed = cfg.seed;
  out.total.mode = cfg.mode;
  double var = 0.0;
  for (const auto& st : c.steps()) {
    const double omega = step_omega(st, cfg, p);
    const auto est = expected_optimal_time(st.gate.matrix, omega, cfg, step_stream_seed(cfg.seed, static_cast<std::uint64_t>(st.index)));
    out.steps.push_back(StepEstimate{st.index, st.gate.label(), omega, est});
    out.total.mean += est.mean;
    out.total.n += est.n;
    var += est.std_error * est.std_error;
  }
  out.total.std_error = std::sqrt(var);
  return out;
}

}  // namespace shorbrach
