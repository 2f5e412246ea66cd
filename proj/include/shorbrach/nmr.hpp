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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shorbrach/circuit.hpp"
#include "shorbrach/config.hpp"

namespace shorbrach {

/// Spectrometer parameters. Frequencies are angular (rad/s) except the
/// J-couplings, which are in hertz as tabulated for molecules.
struct NmrParams {
  double omega_n = 1670.0;
  double omega_n_err = 110.0;
  std::map<std::pair<int, int>, double> J;
  std::optional<double> omega_0;
  std::optional<double> omega_r;

  /// Stores the coupling under the unordered pair.
  void set_coupling(int i, int j, double hertz);
  bool has_coupling(int i, int j) const;
  /// Throws ConfigError naming the missing key `J.i.j`.
  double coupling(int i, int j) const;
};

/// Reads omega_n, omega_n_err, omega_0, omega_r and J.<i>.<j> on top of `base`.
NmrParams nmr_params_from_config(const KeyValueConfig& cfg, NmrParams base = {});

/// omega_0 I_z + omega_n [cos(omega_r t + phi) I_x + sin(omega_r t + phi) I_y].
Operator lab_frame_hamiltonian(const NmrParams& p, double phi, double t);

/// (omega_0 - omega_r) I_z + omega_n [cos(phi) I_x + sin(phi) I_y].
Operator rotating_frame_hamiltonian(const NmrParams& p, double phi);

enum class PulseAxis { PlusX, PlusY, MinusX, MinusY };

/// A hard pulse: rotation by `angle` about an in-plane axis.
struct PulseSpec {
  double angle = 0.0;
  PulseAxis axis = PulseAxis::PlusX;
  /// Drive phase selecting the axis: 0, pi/2, pi, -pi/2.
  double phase() const;
};

struct Duration {
  double seconds = 0.0;
  double error = 0.0;
  /// Share of `seconds` that scales as 1/omega_n (pulses); the rest is J evolution.
  double pulse_seconds = 0.0;

  double coupling_seconds() const { return seconds - pulse_seconds; }
  Duration& operator+=(const Duration& o);
};

/// angle / omega_n, error propagated to first order from omega_n_err.
Duration pulse_duration(double angle, const NmrParams& p);

/// Resonant propagator of a pulse: exp(-i H t) with H the on-resonance
/// rotating-frame drive and t = pulse_duration.
Operator pulse_propagator(const PulseSpec& pulse, const NmrParams& p);

struct OmegaEstimate {
  double omega_n = 0.0;
  double error = 0.0;
};

/// omega_n = pi / t_180 with relative error carried over.
OmegaEstimate estimate_omega_n(double t_180, double t_180_err);

/// exp[sign i (pi/2)(1/2 - I_z - S_z + 2 I_z S_z)] for sign = +1 or -1.
Operator pi_phase_operator(int sign);

enum class PhaseKind { Deg180, Deg90, Deg45 };

/// Controlled-phase timing: 180: 3pi/(2 w) + 1/(2J); 90: 9pi/(4 w) + 1/(4J);
/// 45: 11pi/(8 w) + 1/(8J). J is taken by magnitude and carries no error.
Duration phase_gate_duration(PhaseKind kind, const NmrParams& p, int i, int j);

namespace rule {
struct Single {
  double angle = 0.0;
};
struct Hadamard {};
struct Phase {
  PhaseKind kind = PhaseKind::Deg180;
};
}  // namespace rule

using FormulaTag = std::variant<rule::Single, rule::Hadamard, rule::Phase>;

/// Gate key -> timing formula. Keys are gate names, or NAME(|angle|) for
/// parameterized gates, e.g. "CPHASE(pi/2)".
class DurationRules {
 public:
  static DurationRules defaults();

  /// Applies `rule.<key> = single(<degrees>) | hadamard | phase180 | phase90 | phase45`.
  void apply_config(const KeyValueConfig& cfg);

  void set(std::string key, FormulaTag tag);
  /// Throws ConfigError when the gate has no rule.
  const FormulaTag& lookup(const Gate& g) const;
  bool has(const Gate& g) const;

  static std::string key_for(const Gate& g);
  static FormulaTag parse_tag(std::string_view text);

 private:
  std::map<std::string, FormulaTag> rules_;
};

Duration step_duration(const CircuitStep& step, const NmrParams& p, const DurationRules& rules);

struct ScheduleRow {
  int step = 0;
  std::string gate;
  Duration duration;
  double cumulative = 0.0;
  double cumulative_error = 0.0;
};

/// Per-step durations with running totals; errors add linearly.
struct Schedule {
  std::vector<ScheduleRow> rows;

  Duration total() const;
  /// Sum over step indices in [first_step, last_step].
  Duration subtotal(int first_step, int last_step) const;
};

Schedule cumulative_schedule(const Circuit& c, const NmrParams& p, const DurationRules& rules);

}  // namespace shorbrach
