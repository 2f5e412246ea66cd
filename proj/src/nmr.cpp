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

#include "shorbrach/nmr.hpp"

#include <charconv>
#include <cmath>
#include <fmt/core.h>
#include <numbers>
#include <set>

#include "shorbrach/errors.hpp"

namespace shorbrach {

namespace {

using std::numbers::pi;

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

void require_frame(const NmrParams& p) {
  if (!p.omega_0 || !p.omega_r) throw DomainError("NMR Hamiltonian needs omega_0 and omega_r");
}

Operator drive(double omega_n, double angle) {
  return omega_n * (std::cos(angle) * spin::Ix() + std::sin(angle) * spin::Iy());
}

int parse_qubit(std::string_view s, std::string_view key) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw ConfigError(fmt::format("bad qubit index in key 'J.{}'", key));
  return v;
}

}  // namespace

void NmrParams::set_coupling(int i, int j, double hertz) {
  if (i == j) throw ConfigError(fmt::format("J.{}.{}: a spin does not couple to itself", i, j));
  J[ordered(i, j)] = hertz;
}

bool NmrParams::has_coupling(int i, int j) const { return J.count(ordered(i, j)) != 0; }

double NmrParams::coupling(int i, int j) const {
  auto it = J.find(ordered(i, j));
  if (it == J.end()) {
    const auto [a, b] = ordered(i, j);
    throw ConfigError(fmt::format("missing J-coupling J.{}.{} for qubit pair ({}, {})", a, b, a, b));
  }
  return it->second;
}

NmrParams nmr_params_from_config(const KeyValueConfig& cfg, NmrParams base) {
  if (auto v = cfg.get_double("omega_n")) base.omega_n = *v;
  if (auto v = cfg.get_double("omega_n_err")) base.omega_n_err = *v;
  if (auto v = cfg.get_double("omega_0")) base.omega_0 = *v;
  if (auto v = cfg.get_double("omega_r")) base.omega_r = *v;
  if (!(base.omega_n > 0.0)) throw ConfigError(fmt::format("omega_n must be positive, got {}", base.omega_n));
  if (base.omega_n_err < 0.0) throw ConfigError("omega_n_err must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (const auto& [suffix, value] : cfg.with_prefix("J.")) {
    const auto dot = suffix.find('.');
    if (dot == std::string::npos) throw ConfigError(fmt::format("key 'J.{}' must be J.<i>.<j>", suffix));
    const int i = parse_qubit(std::string_view(suffix).substr(0, dot), suffix);
    const int j = parse_qubit(std::string_view(suffix).substr(dot + 1), suffix);
    auto hz = parse_double(value);
    if (!hz) throw ConfigError(fmt::format("key 'J.{}' is not a number: '{}'", suffix, value));
    if (!seen.insert(ordered(i, j)).second && base.coupling(i, j) != *hz)
      throw ConfigError(fmt::format("J.{}.{} and J.{}.{} disagree", i, j, j, i));
    base.set_coupling(i, j, *hz);
  }
  return base;
}

Operator lab_frame_hamiltonian(const NmrParams& p, double phi, double t) {
  require_frame(p);
  return *p.omega_0 * spin::Iz() + drive(p.omega_n, *p.omega_r * t + phi);
}

Operator rotating_frame_hamiltonian(const NmrParams& p, double phi) {
  require_frame(p);
  return (*p.omega_0 - *p.omega_r) * spin::Iz() + drive(p.omega_n, phi);
}

double PulseSpec::phase() const {
  switch (axis) {
    case PulseAxis::PlusX: return 0.0;
    case PulseAxis::PlusY: return pi / 2;
    case PulseAxis::MinusX: return pi;
    case PulseAxis::MinusY: return -pi / 2;
  }
  return 0.0;
}

Duration& Duration::operator+=(const Duration& o) {
  seconds += o.seconds;
  error += o.error;
  pulse_seconds += o.pulse_seconds;
  return *this;
}

Duration pulse_duration(double angle, const NmrParams& p) {
  if (!(angle > 0.0)) throw DomainError(fmt::format("pulse angle must be positive, got {}", angle));
  const double t = angle / p.omega_n;
  return Duration{t, t * (p.omega_n_err / p.omega_n), t};
}

Operator pulse_propagator(const PulseSpec& pulse, const NmrParams& p) {
  return propagator(drive(p.omega_n, pulse.phase()), pulse_duration(pulse.angle, p).seconds);
}

OmegaEstimate estimate_omega_n(double t_180, double t_180_err) {
  if (!(t_180 > 0.0)) throw DomainError(fmt::format("t_180 must be positive, got {}", t_180));
  const double w = pi / t_180;
  return {w, w * (t_180_err / t_180)};
}

Operator pi_phase_operator(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("pi_phase_operator: sign must be +1 or -1");
  const Operator generator =
      0.5 * Operator::Identity(4, 4) - spin::Iz1() - spin::Sz2() + 2.0 * spin::IzSz();
  // exp(+i s (pi/2) G) = exp(-i H t) with H = -s (pi/2) G, t = 1.
  return propagator(-sign * (pi / 2) * generator, 1.0);
}

Duration phase_gate_duration(PhaseKind kind, const NmrParams& p, int i, int j) {
  const double J = std::abs(p.coupling(i, j));
  if (J == 0.0) throw ConfigError(fmt::format("J-coupling for pair ({}, {}) is zero", i, j));
  double pulse_factor = 0.0, j_factor = 0.0;
  switch (kind) {
    case PhaseKind::Deg180: pulse_factor = 3 * pi / 2; j_factor = 1.0 / 2; break;
    case PhaseKind::Deg90: pulse_factor = 9 * pi / 4; j_factor = 1.0 / 4; break;
    case PhaseKind::Deg45: pulse_factor = 11 * pi / 8; j_factor = 1.0 / 8; break;
  }
  const double pulse = pulse_factor / p.omega_n;
  return Duration{pulse + j_factor / J, pulse * (p.omega_n_err / p.omega_n), pulse};
}

DurationRules DurationRules::defaults() {
  DurationRules r;
  r.set("H", rule::Hadamard{});
  r.set("X", rule::Single{pi});
  r.set("SX", rule::Single{pi / 2});
  r.set("SXDG", rule::Single{pi / 2});
  r.set("PH", rule::Single{pi / 2});
  r.set("PHI", rule::Single{pi / 2});
  r.set("CNOT", rule::Phase{PhaseKind::Deg180});
  r.set("CSX", rule::Phase{PhaseKind::Deg90});
  r.set("CSXDG", rule::Phase{PhaseKind::Deg90});
  r.set("CPHASE(pi)", rule::Phase{PhaseKind::Deg180});
  r.set("CPHASE(pi/2)", rule::Phase{PhaseKind::Deg90});
  r.set("CPHASE(pi/4)", rule::Phase{PhaseKind::Deg45});
  return r;
}

FormulaTag DurationRules::parse_tag(std::string_view text) {
  if (text == "hadamard") return rule::Hadamard{};
  if (text == "phase180") return rule::Phase{PhaseKind::Deg180};
  if (text == "phase90") return rule::Phase{PhaseKind::Deg90};
  if (text == "phase45") return rule::Phase{PhaseKind::Deg45};
  if (text.starts_with("single(") && text.ends_with(")")) {
    auto deg = parse_double(text.substr(7, text.size() - 8));
    if (deg && *deg > 0.0) return rule::Single{*deg * pi / 180.0};
  }
  throw ConfigError(fmt::format("unknown duration rule '{}'", text));
}

void DurationRules::apply_config(const KeyValueConfig& cfg) {
  for (const auto& [key, value] : cfg.with_prefix("rule.")) set(key, parse_tag(value));
}

void DurationRules::set(std::string key, FormulaTag tag) { rules_[std::move(key)] = tag; }

std::string DurationRules::key_for(const Gate& g) {
  return g.param ? fmt::format("{}({})", g.name, format_angle(std::abs(*g.param))) : g.name;
}

bool DurationRules::has(const Gate& g) const { return rules_.count(key_for(g)) != 0; }

const FormulaTag& DurationRules::lookup(const Gate& g) const {
  auto it = rules_.find(key_for(g));
  if (it == rules_.end()) throw ConfigError(fmt::format("no duration rule for gate '{}'", key_for(g)));
  return it->second;
}

Duration step_duration(const CircuitStep& step, const NmrParams& p, const DurationRules& rules) {
  const FormulaTag& tag = rules.lookup(step.gate);
  if (const auto* s = std::get_if<rule::Single>(&tag)) return pulse_duration(s->angle, p);
  // 45y, 180x, 45-y: 270 degrees of nutation in total.
  if (std::holds_alternative<rule::Hadamard>(tag)) return pulse_duration(3 * pi / 2, p);
  const auto& ph = std::get<rule::Phase>(tag);
  if (step.targets.size() != 2)
    throw ConfigError(fmt::format("step {}: phase-gate rule on the one-qubit gate {}", step.index, step.gate.name));
  return phase_gate_duration(ph.kind, p, step.targets[0], step.targets[1]);
}

Duration Schedule::total() const {
  Duration d;
  for (const auto& r : rows) d += r.duration;
  return d;
}

Duration Schedule::subtotal(int first_step, int last_step) const {
  Duration d;
  for (const auto& r : rows)
    if (r.step >= first_step && r.step <= last_step) d += r.duration;
  return d;
}

Schedule cumulative_schedule(const Circuit& c, const NmrParams& p, const DurationRules& rules) {
  Schedule s;
  double cum = 0.0, cum_err = 0.0;
  for (const auto& st : c.steps()) {
    const Duration d = step_duration(st, p, rules);
    cum += d.seconds;
    cum_err += d.error;
    s.rows.push_back(ScheduleRow{st.index, st.gate.label(), d, cum, cum_err});
  }
  return s;
}

}  // namespace shorbrach
