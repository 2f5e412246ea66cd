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

// Command-line front end: Shor-15 simulation, NMR schedule, Monte Carlo
// optimal times, the comparison table and the invariant suite.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fmt/core.h>
#include <fmt/os.h>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "shorbrach/circuit.hpp"
#include "shorbrach/config.hpp"
#include "shorbrach/errors.hpp"
#include "shorbrach/montecarlo.hpp"
#include "shorbrach/nmr.hpp"
#include "shorbrach/shor15.hpp"
#include "shorbrach/verify.hpp"

namespace fs = std::filesystem;
using namespace shorbrach;

namespace {

enum ExitCode : int { kOk = 0, kInputFile = 2, kConfig = 3, kVerification = 4 };

struct SharedFlags {
  std::string config;
  std::string circuit;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<long long> samples;
  std::optional<std::string> mode;
  std::optional<unsigned> threads;
  int a = 7;
};

fs::path default_circuit(int a) {
  const fs::path rel = fs::path("circuits") / fmt::format("shor15-a{}.qc", a);
  if (fs::exists(rel)) return rel;
  return fs::path(SHORBRACH_DATA_DIR) / rel;
}

fs::path circuit_path(const SharedFlags& f) { return f.circuit.empty() ? default_circuit(f.a) : fs::path(f.circuit); }

// flag > config file > built-in default
KeyValueConfig effective_config(const SharedFlags& f) {
  KeyValueConfig cfg = f.config.empty() ? KeyValueConfig::parse("", "<defaults>") : KeyValueConfig::load(f.config);
  if (f.seed) cfg.set("seed", std::to_string(*f.seed));
  if (f.samples) cfg.set("samples", std::to_string(*f.samples));
  if (f.mode) cfg.set("mode", *f.mode);
  if (f.threads) cfg.set("threads", std::to_string(*f.threads));
  return cfg;
}

/// value +/- error rounded to the error's leading significant digit.
std::string format_pm(double value, double error, const char* unit) {
  if (!(error > 0.0)) return fmt::format("{:.6g} {}", value, unit);
  const int digits = std::max(0, -static_cast<int>(std::floor(std::log10(error))));
  const double scale = std::pow(10.0, digits);
  const double err = std::round(error * scale) / scale;
  return fmt::format("{:.{}f} ± {:.{}f} {}", value, digits, err, digits, unit);
}

std::string num(double v) { return fmt::format("{}", v); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFileError(fmt::format("cannot write output file '{}'", path));
  out << text;
}

int cmd_shor_run(const SharedFlags& f) {
  const auto path = circuit_path(f);
  auto inst = make_shor_instance(f.a, load_circuit(path, ShorInstance::kQubits));
  fmt::print("circuit: {} ({} steps)\n", path.string(), inst.circuit.size());

  const auto report = verify_function_gates(inst);
  for (const auto& c : report.checks)
    fmt::print("  x = {}: f = {:2d} (expected {:2d}) |amp| = {:.12f} {}\n", c.x, c.observed_f, c.expected_f,
               c.magnitude, c.passed ? "ok" : "FAIL");
  if (!report.all_passed()) {
    report.require_pass();
  }

  const auto dist = x_register_distribution(inst);
  fmt::print("x-register distribution (read as q{} q{} q{}):\n", inst.readout[0], inst.readout[1], inst.readout[2]);
  for (std::size_t y = 0; y < dist.size(); ++y) fmt::print("  {}: {:.12f}\n", y, dist[y]);

  const auto per = extract_period(dist);
  fmt::print("period: {}{}\n", per.period, per.trivial ? " (trivial)" : "");
  const auto factors = factors_from_period(static_cast<std::uint64_t>(f.a), static_cast<std::uint64_t>(per.period), 15);
  if (!factors) throw VerificationError(fmt::format("period {} does not yield factors of 15 for a = {}", per.period, f.a));
  fmt::print("factors: 15 = {} x {}\n", std::min(factors->first, factors->second), std::max(factors->first, factors->second));
  return kOk;
}

Schedule build_schedule(const Circuit& c, const KeyValueConfig& cfg) {
  auto rules = DurationRules::defaults();
  rules.apply_config(cfg);
  return cumulative_schedule(c, nmr_params_from_config(cfg), rules);
}

void print_schedule_summary(const Schedule& s, const Circuit& c) {
  const auto total = s.total();
  fmt::print("NMR total: {} ({} s ± {} s)\n", format_pm(total.seconds, total.error, "s"), num(total.seconds),
             num(total.error));
  if (c.size() >= ShorInstance::kSuperpositionSteps + ShorInstance::kInverseQftSteps) {
    const int first = c.steps()[c.size() - ShorInstance::kInverseQftSteps].index;
    const int last = c.steps().back().index;
    const auto sub = s.subtotal(first, last);
    fmt::print("NMR steps {}-{} (inverse QFT): {} ({} s ± {} s)\n", first, last,
               format_pm(sub.seconds * 1e3, sub.error * 1e3, "ms"), num(sub.seconds), num(sub.error));
  }
}

int cmd_nmr_schedule(const SharedFlags& f) {
  const auto c = load_circuit(circuit_path(f));
  const auto cfg = effective_config(f);
  const auto s = build_schedule(c, cfg);
  std::string csv = "step,gate,t_nmr_s,err_nmr_s,cum_nmr_s\n";
  for (const auto& r : s.rows)
    csv += fmt::format("{},{},{},{},{}\n", r.step, r.gate, num(r.duration.seconds), num(r.duration.error), num(r.cumulative));
  write_text(f.out, csv);
  print_schedule_summary(s, c);
  return kOk;
}

std::string metadata_lines(const McConfig& mc, const CircuitEstimate& est) {
  std::string out = fmt::format("# seed={}\n# mode={}\n# samples={}\n", mc.seed, to_string(mc.mode), mc.n_samples);
  std::string omegas;
  for (const auto& s : est.steps) omegas += fmt::format("{}{}:{}={}", omegas.empty() ? "" : " ", s.step, s.gate, num(s.omega));
  out += "# omega_map=" + omegas + "\n";
  return out;
}

int cmd_optimal_expected(const SharedFlags& f) {
  const auto c = load_circuit(circuit_path(f));
  const auto cfg = effective_config(f);
  const auto mc = mc_config_from_config(cfg);
  const auto est = circuit_expected_time(c, mc, nmr_params_from_config(cfg));
  std::string csv = metadata_lines(mc, est);
  csv += "step,gate,omega_rad_s,t_opt_s,err_opt_s,cum_opt_s\n";
  double cum = 0.0;
  for (const auto& s : est.steps) {
    cum += s.estimate.mean;
    csv += fmt::format("{},{},{},{},{},{}\n", s.step, s.gate, num(s.omega), num(s.estimate.mean),
                       num(s.estimate.std_error), num(cum));
  }
  write_text(f.out, csv);
  fmt::print("expected optimal total: {} ({} s ± {} s; {} samples per step, seed {}, mode {})\n",
             format_pm(est.total.mean * 1e3, est.total.std_error * 1e3, "ms"), num(est.total.mean),
             num(est.total.std_error), mc.n_samples, mc.seed, to_string(mc.mode));
  return kOk;
}

int cmd_compare(const SharedFlags& f) {
  const auto c = load_circuit(circuit_path(f));
  const auto cfg = effective_config(f);
  const auto sched = build_schedule(c, cfg);
  const auto mc = mc_config_from_config(cfg);
  const auto est = circuit_expected_time(c, mc, nmr_params_from_config(cfg));
  std::string csv = metadata_lines(mc, est);
  csv += "step,gate,t_nmr_s,err_nmr_s,cum_nmr_s,t_opt_s,err_opt_s,cum_opt_s\n";
  double cum_opt = 0.0;
  for (std::size_t i = 0; i < sched.rows.size(); ++i) {
    const auto& r = sched.rows[i];
    const auto& e = est.steps[i].estimate;
    cum_opt += e.mean;
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", r.step, r.gate, num(r.duration.seconds), num(r.duration.error),
                       num(r.cumulative), num(e.mean), num(e.std_error), num(cum_opt));
  }
  write_text(f.out, csv);
  print_schedule_summary(sched, c);
  fmt::print("expected optimal total: {}\n", format_pm(est.total.mean * 1e3, est.total.std_error * 1e3, "ms"));
  if (cum_opt > 0.0)
    fmt::print("ratio cum_nmr / cum_opt at final step: {:.1f}\n", sched.total().seconds / cum_opt);
  return kOk;
}

int cmd_verify(const SharedFlags& f) {
  VerifyOptions opts;
  opts.circuit = circuit_path(f);
  opts.a = f.a;
  if (f.seed) opts.seed = *f.seed;
  const auto results = run_invariant_suite(opts);
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    fmt::print("[{}] {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    fmt::print(stderr, "verification failed: {}: {}\n", first_failure->name, first_failure->detail);
    return kVerification;
  }
  fmt::print("all {} invariant checks passed\n", results.size());
  return kOk;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputFileError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputFile;
  } catch (const ParseError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputFile;
  } catch (const ConfigError& e) {
    fmt::print(stderr, "configuration error: {}\n", e.what());
    return kConfig;
  } catch (const VerificationError& e) {
    fmt::print(stderr, "verification failure: {}\n", e.what());
    return kVerification;
  } catch (const DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shor-15 simulation with NMR and brachistochrone gate timing"};
  app.require_subcommand(1);
  SharedFlags f;

  auto add_common = [&](CLI::App* cmd, bool with_mc) {
    cmd->add_option("--config", f.config, "key = value configuration file");
    cmd->add_option("--circuit", f.circuit, "circuit file (default circuits/shor15-a<a>.qc)");
    cmd->add_option("--out", f.out, "output CSV path (default stdout)");
    cmd->add_option("--a", f.a, "base of the modular exponentiation")->check(CLI::Range(2, 14));
    cmd->add_option("--seed", f.seed, "64-bit RNG seed");
    if (with_mc) {
      cmd->add_option("--samples", f.samples, "Monte Carlo samples per step")->check(CLI::PositiveNumber);
      cmd->add_option("--mode", f.mode, "sampling mode")->check(CLI::IsMember({"paper_real", "haar"}));
      cmd->add_option("--threads", f.threads, "worker threads (results do not depend on it)");
    }
  };

  int rc = kOk;
  auto* shor = app.add_subcommand("shor", "Shor-15 simulation")->require_subcommand(1);
  auto* shor_run = shor->add_subcommand("run", "run the circuit, extract the period and the factors");
  add_common(shor_run, false);
  shor_run->callback([&] { rc = guarded([&] { return cmd_shor_run(f); }); });

  auto* nmr = app.add_subcommand("nmr", "NMR pulse timing")->require_subcommand(1);
  auto* nmr_schedule = nmr->add_subcommand("schedule", "per-step NMR durations as CSV");
  add_common(nmr_schedule, false);
  nmr_schedule->callback([&] { rc = guarded([&] { return cmd_nmr_schedule(f); }); });

  auto* optimal = app.add_subcommand("optimal", "brachistochrone optimal times")->require_subcommand(1);
  auto* optimal_expected = optimal->add_subcommand("expected", "Monte Carlo expected optimal time per step");
  add_common(optimal_expected, true);
  optimal_expected->callback([&] { rc = guarded([&] { return cmd_optimal_expected(f); }); });

  auto* compare = app.add_subcommand("compare", "NMR vs expected optimal cumulative times");
  add_common(compare, true);
  compare->callback([&] { rc = guarded([&] { return cmd_compare(f); }); });

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, false);
  verify->callback([&] { rc = guarded([&] { return cmd_verify(f); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return rc;
}
