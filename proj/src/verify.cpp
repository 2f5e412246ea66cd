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

#include "shorbrach/verify.hpp"

#include <cmath>
#include <fmt/core.h>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "shorbrach/brachistochrone.hpp"
#include "shorbrach/errors.hpp"
#include "shorbrach/nmr.hpp"
#include "shorbrach/shor15.hpp"

namespace shorbrach {

namespace {

using std::numbers::pi;

StateVector random_state(int n_qubits, Engine& eng) {
  return sample_state(Eigen::Index{1} << n_qubits, SamplingMode::Haar, eng);
}

CheckResult run_check(std::string name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    return {std::move(name), true, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

// Reference embedding via explicit Kronecker products and swaps of basis bits.
Operator kron_embedding(const Operator& gate, const std::vector<int>& targets, int n) {
  // Build gate (x) 1 on qubits [targets..., rest...], then permute back.
  std::vector<int> order = targets;
  for (int q = 0; q < n; ++q)
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) order.push_back(q);
  const Eigen::Index rest = Eigen::Index{1} << (n - static_cast<int>(targets.size()));
  const Operator local = kron(gate, Operator::Identity(rest, rest));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Operator perm = Operator::Zero(dim, dim);  // maps register index -> local index
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index j = 0;
    for (int pos = 0; pos < n; ++pos) j = (j << 1) | ((i >> (n - 1 - order[pos])) & 1);
    perm(j, i) = 1.0;
  }
  return perm.transpose() * local * perm;
}

std::string format_max(const char* what, double v) { return fmt::format("{} = {:.3e}", what, v); }

}  // namespace

CheckResult check_gate_unitarity(std::span<const Gate> gates) {
  for (const auto& g : gates) {
    const double dev = max_abs(g.matrix.adjoint() * g.matrix - Operator::Identity(g.matrix.rows(), g.matrix.cols()));
    if (!(dev <= kAlgebraicTol))
      return {"gate unitarity", false, fmt::format("gate {} is not unitary (deviation {:.3e})", g.label(), dev)};
    if (g.matrix.rows() != (Eigen::Index{1} << g.arity))
      return {"gate unitarity", false, fmt::format("gate {} has arity {} but a {}x{} matrix", g.label(), g.arity,
                                                   g.matrix.rows(), g.matrix.cols())};
  }
  return {"gate unitarity", true, fmt::format("{} gates", gates.size())};
}

std::vector<Gate> standard_gate_catalogue() {
  std::vector<Gate> out;
  for (const auto& name : standard_gate_names()) {
    if (takes_param(name)) {
      for (double phi : {pi, pi / 2, pi / 4, -pi / 2, -pi / 4, 0.3, -2.1, 5.0}) out.push_back(standard_gate(name, phi));
    } else {
      out.push_back(standard_gate(name));
    }
  }
  return out;
}

Operator random_hermitian(Eigen::Index dim, Engine& eng) {
  std::normal_distribution<double> normal;
  Operator a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(normal(eng), normal(eng));
  return 0.5 * (a + a.adjoint());
}

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  Engine eng(opts.seed);

  // core-state
  out.push_back(run_check("unitary maps preserve norm", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 4;
      const Operator u = propagator(random_hermitian(Eigen::Index{1} << n, eng), 1.3);
      worst = std::max(worst, std::abs(apply_operator(u, random_state(n, eng)).norm() - 1.0));
    }
    require(worst <= kAlgebraicTol, format_max("norm deviation", worst));
    return format_max("max norm deviation", worst);
  }));
  out.push_back(run_check("evolve composes in time", [&] {
    double worst = 0.0;
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 4;
      const Operator h = random_hermitian(Eigen::Index{1} << n, eng);
      const auto s = random_state(n, eng);
      const double t1 = uni(eng), t2 = uni(eng);
      const auto a = evolve(h, t1 + t2, s), b = evolve(h, t2, evolve(h, t1, s));
      worst = std::max(worst, max_abs(a.amplitudes() - b.amplitudes()));
    }
    require(worst <= kNumericTol, format_max("composition error", worst));
    return format_max("max composition error", worst);
  }));
  out.push_back(run_check("embed_gate matches Kronecker construction", [&] {
    int cases = 0;
    for (int n = 1; n <= 4; ++n) {
      for (const char* name : {"H", "SX", "CNOT", "CSX", "CPHASE"}) {
        const Gate g = takes_param(name) ? standard_gate(name, 0.7) : standard_gate(name);
        for (int a = 0; a < n; ++a) {
          if (g.arity == 1) {
            require(max_abs(embed_gate(g.matrix, std::vector{a}, n) - kron_embedding(g.matrix, {a}, n)) <= kAlgebraicTol,
                    fmt::format("{} on q{} of {}", name, a, n));
            ++cases;
            continue;
          }
          for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            require(max_abs(embed_gate(g.matrix, std::vector{a, b}, n) - kron_embedding(g.matrix, {a, b}, n)) <=
                        kAlgebraicTol,
                    fmt::format("{} on q{},q{} of {}", name, a, b, n));
            ++cases;
          }
        }
      }
    }
    return fmt::format("{} placements", cases);
  }));
  out.push_back(run_check("register marginals are consistent", [&] {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const auto s = random_state(n, eng);
      std::vector<int> all(n);
      for (int q = 0; q < n; ++q) all[q] = q;
      const auto full = measure_register(s, all);
      // Every non-empty ordered subset given by a bitmask, in ascending and reversed order.
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> sub;
        for (int q = 0; q < n; ++q)
          if (mask >> (n - 1 - q) & 1) sub.push_back(q);
        for (int pass = 0; pass < 2; ++pass) {
          if (pass == 1) std::reverse(sub.begin(), sub.end());
          std::vector<double> marg(std::size_t{1} << sub.size(), 0.0);
          for (std::size_t i = 0; i < full.size(); ++i) {
            std::size_t o = 0;
            for (int q : sub) o = (o << 1) | ((i >> (n - 1 - q)) & 1);
            marg[o] += full[i];
          }
          const auto direct = measure_register(s, sub);
          for (std::size_t k = 0; k < marg.size(); ++k) worst = std::max(worst, std::abs(marg[k] - direct[k]));
        }
      }
    }
    require(worst <= kAlgebraicTol, format_max("marginal mismatch", worst));
    return format_max("max marginal mismatch", worst);
  }));

  // gates-circuit
  {
    const auto gates = standard_gate_catalogue();
    out.push_back(check_gate_unitarity(gates));
  }
  std::optional<Circuit> circuit;
  out.push_back(run_check("circuit file parses and round-trips", [&] {
    circuit = load_circuit(opts.circuit, ShorInstance::kQubits);
    const auto again = parse_circuit(render_circuit(*circuit), ShorInstance::kQubits);
    require(render_circuit(again) == render_circuit(*circuit), "render(parse(render(c))) differs");
    for (std::size_t i = 0; i < again.size(); ++i)
      require(max_abs(again.steps()[i].gate.matrix - circuit->steps()[i].gate.matrix) == 0.0,
              fmt::format("step {} gate changed", again.steps()[i].index));
    return fmt::format("{} steps from {}", circuit->size(), opts.circuit.string());
  }));
  out.push_back(run_check("circuit followed by its inverse is the identity", [&] {
    require(circuit.has_value(), "circuit not loaded");
    const Circuit inv = inverse_circuit(*circuit);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_state(circuit->n_qubits(), eng);
      worst = std::max(worst, max_abs(run_circuit(inv, run_circuit(*circuit, s)).amplitudes() - s.amplitudes()));
    }
    require(worst <= 1e-9, format_max("round-trip error", worst));
    return format_max("max round-trip error", worst);
  }));

  // shor15
  std::optional<ShorInstance> inst;
  out.push_back(run_check("function gates compute a^x mod 15", [&] {
    require(circuit.has_value(), "circuit not loaded");
    inst = make_shor_instance(opts.a, *circuit);
    verify_function_gates(*inst).require_pass();
    return fmt::format("a = {}, x = 0..7", opts.a);
  }));
  out.push_back(run_check("period and factors", [&] {
    require(inst.has_value(), "instance not built");
    const auto dist = x_register_distribution(*inst);
    const auto per = extract_period(dist);
    std::uint64_t expected_r = 1;
    while (modexp_oracle(opts.a, expected_r, 15) != 1) ++expected_r;
    require(per.period == static_cast<int>(expected_r),
            fmt::format("extracted period {} but the order of {} mod 15 is {}", per.period, opts.a, expected_r));
    for (int p : per.peaks)
      require(std::abs(dist[p] - 1.0 / per.peaks.size()) <= 1e-9, fmt::format("peak {} has weight {}", p, dist[p]));
    const auto f = factors_from_period(opts.a, per.period, 15);
    require(f && f->first * f->second == 15, "factor recovery failed");
    return fmt::format("r = {}, 15 = {} x {}", per.period, std::min(f->first, f->second), std::max(f->first, f->second));
  }));

  // brachistochrone
  out.push_back(run_check("brachistochrone reaches the target", [&] {
    double worst_fid = 0.0, worst_energy = 0.0, worst_proj = 0.0;
    std::uniform_real_distribution<double> w(0.2, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 2;
      const BrachInstance bi(random_state(n, eng), random_state(n, eng), w(eng));
      const auto sol = solve_brachistochrone(bi);
      const double fid = std::abs(inner_product(bi.psi_f(), evolve(sol.H_op, sol.T_op, bi.psi_i())));
      worst_fid = std::max(worst_fid, 1.0 - fid);
      const double tr = (sol.H_op * sol.H_op).trace().real() / 2;
      worst_energy = std::max(worst_energy, std::abs(tr - bi.omega() * bi.omega()) / (bi.omega() * bi.omega()));
      const auto rep = check_brachistochrone(bi, 4);
      worst_proj = std::max(worst_proj, rep.max_projection_residual);
    }
    require(worst_fid <= 1e-9, format_max("fidelity loss", worst_fid));
    require(worst_energy <= 1e-9, format_max("energy constraint error", worst_energy));
    require(worst_proj <= 1e-9, format_max("F = FP + PF residual", worst_proj));
    return fmt::format("{}, {}, {}", format_max("fidelity loss", worst_fid),
                       format_max("constraint error", worst_energy), format_max("projection residual", worst_proj));
  }));
  out.push_back(run_check("optimal time scaling and monotonicity", [&] {
    const auto psi = new_basis_state(1, 0);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 50; ++k) {
      const double th = (pi / 2) * k / 50;
      Amplitudes f(2);
      f << std::cos(th), std::sin(th);
      const BrachInstance a(psi, make_state(f), 1.7), b(psi, make_state(f), 3.4);
      require(optimal_time(b) == optimal_time(a) / 2, "doubling omega does not halve T_op exactly");
      require(optimal_time(a) >= prev || k == 0, "T_op decreased as overlap fell");
      prev = optimal_time(a);
    }
    return std::string("51 overlaps");
  }));

  // nmr-timing
  out.push_back(run_check("NMR durations positive, schedule increasing", [&] {
    require(circuit.has_value(), "circuit not loaded");
    NmrParams p;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) p.set_coupling(i, j, 50.0 + 10.0 * (i + j));
    const auto rules = DurationRules::defaults();
    const auto sched = cumulative_schedule(*circuit, p, rules);
    double prev = 0.0;
    for (const auto& r : sched.rows) {
      require(r.duration.seconds > 0.0, fmt::format("step {} has non-positive duration", r.step));
      require(r.cumulative > prev, fmt::format("cumulative time not increasing at step {}", r.step));
      prev = r.cumulative;
    }
    NmrParams fast = p;
    fast.omega_n *= 2;
    const auto sched2 = cumulative_schedule(*circuit, fast, rules);
    for (std::size_t i = 0; i < sched.rows.size(); ++i) {
      const auto& a = sched.rows[i].duration;
      const auto& b = sched2.rows[i].duration;
      require(b.pulse_seconds == a.pulse_seconds / 2, fmt::format("step {}: pulse term not halved", sched.rows[i].step));
      require(std::abs(b.coupling_seconds() - a.coupling_seconds()) <= 1e-15 * std::max(1.0, a.coupling_seconds()),
              fmt::format("step {}: coupling term changed", sched.rows[i].step));
    }
    return fmt::format("{} steps, total {:.6f} s", sched.rows.size(), sched.total().seconds);
  }));
  out.push_back(run_check("pi phase operators are inverse unitaries", [&] {
    const Operator plus = pi_phase_operator(1), minus = pi_phase_operator(-1);
    require(is_unitary(plus, kAlgebraicTol) && is_unitary(minus, kAlgebraicTol), "not unitary");
    require(max_abs(plus * minus - Operator::Identity(4, 4)) <= kAlgebraicTol, "not inverse");
    require(equal_up_to_phase(plus, standard_gate("CPHASE", pi).matrix), "not CPHASE(pi) up to phase");
    return std::string("ok");
  }));
  out.push_back(run_check("resonant pulses rotate by their angle", [&] {
    NmrParams p;
    p.omega_0 = 2.0e8;
    p.omega_r = 2.0e8;
    double worst = 0.0;
    for (double angle : {pi / 8, pi / 4, pi / 2, pi}) {
      for (auto axis : {PulseAxis::PlusX, PulseAxis::PlusY, PulseAxis::MinusX, PulseAxis::MinusY}) {
        const PulseSpec pulse{angle, axis};
        const Operator h = rotating_frame_hamiltonian(p, pulse.phase());
        const Operator u = propagator(h, pulse_duration(angle, p).seconds);
        const double nx = std::cos(pulse.phase()), ny = std::sin(pulse.phase());
        const Operator sigma_n = 2.0 * (nx * spin::Ix() + ny * spin::Iy());
        const Operator closed = std::cos(angle / 2) * Operator::Identity(2, 2) - Complex(0, std::sin(angle / 2)) * sigma_n;
        worst = std::max(worst, max_abs(u - closed));
      }
    }
    require(worst <= kNumericTol, format_max("rotation error", worst));
    return format_max("max rotation error", worst);
  }));

  // montecarlo
  out.push_back(run_check("Monte Carlo is deterministic across worker counts", [&] {
    McConfig cfg;
    cfg.n_samples = 50000;
    cfg.seed = opts.seed;
    const Gate g = standard_gate("CSX");
    cfg.threads = 1;
    const auto a = expected_optimal_time(g, 3.0, cfg);
    cfg.threads = 4;
    const auto b = expected_optimal_time(g, 3.0, cfg);
    require(a.mean == b.mean && a.std_error == b.std_error, "results differ between 1 and 4 workers");
    cfg.mode = SamplingMode::Haar;
    const auto c = expected_optimal_time(g, 3.0, cfg);
    cfg.threads = 1;
    const auto d = expected_optimal_time(g, 3.0, cfg);
    require(c.mean == d.mean, "haar results differ between worker counts");
    return fmt::format("paper_real {:.6f}, haar {:.6f}", a.mean, c.mean);
  }));
  out.push_back(run_check("Monte Carlo NOT gate matches pi/4", [&] {
    McConfig cfg;
    cfg.n_samples = 200000;
    cfg.seed = opts.seed;
    const auto est = expected_optimal_time(standard_gate("X"), 1.0, cfg);
    require(std::abs(est.mean - pi / 4) <= 4 * est.std_error,
            fmt::format("mean {} vs pi/4 with stderr {}", est.mean, est.std_error));
    return fmt::format("mean {:.5f} +/- {:.5f}", est.mean, est.std_error);
  }));

  return out;
}

}  // namespace shorbrach
