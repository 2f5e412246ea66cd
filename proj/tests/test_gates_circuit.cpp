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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shorbrach/circuit.hpp"
#include "shorbrach/errors.hpp"
#include "shorbrach/gates.hpp"
#include "shorbrach/verify.hpp"
#include "support.hpp"

using namespace shorbrach;
using namespace testing;

namespace {

const std::filesystem::path kData{SHORBRACH_DATA_DIR};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("standard gates have their textbook matrices") {
  const Operator h = (pauli_x() + pauli_z()) / std::sqrt(2.0);
  CHECK(max_abs(standard_gate("H").matrix - h) <= 1e-15);
  CHECK(max_abs(standard_gate("X").matrix - pauli_x()) == 0.0);

  const Operator sx = standard_gate("SX").matrix;
  CHECK(max_abs(sx * sx - pauli_x()) <= 1e-15);
  CHECK(max_abs(standard_gate("SXDG").matrix - sx.adjoint()) <= 1e-15);

  Operator cnot = Operator::Identity(4, 4);
  cnot.row(2).swap(cnot.row(3));
  CHECK(max_abs(standard_gate("CNOT").matrix - cnot) == 0.0);

  const Operator csx = standard_gate("CSX").matrix;
  CHECK(max_abs(csx.topLeftCorner(2, 2) - Operator::Identity(2, 2)) == 0.0);
  CHECK(max_abs(csx.bottomRightCorner(2, 2) - sx) <= 1e-15);
  CHECK(max_abs(standard_gate("CSXDG").matrix - csx.adjoint()) <= 1e-15);

  const double phi = 0.37;
  const Operator cp = standard_gate("CPHASE", phi).matrix;
  CHECK(max_abs(cp - Operator(Eigen::VectorXcd((Eigen::VectorXcd(4) << 1, 1, 1, std::polar(1.0, phi)).finished()).asDiagonal())) <= 1e-15);

  const Operator ph = standard_gate("PH").matrix;
  CHECK(max_abs(ph - expm_taylor(-kI * (kPi / 2.0) * pauli_y() / 2.0)) <= 1e-14);
  CHECK(max_abs(standard_gate("PHI").matrix - ph.adjoint()) <= 1e-15);
}

TEST_CASE("CPHASE(pi) matches the exponentiated coupling generator up to global phase") {
  const Operator z1 = kron(pauli_z(), Operator::Identity(2, 2)) / 2.0;
  const Operator z2 = kron(Operator::Identity(2, 2), pauli_z()) / 2.0;
  const Operator zz = kron(pauli_z(), pauli_z()) / 4.0;
  const Operator generator = -z1 - z2 + 2.0 * zz;
  const Operator u = expm_taylor(kI * (kPi / 2.0) * generator);
  CHECK(equal_up_to_phase(u, standard_gate("CPHASE", kPi).matrix, 1e-12));
  const Operator expected = (Eigen::VectorXcd(4) << 1, 1, 1, -1).finished().asDiagonal();
  CHECK(max_abs(standard_gate("CPHASE", kPi).matrix - expected) <= 1e-15);
}

TEST_CASE("every standard gate is unitary") {
  for (const auto& name : standard_gate_names()) {
    if (takes_param(name)) {
      for (int k = -16; k <= 16; ++k) {
        const auto g = standard_gate(name, k * kPi / 8.0 + 0.01 * k);
        CHECK_MESSAGE(is_unitary(g.matrix, 1e-12), g.label());
      }
    } else {
      CHECK_MESSAGE(is_unitary(standard_gate(name).matrix, 1e-12), name);
    }
  }
}

TEST_CASE("standard_gate validates names and parameters") {
  CHECK_THROWS_AS(standard_gate("TOFFOLI"), DomainError);
  CHECK_THROWS_AS(standard_gate("CPHASE"), DomainError);
  CHECK_THROWS_AS(standard_gate("H", 1.0), DomainError);
}

TEST_CASE("adjoint inverts each gate") {
  for (const auto& name : standard_gate_names()) {
    const auto g = takes_param(name) ? standard_gate(name, 0.7) : standard_gate(name);
    const auto a = adjoint(g);
    CHECK(max_abs(a.matrix * g.matrix - Operator::Identity(g.matrix.rows(), g.matrix.cols())) <= 1e-14);
  }
}

TEST_CASE("gate labels render angles compactly") {
  CHECK(standard_gate("CPHASE", -kPi / 2.0).label() == "CPHASE(-pi/2)");
  CHECK(standard_gate("CPHASE", kPi / 4.0).label() == "CPHASE(pi/4)");
  CHECK(standard_gate("CPHASE", kPi).label() == "CPHASE(pi)");
  CHECK(standard_gate("H").label() == "H");
}

TEST_CASE("parse_circuit reads single steps") {
  const auto c = parse_circuit("step 1: H q0\n");
  REQUIRE(c.size() == 1);
  CHECK(c.n_qubits() == 1);
  CHECK(c.steps()[0].gate.name == "H");
  CHECK(c.steps()[0].targets == std::vector<int>{0});

  const auto d = parse_circuit("# comment\n\nstep 4: CNOT q2 q4\n", 7);
  REQUIRE(d.size() == 1);
  CHECK(d.steps()[0].index == 4);
  CHECK(d.steps()[0].targets == std::vector<int>{2, 4});
  CHECK(d.n_qubits() == 7);

  const auto e = parse_circuit("step 2: CPHASE(-0.5) q0 q1");
  REQUIRE(e.steps()[0].gate.param.has_value());
  CHECK(*e.steps()[0].gate.param == -0.5);
}

TEST_CASE("parse_circuit reports the failing line") {
  auto line_of = [](std::string_view text) {
    try {
      parse_circuit(text, 3);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("step 1: H q0\nstep 2: FOO q1\n") == 2);
  CHECK(line_of("step 1: CNOT q0\n") == 1);
  CHECK(line_of("step 1: H q5\n") == 1);
  CHECK(line_of("step 1: CNOT q1 q1\n") == 1);
  CHECK(line_of("step 2: H q0\nstep 1: H q1\n") == 2);
  CHECK(line_of("step x: H q0\n") == 1);
  CHECK(line_of("step 1: CPHASE(abc) q0 q1\n") == 1);
}

TEST_CASE("shipped circuits round-trip through render") {
  for (const char* name : {"shor15-a7.qc", "shor15-a11.qc"}) {
    const auto c = load_circuit(kData / "circuits" / name, 7);
    const auto again = parse_circuit(render_circuit(c), 7);
    REQUIRE(again.size() == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(again.steps()[k].index == c.steps()[k].index);
      CHECK(again.steps()[k].targets == c.steps()[k].targets);
      CHECK(again.steps()[k].gate.label() == c.steps()[k].gate.label());
      CHECK(again.steps()[k].gate.param == c.steps()[k].gate.param);
      CHECK(max_abs(again.steps()[k].gate.matrix - c.steps()[k].gate.matrix) == 0.0);
    }
    CHECK(render_circuit(again) == render_circuit(c));
  }
  const auto a7 = load_circuit(kData / "circuits" / "shor15-a7.qc");
  CHECK(a7.size() == 25);
  CHECK(a7.n_qubits() == 7);
  CHECK(a7.steps().front().index == 1);
  CHECK(a7.steps().back().index == 25);
  CHECK(!slurp(kData / "circuits" / "shor15-a7.qc").empty());
}

TEST_CASE("load_circuit reports unreadable files") {
  CHECK_THROWS_AS(load_circuit("/nonexistent/circuit.qc"), InputFileError);
}

TEST_CASE("run_circuit on simple circuits") {
  std::mt19937_64 rng(1);
  const auto s0 = random_state(3, rng);
  const Circuit empty(3);
  CHECK(run_circuit(empty, s0).amplitudes() == s0.amplitudes());

  const auto hs = parse_circuit("step 1: H q0\nstep 2: H q1\nstep 3: H q2\n", 7);
  const auto out = run_circuit(hs, new_basis_state(7, 0b0000001));
  for (std::uint64_t b = 0; b < 128; ++b) {
    const bool match = (b & 0xF) == 1;
    CHECK(std::abs(out[b] - Complex(match ? 1.0 / std::sqrt(8.0) : 0.0)) <= 1e-15);
  }
}

TEST_CASE("a circuit followed by its inverse returns the input") {
  const auto c = load_circuit(kData / "circuits" / "shor15-a7.qc", 7);
  const auto inv = inverse_circuit(c);
  CHECK(inv.size() == c.size());
  CHECK(inv.steps().front().index == 1);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_state(7, rng);
    const auto back = run_circuit(inv, run_circuit(c, s));
    CHECK(max_abs(back.amplitudes() - s.amplitudes()) <= 1e-9);
  }
}

TEST_CASE("circuit_unitary matches step-wise execution") {
  const auto c = parse_circuit("step 1: H q0\nstep 2: CNOT q0 q2\nstep 3: CSX q2 q1\n", 3);
  const Operator u = circuit_unitary(c);
  CHECK(is_unitary(u));
  for (std::uint64_t b = 0; b < 8; ++b)
    CHECK(max_abs(u.col(b) - run_circuit(c, new_basis_state(3, b)).amplitudes()) <= 1e-14);
}

TEST_CASE("a tampered gate matrix is named by the unitarity check") {
  auto gates = standard_gate_catalogue();
  const auto clean = check_gate_unitarity(gates);
  CHECK(clean.passed);
  CHECK(clean.name == "gate unitarity");

  Gate tampered = standard_gate("CSX");
  tampered.matrix(3, 3) *= 1.01;
  gates.push_back(tampered);
  const auto r = check_gate_unitarity(gates);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("CSX") != std::string::npos);
}
