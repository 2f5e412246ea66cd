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

#include "shorbrach/circuit.hpp"

#include <cctype>
#include <charconv>
#include <fmt/core.h>
#include <fstream>
#include <sstream>

#include "shorbrach/errors.hpp"

namespace shorbrach {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw DomainError(fmt::format("Circuit: {} qubits outside [1, {}]", n_qubits, kMaxQubits));
}

void Circuit::add_step(CircuitStep step) {
  if (static_cast<int>(step.targets.size()) != step.gate.arity)
    throw DomainError(fmt::format("step {}: {} expects {} qubit(s), got {}", step.index, step.gate.name,
                                  step.gate.arity, step.targets.size()));
  for (std::size_t i = 0; i < step.targets.size(); ++i) {
    const int q = step.targets[i];
    if (q < 0 || q >= n_qubits_)
      throw DomainError(fmt::format("step {}: qubit q{} outside a {}-qubit register", step.index, q, n_qubits_));
    for (std::size_t j = 0; j < i; ++j)
      if (step.targets[j] == q) throw DomainError(fmt::format("step {}: repeated qubit q{}", step.index, q));
  }
  if (!steps_.empty() && step.index <= steps_.back().index)
    throw DomainError(fmt::format("step {} does not follow step {}", step.index, steps_.back().index));
  steps_.push_back(std::move(step));
}

namespace {

struct Cursor {
  std::string_view s;
  int line;

  void skip_ws() {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  }
  bool eat(char c) {
    skip_ws();
    if (!s.empty() && s.front() == c) {
      s.remove_prefix(1);
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(line, fmt::format("expected '{}'", c));
  }
  std::string_view word() {
    skip_ws();
    std::size_t n = 0;
    while (n < s.size() && (std::isalnum(static_cast<unsigned char>(s[n])) || s[n] == '_')) ++n;
    auto w = s.substr(0, n);
    s.remove_prefix(n);
    return w;
  }
  template <typename T>
  T number(const char* what) {
    skip_ws();
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{}) throw ParseError(line, fmt::format("expected {}", what));
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return v;
  }
};

struct ParsedLine {
  int index;
  std::string gate;
  std::optional<double> param;
  std::vector<int> qubits;
};

ParsedLine parse_step_line(std::string_view text, int line) {
  Cursor cur{text, line};
  if (cur.word() != "step") throw ParseError(line, "expected 'step'");
  ParsedLine out;
  out.index = cur.number<int>("step number");
  cur.expect(':');
  out.gate = std::string(cur.word());
  if (out.gate.empty()) throw ParseError(line, "expected gate name");
  if (cur.eat('(')) {
    out.param = cur.number<double>("angle");
    cur.expect(')');
  }
  for (;;) {
    cur.skip_ws();
    if (cur.s.empty()) break;
    if (!cur.eat('q')) throw ParseError(line, "expected qubit operand 'q<int>'");
    if (cur.s.empty() || !std::isdigit(static_cast<unsigned char>(cur.s.front())))
      throw ParseError(line, "expected qubit number after 'q'");
    out.qubits.push_back(cur.number<int>("qubit number"));
  }
  if (out.qubits.empty() || out.qubits.size() > 2) throw ParseError(line, "expected one or two qubit operands");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Circuit parse_circuit(std::string_view text, std::optional<int> n_qubits) {
  std::vector<std::pair<int, ParsedLine>> lines;
  int line_no = 0;
  int max_qubit = -1;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    const auto body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    auto parsed = parse_step_line(body, line_no);
    for (int q : parsed.qubits) max_qubit = std::max(max_qubit, q);
    lines.emplace_back(line_no, std::move(parsed));
  }

  const int width = n_qubits.value_or(std::max(1, max_qubit + 1));
  Circuit c(width);
  for (auto& [line, p] : lines) {
    try {
      Gate g = standard_gate(p.gate, p.param);
      c.add_step(CircuitStep{p.index, std::move(g), std::move(p.qubits)});
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
  }
  return c;
}

std::string render_circuit(const Circuit& c) {
  std::string out;
  for (const auto& st : c.steps()) {
    out += fmt::format("step {}: {}", st.index, st.gate.name);
    if (st.gate.param) out += fmt::format("({})", *st.gate.param);
    for (int q : st.targets) out += fmt::format(" q{}", q);
    out += '\n';
  }
  return out;
}

Circuit load_circuit(const std::filesystem::path& path, std::optional<int> n_qubits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFileError(fmt::format("cannot open circuit file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_circuit(buf.str(), n_qubits);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

StateVector run_steps(const Circuit& c, std::size_t first, std::size_t last, const StateVector& s0) {
  if (s0.n_qubits() != c.n_qubits())
    throw DomainError(fmt::format("run_circuit: {}-qubit state for a {}-qubit circuit", s0.n_qubits(), c.n_qubits()));
  if (first > last || last > c.size()) throw DomainError("run_steps: step range out of bounds");
  StateVector s = s0;
  for (std::size_t i = first; i < last; ++i) {
    const auto& st = c.steps()[i];
    s = apply_operator(embed_gate(st.gate.matrix, st.targets, c.n_qubits()), s);
  }
  return s;
}

StateVector run_circuit(const Circuit& c, const StateVector& s0) { return run_steps(c, 0, c.size(), s0); }

Operator circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Operator u = Operator::Identity(dim, dim);
  for (const auto& st : c.steps()) u = embed_gate(st.gate.matrix, st.targets, c.n_qubits()) * u;
  return u;
}

Circuit inverse_circuit(const Circuit& c) {
  Circuit inv(c.n_qubits());
  int index = 1;
  for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it)
    inv.add_step(CircuitStep{index++, adjoint(it->gate), it->targets});
  return inv;
}

}  // namespace shorbrach
