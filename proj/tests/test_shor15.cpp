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

#include <bit>
#include <filesystem>
#include <numeric>

#include "shorbrach/circuit.hpp"
#include "shorbrach/errors.hpp"
#include "shorbrach/shor15.hpp"
#include "support.hpp"

using namespace shorbrach;
using namespace testing;

namespace {

const std::filesystem::path kData{SHORBRACH_DATA_DIR};

ShorInstance load_instance(int a) {
  return make_shor_instance(a, load_circuit(kData / "circuits" / ("shor15-a" + std::to_string(a) + ".qc"), 7));
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t x, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < x; ++k) r = r * a % n;
  return r;
}

std::uint64_t reverse3(std::uint64_t y) { return ((y & 1) << 2) | (y & 2) | ((y >> 2) & 1); }

/// Marginal of the ideal final state: inverse DFT over x of the modular
/// exponentiation sequence, summed over f.
std::vector<double> dft_marginal(std::uint64_t a) {
  std::vector<double> p(8, 0.0);
  for (std::uint64_t f = 0; f < 16; ++f) {
    for (std::uint64_t y = 0; y < 8; ++y) {
      Complex amp = 0.0;
      for (std::uint64_t x = 0; x < 8; ++x)
        if (pow_mod(a, x, 15) == f) amp += std::polar(1.0, -2.0 * kPi * double(x * y) / 8.0) / 8.0;
      p[y] += std::norm(amp);
    }
  }
  return p;
}

}  // namespace

TEST_CASE("modexp_oracle follows direct modular arithmetic") {
  CHECK(modexp_oracle(7, 0, 15) == 1);
  const std::uint64_t seq7[] = {1, 7, 4, 13};
  for (std::uint64_t x = 0; x < 4; ++x) CHECK(modexp_oracle(7, x, 15) == seq7[x]);
  CHECK(modexp_oracle(11, 0, 15) == 1);
  CHECK(modexp_oracle(11, 1, 15) == 11);
  for (std::uint64_t a : {2, 4, 7, 8, 11, 13, 14})
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(modexp_oracle(a, x, 15) == pow_mod(a, x, 15));
  CHECK_THROWS_AS(modexp_oracle(5, 1, 15), DomainError);
}

TEST_CASE("basis index layout puts x above f") {
  CHECK(shor_basis_index(0, 1) == 1);
  CHECK(shor_basis_index(2, 4) == 2 * 16 + 4);
  CHECK(shor_basis_index(7, 13) == 7 * 16 + 13);
}

TEST_CASE("function gates of the a = 7 circuit compute 7^x mod 15") {
  const auto inst = load_instance(7);
  const auto report = verify_function_gates(inst);
  REQUIRE(report.checks.size() == 8);
  CHECK(report.all_passed());
  for (const auto& c : report.checks) {
    CHECK(c.observed_x == c.x);
    CHECK(c.observed_f == static_cast<int>(pow_mod(7, c.x, 15)));
    CHECK(c.magnitude == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(report.checks[0].observed_f == 1);
  CHECK(report.checks[2].observed_f == 4);
  CHECK_NOTHROW(report.require_pass());
}

TEST_CASE("a corrupted function block is reported with the failing input") {
  auto c = load_circuit(kData / "circuits" / "shor15-a7.qc", 7);
  Circuit broken(7);
  for (auto step : c.steps()) {
    if (step.index == 5) step.targets = {2, 6};
    broken.add_step(step);
  }
  const auto inst = make_shor_instance(7, broken);
  const auto report = verify_function_gates(inst);
  CHECK_FALSE(report.all_passed());
  try {
    report.require_pass();
    FAIL("expected a verification error");
  } catch (const VerificationError& e) {
    CHECK(std::string(e.what()).find("x = ") != std::string::npos);
  }
}

TEST_CASE("x-register distributions match the inverse DFT oracle") {
  for (int a : {7, 11}) {
    const auto inst = load_instance(a);
    const auto dist = x_register_distribution(inst);
    const auto oracle = dft_marginal(a);
    REQUIRE(dist.size() == 8);
    for (std::size_t y = 0; y < 8; ++y) CHECK(std::abs(dist[y] - oracle[y]) <= 1e-9);
  }
  const auto d7 = x_register_distribution(load_instance(7));
  for (std::size_t y = 0; y < 8; ++y) CHECK(std::abs(d7[y] - (y % 2 == 0 ? 0.25 : 0.0)) <= 1e-9);
  const auto d11 = x_register_distribution(load_instance(11));
  for (std::size_t y = 0; y < 8; ++y) CHECK(std::abs(d11[y] - (y % 4 == 0 ? 0.5 : 0.0)) <= 1e-9);
}

TEST_CASE("make_shor_instance rejects bases without a nontrivial period") {
  const auto c = load_circuit(kData / "circuits" / "shor15-a7.qc", 7);
  CHECK_THROWS_AS(make_shor_instance(1, c), DomainError);
  CHECK_THROWS_AS(make_shor_instance(5, c), DomainError);
  CHECK_THROWS_AS(make_shor_instance(7, Circuit(7)), DomainError);
}

TEST_CASE("extract_period from peak spacing") {
  const std::vector<double> p4{0.25, 0, 0.25, 0, 0.25, 0, 0.25, 0};
  const auto r4 = extract_period(p4);
  CHECK(r4.period == 4);
  CHECK(r4.peaks == std::vector<int>{0, 2, 4, 6});
  CHECK_FALSE(r4.trivial);

  const std::vector<double> p2{0.5, 0, 0, 0, 0.5, 0, 0, 0};
  CHECK(extract_period(p2).period == 2);

  const std::vector<double> p1{1, 0, 0, 0, 0, 0, 0, 0};
  const auto r1 = extract_period(p1);
  CHECK(r1.period == 1);
  CHECK(r1.trivial);

  const std::vector<double> uneven{0.4, 0.3, 0, 0.3, 0, 0, 0, 0};
  CHECK_THROWS_AS(extract_period(uneven), VerificationError);
  const std::vector<double> spacing3{0.34, 0, 0, 0.33, 0, 0, 0.33, 0};
  CHECK_THROWS_AS(extract_period(spacing3), VerificationError);
}

TEST_CASE("factors_from_period by gcd") {
  auto sorted = [](std::pair<std::uint64_t, std::uint64_t> p) {
    return std::pair{std::min(p.first, p.second), std::max(p.first, p.second)};
  };
  const auto f7 = factors_from_period(7, 4, 15);
  REQUIRE(f7);
  CHECK(sorted(*f7) == std::pair<std::uint64_t, std::uint64_t>{3, 5});
  CHECK(std::gcd(7 * 7 - 1, 15) * std::gcd(7 * 7 + 1, 15) == 15);

  const auto f11 = factors_from_period(11, 2, 15);
  REQUIRE(f11);
  CHECK(sorted(*f11) == std::pair<std::uint64_t, std::uint64_t>{3, 5});

  const auto f4 = factors_from_period(4, 2, 15);
  REQUIRE(f4);
  CHECK(sorted(*f4) == std::pair<std::uint64_t, std::uint64_t>{3, 5});

  CHECK_FALSE(factors_from_period(7, 3, 15));
  CHECK_FALSE(factors_from_period(14, 2, 15));
}

TEST_CASE("end to end: a = 7 gives period 4 and factors 3 and 5") {
  const auto inst = load_instance(7);
  const auto r = extract_period(x_register_distribution(inst));
  CHECK(r.period == 4);
  const auto f = factors_from_period(7, r.period, 15);
  REQUIRE(f);
  CHECK(f->first * f->second == 15);
  CHECK(std::min(f->first, f->second) == 3);
}

TEST_CASE("full circuit unitary agrees with the brute-force 128x128 oracle") {
  for (int a : {7, 11}) {
    const auto inst = load_instance(a);
    const Operator u = circuit_unitary(inst.circuit);

    // H on each x qubit, then |x>|f> -> |x>|f a^x mod 15>, then the inverse DFT on x.
    Operator hadamards = Operator::Zero(128, 128);
    Operator modexp = Operator::Zero(128, 128);
    Operator idft = Operator::Zero(128, 128);
    for (std::uint64_t f = 0; f < 16; ++f) {
      for (std::uint64_t x = 0; x < 8; ++x) {
        for (std::uint64_t y = 0; y < 8; ++y) {
          const double sign = std::popcount(x & y) % 2 ? -1.0 : 1.0;
          hadamards(y * 16 + f, x * 16 + f) = sign / std::sqrt(8.0);
          idft(y * 16 + f, x * 16 + f) = std::polar(1.0, -2.0 * kPi * double(x * y) / 8.0) / std::sqrt(8.0);
        }
        const std::uint64_t g = f < 15 ? f * pow_mod(a, x, 15) % 15 : f;
        modexp(x * 16 + g, x * 16 + f) = 1.0;
      }
    }
    const Operator oracle = idft * modexp * hadamards;

    // The inverse QFT leaves the x register bit-reversed.
    Operator reverse = Operator::Zero(128, 128);
    for (std::uint64_t x = 0; x < 8; ++x)
      for (std::uint64_t f = 0; f < 16; ++f) reverse(reverse3(x) * 16 + f, x * 16 + f) = 1.0;

    for (std::uint64_t x = 0; x < 8; ++x) {
      const std::uint64_t in = shor_basis_index(static_cast<int>(x), 1);
      CHECK(max_abs(u.col(in) - reverse * oracle.col(in)) <= 1e-9);
    }
  }
}
