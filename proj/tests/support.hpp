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

#include <cmath>
#include <complex>
#include <random>

#include "shorbrach/linalg.hpp"
#include "shorbrach/state.hpp"

namespace testing {

using shorbrach::Amplitudes;
using shorbrach::Complex;
using shorbrach::Operator;

inline constexpr Complex kI{0.0, 1.0};
inline const double kPi = std::acos(-1.0);

inline Amplitudes random_amplitudes(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Amplitudes a(d);
  for (Eigen::Index k = 0; k < d; ++k) a[k] = Complex(n(rng), n(rng));
  return a / a.norm();
}

inline shorbrach::StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  return shorbrach::make_state(random_amplitudes(Eigen::Index{1} << n_qubits, rng));
}

inline Operator random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Operator a(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = Complex(n(rng), n(rng));
  return (a + a.adjoint()) / 2.0;
}

/// Truncated Taylor series with scaling and squaring; independent of the
/// eigendecomposition used by the library.
inline Operator expm_taylor(const Operator& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Operator s = a / std::pow(2.0, squarings);
  Operator term = Operator::Identity(a.rows(), a.cols());
  Operator sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * s / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline Operator pauli_x() { return (Operator(2, 2) << 0, 1, 1, 0).finished(); }
inline Operator pauli_y() { return (Operator(2, 2) << 0, -kI, kI, 0).finished(); }
inline Operator pauli_z() { return (Operator(2, 2) << 1, 0, 0, -1).finished(); }

}  // namespace testing
