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

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <algorithm>
#include <complex>

namespace shorbrach {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Amplitudes = Eigen::VectorXcd;

// Tolerance hierarchy: algebraic identities vs composed numerics.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kNumericTol = 1e-10;

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::RealScalar(0) : m.cwiseAbs().maxCoeff();
}

/// Entrywise M == M^dagger, with the tolerance scaled by max(1, max|M_ij|).
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kAlgebraicTol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, static_cast<double>(max_abs(m)));
  return max_abs(m - m.adjoint()) <= tol * scale;
}

/// M^dagger M == 1 in the max-entry norm.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kNumericTol) {
  if (m.rows() != m.cols()) return false;
  using Plain = typename Derived::PlainObject;
  return max_abs(m.adjoint() * m - Plain::Identity(m.rows(), m.cols())) <= tol;
}

/// True when a == phase * b for a single unit-modulus phase.
template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                       double tol = kAlgebraicTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return max_abs(a) <= tol;
  const auto ratio = a(r, c) / b(r, c);
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  return max_abs(a - ratio * b) <= tol;
}

/// Kronecker product, left factor on the more significant index.
template <typename DerivedA, typename DerivedB>
Operator kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

}  // namespace shorbrach
