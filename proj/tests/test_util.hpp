// Copyright 2026 The qck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCK_TESTS_TEST_UTIL_HPP
#define QCK_TESTS_TEST_UTIL_HPP

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "qck/genrand.hpp"
#include "qck/pauli.hpp"

namespace qck_test {

using namespace qck;

inline std::mt19937_64& engine() {
  static std::mt19937_64 e(20261016);
  return e;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine());
}

inline double normal() { return std::normal_distribution<double>()(engine()); }

inline CMat4 random_hermitian4() {
  CMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) m(i, k) = Complex(normal(), normal());
  return (m + m.adjoint()) / 2.0;
}

inline CMat2 random_complex2() {
  CMat2 m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) m(i, k) = Complex(normal(), normal());
  return m;
}

inline CMat2 random_hermitian2() {
  const CMat2 m = random_complex2();
  return (m + m.adjoint()) / 2.0;
}

inline Mat3 random_mat3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = normal();
  return m;
}

inline Mat4 random_mat4(double lo = -1, double hi = 1) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) m(i, k) = uniform(lo, hi);
  return m;
}

/// Eigenvalues from Eigen's solver, ascending.
inline Eigen::Vector4d oracle_eigenvalues(const CMat4& h) {
  return Eigen::SelfAdjointEigenSolver<CMat4>(h).eigenvalues();
}

inline double oracle_min_eig(const CMat4& h) { return oracle_eigenvalues(h)(0); }

inline double oracle_min_eig(const CMat2& h) {
  return Eigen::SelfAdjointEigenSolver<CMat2>(h).eigenvalues()(0);
}

/// Point i of an n-point Fibonacci sphere.
inline Vec3 fib(int i, int n) {
  const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(r * std::cos(ga * i), r * std::sin(ga * i), z);
}

/// The map given by Kraus operators, evaluated directly on X.
inline CMat2 conjugate(const CMat2& k, const CMat2& x) { return k * x * k.adjoint(); }

/// Matrix unit E_ij.
inline CMat2 unit(int i, int j) {
  CMat2 e = CMat2::Zero();
  e(i, j) = 1.0;
  return e;
}

/// pi built from scratch: column mu holds Re Tr(sigma_nu S(sigma_mu)).
template <typename F>
Mat4 oracle_pi(F&& s) {
  const double h = 1.0 / std::numbers::sqrt2;
  CMat2 sig[4];
  sig[0] << h, 0, 0, h;
  sig[1] << 0, h, h, 0;
  sig[2] << 0, Complex(0, -h), Complex(0, h), 0;
  sig[3] << h, 0, 0, -h;
  Mat4 p;
  for (int mu = 0; mu < 4; ++mu) {
    const CMat2 img = s(sig[mu]);
    for (int nu = 0; nu < 4; ++nu) p(nu, mu) = (sig[nu] * img).trace().real();
  }
  return p;
}

}  // namespace qck_test

#endif  // QCK_TESTS_TEST_UTIL_HPP
