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

#include "qck/smallmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace qck {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagonalThreshold = 1e-14;
constexpr double kHermitianTolerance = 1e-12;

template <typename Scalar>
double real_part(Scalar z) {
  return std::real(z);
}

// Makes the first entry of modulus above 1e-12 real positive.
template <typename Scalar, int N>
void normalize_column_phase(Eigen::Matrix<Scalar, N, N>& v, int col) {
  for (int i = 0; i < N; ++i) {
    const double mag = std::abs(v(i, col));
    if (mag > 1e-12) {
      const Scalar phase = v(i, col) / mag;
      v.col(col) *= Eigen::numext::conj(phase);
      v(i, col) = mag;
      return;
    }
  }
}

}  // namespace

template <typename Scalar, int N>
SymEigResult<Scalar, N> herm_eig(const Eigen::Matrix<Scalar, N, N>& h) {
  using Matrix = Eigen::Matrix<Scalar, N, N>;
  static_assert(N >= 1 && N <= 4, "herm_eig is sized for N <= 4");

  const double scale = h.cwiseAbs().maxCoeff();
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermitianTolerance * std::max(1.0, scale))) {
    throw DomainError("not Hermitian");
  }

  Matrix a = (h + h.adjoint()) / 2.0;
  Matrix v = Matrix::Identity();
  const double fro = a.norm();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= kOffDiagonalThreshold * fro) break;

    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Scalar phase = a(p, q) / r;
        const double app = real_part(a(p, p));
        const double aqq = real_part(a(q, q));
        const double tau = (aqq - app) / (2.0 * r);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Matrix u = Matrix::Identity();
        u(p, p) = c;
        u(q, q) = c;
        u(p, q) = s * phase;
        u(q, p) = -s * Eigen::numext::conj(phase);

        a = (u.adjoint() * a * u).eval();
        a(p, q) = 0;
        a(q, p) = 0;
        v = (v * u).eval();
      }
    }
    for (int i = 0; i < N; ++i) a(i, i) = real_part(a(i, i));
  }

  std::array<int, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return real_part(a(x, x)) < real_part(a(y, y));
  });

  SymEigResult<Scalar, N> out;
  for (int k = 0; k < N; ++k) {
    out.values(k) = real_part(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
    normalize_column_phase(out.vectors, k);
  }
  return out;
}

SymEigResult<Complex, 2> herm_eig(const CMat2& h) { return herm_eig<Complex, 2>(h); }
SymEigResult<Complex, 4> herm_eig(const CMat4& h) { return herm_eig<Complex, 4>(h); }
SymEigResult<double, 3> sym_eig(const Mat3& h) { return herm_eig<double, 3>(h); }
SymEigResult<double, 4> sym_eig(const Mat4& h) { return herm_eig<double, 4>(h); }

namespace {

// Any unit vector orthogonal to u.
Vec3 orthogonal_unit(const Vec3& u) {
  Eigen::Index axis = 0;
  u.cwiseAbs().minCoeff(&axis);
  Vec3 e = Vec3::Zero();
  e(axis) = 1.0;
  return u.cross(e).normalized();
}

}  // namespace

Svd3Result svd3(const Mat3& y) {
  const auto eig = sym_eig(Mat3(y.transpose() * y));

  std::array<Vec3, 3> right;
  std::array<Vec3, 3> images;
  std::array<double, 3> t{};
  for (int k = 0; k < 3; ++k) {
    right[k] = eig.vectors.col(2 - k);
    images[k] = y * right[k];
    t[k] = images[k].norm();
  }
  // |y v_k| can reorder near-degenerate pairs relative to the eigenvalues.
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t[a] > t[b]; });

  Svd3Result out;
  for (int k = 0; k < 3; ++k) {
    out.singular_values(k) = t[order[k]];
    out.right.col(k) = right[order[k]];
  }

  const double top = out.singular_values(0);
  const double cutoff = 1e-15 * top;
  int resolved = 0;
  for (int k = 0; k < 3; ++k) {
    if (top == 0.0 || out.singular_values(k) <= cutoff) break;
    Vec3 u = images[order[k]];
    for (int j = 0; j < k; ++j) u -= out.left.col(j).dot(u) * out.left.col(j);
    const double n = u.norm();
    if (n <= cutoff) break;
    out.left.col(k) = u / n;
    ++resolved;
  }
  if (resolved == 0) out.left.col(0) = Vec3::UnitX();
  if (resolved <= 1) out.left.col(1) = orthogonal_unit(out.left.col(0));
  if (resolved <= 2) out.left.col(2) = out.left.col(0).cross(out.left.col(1));

  if (resolved < 3) {
    out.det_sign = 0;
  } else {
    const double d = out.left.determinant() * out.right.determinant();
    out.det_sign = d > 0 ? 1 : -1;
  }
  return out;
}

CMat2 psd_project(const CMat2& h) {
  const auto eig = herm_eig(h);
  const Eigen::Vector2d clipped = eig.values.cwiseMax(0.0);
  CMat2 out = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

CMat4 psd_project(const CMat4& h) {
  const auto eig = herm_eig(h);
  const Eigen::Vector4d clipped = eig.values.cwiseMax(0.0);
  CMat4 out = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

double min_eigenvalue(const CMat4& h) { return herm_eig(h).values(0); }

CMat4 partial_transpose_first(const CMat4& c) {
  CMat4 out = c;
  out.block<2, 2>(0, 2) = c.block<2, 2>(2, 0);
  out.block<2, 2>(2, 0) = c.block<2, 2>(0, 2);
  return out;
}

double trace_norm3(const Mat3& y) { return svd3(y).singular_values.sum(); }

double operator_norm(const Mat3& y) { return svd3(y).singular_values(0); }

double operator_norm(const Mat4& y) {
  const auto eig = sym_eig(Mat4(y.transpose() * y));
  double best = 0;
  for (int k = 0; k < 4; ++k) best = std::max(best, (y * eig.vectors.col(k)).norm());
  return best;
}

template SymEigResult<Complex, 2> herm_eig<Complex, 2>(const CMat2&);
template SymEigResult<Complex, 4> herm_eig<Complex, 4>(const CMat4&);
template SymEigResult<double, 3> herm_eig<double, 3>(const Mat3&);
template SymEigResult<double, 4> herm_eig<double, 4>(const Mat4&);

}  // namespace qck
