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

#include <Eigen/SVD>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qck;
using namespace qck_test;

TEST(smallmat, herm_eig_identity) {
  const auto r = herm_eig(CMat4(CMat4::Identity()));
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(r.values(i), 1.0, 1e-15);
  ASSERT_LE((r.vectors.adjoint() * r.vectors - CMat4::Identity()).norm(), 1e-14);
}

TEST(smallmat, herm_eig_diag) {
  CMat2 h = CMat2::Zero();
  h(0, 0) = 3;
  h(1, 1) = -1;
  const auto r = herm_eig(h);
  ASSERT_NEAR(r.values(0), -1.0, 1e-15);
  ASSERT_NEAR(r.values(1), 3.0, 1e-15);
  ASSERT_LE((r.vectors.col(0) - Eigen::Vector2cd(0, 1)).norm(), 1e-15);
  ASSERT_LE((r.vectors.col(1) - Eigen::Vector2cd(1, 0)).norm(), 1e-15);
}

TEST(smallmat, herm_eig_reconstructs_random) {
  for (int t = 0; t < 200; ++t) {
    const CMat4 h = random_hermitian4();
    const auto r = herm_eig(h);
    const CMat4 rec = r.vectors * r.values.cast<Complex>().asDiagonal() * r.vectors.adjoint();
    ASSERT_LE((rec - h).norm(), 1e-12 * std::max(1.0, h.norm()));
    ASSERT_LE((r.vectors.adjoint() * r.vectors - CMat4::Identity()).norm(), 1e-12);
    const Eigen::Vector4d ref = oracle_eigenvalues(h);
    for (int i = 0; i < 4; ++i) ASSERT_NEAR(r.values(i), ref(i), 1e-12 * h.norm());
    for (int i = 0; i < 3; ++i) ASSERT_LE(r.values(i), r.values(i + 1));
  }
}

TEST(smallmat, herm_eig_real_symmetric) {
  for (int t = 0; t < 100; ++t) {
    Mat4 a = random_mat4();
    a = (a + a.transpose()).eval();
    const auto r = sym_eig(a);
    const Mat4 rec = r.vectors * r.values.asDiagonal() * r.vectors.transpose();
    ASSERT_LE((rec - a).norm(), 1e-12 * std::max(1.0, a.norm()));
  }
}

TEST(smallmat, herm_eig_eigenvector_sign_convention) {
  const CMat4 h = random_hermitian4();
  const auto r = herm_eig(h);
  for (int k = 0; k < 4; ++k) {
    int first = 0;
    while (std::abs(r.vectors(first, k)) <= 1e-12) ++first;
    ASSERT_GT(r.vectors(first, k).real(), 0);
    ASSERT_NEAR(r.vectors(first, k).imag(), 0, 1e-15);
  }
}

TEST(smallmat, herm_eig_rejects_non_hermitian) {
  CMat2 h = CMat2::Zero();
  h(0, 1) = 1;
  try {
    herm_eig(h);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    ASSERT_NE(std::string(e.what()).find("not Hermitian"), std::string::npos);
  }
}

TEST(smallmat, svd3_identity_and_reflection) {
  auto r = svd3(Mat3::Identity());
  ASSERT_LE((r.singular_values - Vec3(1, 1, 1)).norm(), 1e-15);
  ASSERT_EQ(r.det_sign, 1);
  r = svd3(Vec3(1, 1, -1).asDiagonal());
  ASSERT_LE((r.singular_values - Vec3(1, 1, 1)).norm(), 1e-15);
  ASSERT_EQ(r.det_sign, -1);
}

TEST(smallmat, svd3_random_matches_cross_oracle) {
  for (int t = 0; t < 300; ++t) {
    const Mat3 y = random_mat3();
    const auto r = svd3(y);
    const Vec3 ref = Eigen::JacobiSVD<Mat3>(y).singularValues();
    ASSERT_LE((r.singular_values - ref).norm(), 1e-12 * y.norm());
    // Same values as sqrt of the spectrum of Y^T Y.
    const Vec3 ev = sym_eig(Mat3(y.transpose() * y)).values;
    for (int i = 0; i < 3; ++i) {
      ASSERT_NEAR(r.singular_values(i), std::sqrt(std::max(0.0, ev(2 - i))), 1e-10 * y.norm());
    }
    const Mat3 rec = r.left * r.singular_values.asDiagonal() * r.right.transpose();
    ASSERT_LE((rec - y).norm(), 1e-12 * y.norm());
    ASSERT_LE((r.left.transpose() * r.left - Mat3::Identity()).norm(), 1e-12);
    ASSERT_LE((r.right.transpose() * r.right - Mat3::Identity()).norm(), 1e-12);
    ASSERT_EQ(r.det_sign, y.determinant() > 0 ? 1 : -1);
  }
}

TEST(smallmat, svd3_rank_deficient) {
  const Vec3 a(1, 2, 3), b(-1, 0, 2);
  const Mat3 y = a * b.transpose();
  const auto r = svd3(y);
  ASSERT_NEAR(r.singular_values(0), a.norm() * b.norm(), 1e-12);
  ASSERT_NEAR(r.singular_values(1), 0, 1e-12);
  ASSERT_EQ(r.det_sign, 0);
  const Mat3 rec = r.left * r.singular_values.asDiagonal() * r.right.transpose();
  ASSERT_LE((rec - y).norm(), 1e-12 * y.norm());
  ASSERT_EQ(svd3(Mat3::Zero()).det_sign, 0);
}

TEST(smallmat, psd_project_examples) {
  CMat2 h = CMat2::Zero();
  h(0, 0) = 1;
  h(1, 1) = -1;
  CMat2 expect = CMat2::Zero();
  expect(0, 0) = 1;
  ASSERT_LE((psd_project(h) - expect).norm(), 1e-15);

  const CMat4 g = random_hermitian4();
  const CMat4 psd = g * g.adjoint();
  ASSERT_LE((psd_project(psd) - psd).norm(), 1e-12 * psd.norm());
}

TEST(smallmat, psd_project_beats_sampled_candidates) {
  for (int t = 0; t < 5; ++t) {
    const CMat4 h = random_hermitian4();
    const CMat4 p = psd_project(h);
    ASSERT_GE(oracle_min_eig(p), -1e-12);
    const double best = (h - p).norm();
    for (int k = 0; k < 2000; ++k) {
      const double eps = std::pow(10.0, uniform(-4, 0));
      const CMat4 cand = psd_project(CMat4(p + eps * random_hermitian4()));
      ASSERT_GE((h - cand).norm(), best - 1e-12);
    }
  }
}

TEST(smallmat, psd_project_idempotent) {
  for (int t = 0; t < 50; ++t) {
    const CMat4 p = psd_project(random_hermitian4());
    ASSERT_LE((psd_project(p) - p).norm(), 1e-12 * std::max(1.0, p.norm()));
  }
}

TEST(smallmat, partial_transpose_block_swap) {
  CMat4 c;
  for (int i = 0; i < 16; ++i) c(i / 4, i % 4) = Complex(i, -i);
  const CMat4 t = partial_transpose_first(c);
  ASSERT_TRUE((t.block<2, 2>(0, 0) == c.block<2, 2>(0, 0)));
  ASSERT_TRUE((t.block<2, 2>(0, 2) == c.block<2, 2>(2, 0)));
  ASSERT_TRUE((t.block<2, 2>(2, 0) == c.block<2, 2>(0, 2)));
  ASSERT_TRUE((t.block<2, 2>(2, 2) == c.block<2, 2>(2, 2)));
}

TEST(smallmat, partial_transpose_involution_isometry) {
  for (int t = 0; t < 50; ++t) {
    const CMat4 h = random_hermitian4();
    const CMat4 pt = partial_transpose_first(h);
    ASSERT_EQ(partial_transpose_first(pt), h);
    ASSERT_NEAR(pt.norm(), h.norm(), 1e-14 * h.norm());
    ASSERT_LE((pt - pt.adjoint()).norm(), 1e-15);
  }
}

TEST(smallmat, trace_norm3_examples) {
  ASSERT_NEAR(trace_norm3(Mat3::Identity()), 3.0, 1e-15);
  ASSERT_NEAR(trace_norm3(Mat3::Zero()), 0.0, 1e-15);
  ASSERT_NEAR(trace_norm3(Vec3(0.37, 0, 0).asDiagonal()), 0.37, 1e-15);
}

TEST(smallmat, trace_norm_dominates_operator_norm) {
  for (int t = 0; t < 200; ++t) {
    const Mat3 y = random_mat3();
    ASSERT_GE(trace_norm3(y), operator_norm(y) - 1e-12);
    const Mat3 r1 = random_mat3().col(0) * random_mat3().col(1).transpose();
    ASSERT_NEAR(trace_norm3(r1), operator_norm(r1), 1e-12 * r1.norm());
  }
}

TEST(smallmat, operator_norm_examples) {
  ASSERT_NEAR(operator_norm(Mat3(Mat3::Identity())), 1.0, 1e-15);
  ASSERT_NEAR(operator_norm(Mat3(Vec3(1, 0.4, 0).asDiagonal())), 1.0, 1e-15);
  ASSERT_NEAR(operator_norm(Mat4(Mat4::Identity())), 1.0, 1e-15);
}

TEST(smallmat, operator_norm_matches_power_iteration) {
  for (int t = 0; t < 100; ++t) {
    const Mat3 y = random_mat3();
    const Mat3 g = y.transpose() * y;
    Vec3 v(1, 0.5, 0.25);
    for (int k = 0; k < 5000; ++k) v = (g * v).normalized();
    ASSERT_NEAR(operator_norm(y), (y * v).norm(), 1e-10 * y.norm());

    const Mat4 z = random_mat4();
    const Mat4 g4 = z.transpose() * z;
    Vec4 w(1, 0.5, 0.25, 0.125);
    for (int k = 0; k < 5000; ++k) w = (g4 * w).normalized();
    ASSERT_NEAR(operator_norm(z), (z * w).norm(), 1e-10);
  }
}
