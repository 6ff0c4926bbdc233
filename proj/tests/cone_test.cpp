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

#include "qck/cone.hpp"

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qck;
using namespace qck_test;

namespace {

double quad(const Mat3& m, const Vec3& v, double c, const Vec3& u) {
  return u.dot(m * u) + 2 * v.dot(u) + c;
}

// Dense Fibonacci sampling, then a shrinking pattern search from the best
// node to remove the grid discretization error.
double brute_sphere_min(const Mat3& m, const Vec3& v, double c, int n) {
  double best = std::numeric_limits<double>::infinity();
  Vec3 arg;
  for (int i = 0; i < n; ++i) {
    const Vec3 u = fib(i, n);
    const double q = quad(m, v, c, u);
    if (q < best) {
      best = q;
      arg = u;
    }
  }
  double step = 0.01;
  while (step > 1e-13) {
    bool moved = false;
    for (int axis = 0; axis < 3; ++axis) {
      for (double sgn : {1.0, -1.0}) {
        Vec3 cand = arg;
        cand(axis) += sgn * step;
        cand.normalize();
        const double q = quad(m, v, c, cand);
        if (q < best) {
          best = q;
          arg = cand;
          moved = true;
        }
      }
    }
    if (!moved) step /= 2;
  }
  return best;
}

Mat3 random_sym3() {
  const Mat3 a = random_mat3();
  return (a + a.transpose()) / 2;
}

}  // namespace

TEST(cone, classify_vector_examples) {
  auto r = classify_vector(PauliVector(1, 0, 0, 0));
  ASSERT_EQ(r.status, ConeStatus::interior);
  ASSERT_EQ(r.margin, 1.0);
  r = classify_vector(PauliVector(1, 1, 0, 0));
  ASSERT_EQ(r.status, ConeStatus::boundary);
  ASSERT_EQ(r.margin, 0.0);
  r = classify_vector(PauliVector(0, 1, 0, 0));
  ASSERT_EQ(r.status, ConeStatus::outside);
  ASSERT_EQ(r.margin, -1.0);
  ASSERT_STREQ(to_string(ConeStatus::boundary), "boundary");
}

TEST(cone, minkowski_metric_signature) {
  ASSERT_EQ(minkowski_metric(), Mat4(Vec4(1, -1, -1, -1).asDiagonal()));
}

TEST(cone, trs_examples) {
  auto r = trs_min_sphere(Mat3::Identity(), Vec3::Zero(), 0);
  ASSERT_NEAR(r.min_value, 1.0, 1e-15);
  r = trs_min_sphere(Vec3(1, 2, 3).asDiagonal(), Vec3::Zero(), 0);
  ASSERT_NEAR(r.min_value, 1.0, 1e-15);
  ASSERT_NEAR(std::abs(r.argmin_u(0)), 1.0, 1e-15);
  ASSERT_TRUE(r.hard_case);
}

TEST(cone, trs_stationarity_and_probes) {
  for (int t = 0; t < 500; ++t) {
    const Mat3 m = random_sym3();
    const Vec3 v = t % 5 == 0 ? Vec3::Zero() : Vec3(random_mat3().col(0));
    const double c = normal();
    const auto r = trs_min_sphere(m, v, c);
    ASSERT_NEAR(r.argmin_u.norm(), 1.0, 1e-12);
    const Vec3 resid = (m - r.multiplier * Mat3::Identity()) * r.argmin_u + v;
    ASSERT_LE(resid.norm(), 1e-9 * (1 + m.norm() + v.norm()));
    for (int i = 0; i < 64; ++i) ASSERT_LE(r.min_value, quad(m, v, c, fib(i, 64)) + 1e-12);
  }
}

TEST(cone, trs_matches_dense_sphere_oracle) {
  for (int t = 0; t < 4; ++t) {
    const Mat3 m = random_sym3();
    const Vec3 v = random_mat3().col(0);
    const double c = normal();
    const double exact = trs_min_sphere(m, v, c).min_value;
    const double brute = brute_sphere_min(m, v, c, 1000000);
    ASSERT_NEAR(exact, brute, 1e-6);
    ASSERT_LE(exact, brute + 1e-12);
  }
}

TEST(cone, trs_hard_case_degenerate) {
  // v orthogonal to the doubly degenerate bottom eigenspace.
  const Mat3 m = Vec3(-2, -2, 1).asDiagonal();
  const Vec3 v(0, 0, 0.5);
  const auto r = trs_min_sphere(m, v, 0);
  ASSERT_TRUE(r.hard_case);
  ASSERT_NEAR(r.min_value, brute_sphere_min(m, v, 0, 100000), 1e-9);
}

TEST(cone, positive_map_examples) {
  ASSERT_TRUE(is_positive_map(Mat4::Identity()).positive);
  ASSERT_TRUE(is_positive_map(transpose_pi()).positive);
  ASSERT_TRUE(is_positive_map(Vec4(1, 0.5, 0, 0).asDiagonal()).positive);

  const auto r = is_positive_map(Vec4(1, 1.01, 0, 0).asDiagonal());
  ASSERT_FALSE(r.positive);
  ASSERT_NEAR(std::abs(r.witness(1)), 1.0, 1e-12);
  ASSERT_NEAR(r.witness(2), 0.0, 1e-12);
  ASSERT_NEAR(r.witness(3), 0.0, 1e-12);
  ASSERT_LT(image_margin(Vec4(1, 1.01, 0, 0).asDiagonal(), r.witness.tail<3>()), 0);
}

TEST(cone, negative_time_component_rejected) {
  Mat4 p = Mat4::Zero();
  p(0, 0) = 0.5;
  p(0, 1) = 1.0;
  const auto r = is_positive_map(p);
  ASSERT_FALSE(r.positive);
  ASSERT_LT(r.time_margin, 0);
  ASSERT_LT((p * r.witness)(0), 0);
}

TEST(cone, generators_of_positive_cone_accepted) {
  Rng rng(Seed{99});
  for (int t = 0; t < 300; ++t) {
    const Mat4 a = spinor_rho(rand_sl2(rng));
    const Mat4 b = compose_with_transpose(spinor_rho(rand_sl2(rng)));
    const Mat4 c = delta_rank_one(rand_boundary_vector(rng), rand_boundary_vector(rng));
    ASSERT_TRUE(is_positive_map(a / a(0, 0)).positive);
    ASSERT_TRUE(is_positive_map(b / b(0, 0)).positive);
    ASSERT_TRUE(is_positive_map(c).positive);
    const double w1 = rng.uniform(), w2 = rng.uniform();
    ASSERT_TRUE(is_positive_map(w1 * a / a(0, 0) + w2 * b / b(0, 0) + c).positive);
  }
}

TEST(cone, positivity_agrees_with_sampling) {
  for (int t = 0; t < 100; ++t) {
    const Mat4 p = random_mat4();
    const bool exact = is_positive_map(p).positive;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20000; ++i) worst = std::min(worst, image_margin(p, fib(i, 20000)));
    if (exact) ASSERT_GE(worst, -1e-7);
    if (!exact) ASSERT_LE(worst, 1e-7);
  }
}

TEST(cone, theta_membership_examples) {
  auto th = theta_membership(Mat4::Identity());
  ASSERT_TRUE(th.has_value());
  ASSERT_NEAR(th->r, 1.0, 1e-15);
  ASSERT_TRUE(th->proper);

  th = theta_membership(transpose_pi());
  ASSERT_TRUE(th.has_value());
  ASSERT_NEAR(th->r, 1.0, 1e-15);
  ASSERT_FALSE(th->proper);

  ASSERT_FALSE(theta_membership(Vec4(1, 0, 0, 0).asDiagonal()).has_value());
  ASSERT_FALSE(theta_membership(Mat4(-Mat4::Identity())).has_value());
}

TEST(cone, theta_of_scaled_spinor) {
  for (int t = 0; t < 200; ++t) {
    const Mat4 o = spinor_rho(rand_sl2(Seed{static_cast<std::uint64_t>(t)}));
    auto th = theta_membership(o);
    ASSERT_TRUE(th.has_value());
    ASSERT_NEAR(th->r, 1.0, 1e-10);
    ASSERT_TRUE(th->proper);
    th = theta_membership(Mat4(2.5 * o));
    ASSERT_TRUE(th.has_value());
    ASSERT_NEAR(th->r, 2.5, 1e-9);
    ASSERT_LE((2.5 * th->o - 2.5 * o).norm(), 1e-10 * o.norm());
  }
}

TEST(cone, spinor_rotation) {
  const double th = 0.7;
  CMat2 v = CMat2::Zero();
  v(0, 0) = std::polar(1.0, -th / 2);
  v(1, 1) = std::polar(1.0, th / 2);
  Mat4 expect = Mat4::Identity();
  expect(1, 1) = std::cos(th);
  expect(1, 2) = -std::sin(th);
  expect(2, 1) = std::sin(th);
  expect(2, 2) = std::cos(th);
  const Mat4 rho = spinor_rho(v);
  ASSERT_LE((rho - expect).norm(), 1e-14);
  ASSERT_LE((rho - oracle_pi([&](const CMat2& x) { return conjugate(v, x); })).norm(), 1e-14);
  ASSERT_LE((inverse_spinor(rho) - v).norm(), 1e-10);
}

TEST(cone, spinor_boost) {
  const double s = 1.7;
  CMat2 v = CMat2::Zero();
  v(0, 0) = s;
  v(1, 1) = 1 / s;
  const double ch = (s * s + 1 / (s * s)) / 2, sh = (s * s - 1 / (s * s)) / 2;
  Mat4 expect = Mat4::Identity();
  expect(0, 0) = ch;
  expect(0, 3) = sh;
  expect(3, 0) = sh;
  expect(3, 3) = ch;
  ASSERT_LE((spinor_rho(v) - expect).norm(), 1e-13);
  ASSERT_LE((inverse_spinor(expect) - v).norm(), 1e-10);
}

TEST(cone, spinor_identity) {
  ASSERT_LE((spinor_rho(CMat2::Identity()) - Mat4::Identity()).norm(), 1e-15);
  ASSERT_LE((inverse_spinor(Mat4::Identity()) - CMat2::Identity()).norm(), 1e-12);
  ASSERT_THROW(spinor_rho(CMat2(2.0 * CMat2::Identity())), DomainError);
  ASSERT_THROW(inverse_spinor(transpose_pi()), DomainError);
}

TEST(cone, spinor_group_properties) {
  const Mat4& eta = minkowski_metric();
  Rng rng(Seed{2024});
  for (int t = 0; t < 300; ++t) {
    const CMat2 v1 = rand_sl2(rng), v2 = rand_sl2(rng);
    const Mat4 r1 = spinor_rho(v1), r2 = spinor_rho(v2);
    ASSERT_LE((r1.transpose() * eta * r1 - eta).cwiseAbs().maxCoeff(),
              1e-12 * std::max(1.0, r1.squaredNorm()));
    const Mat4 r12 = spinor_rho(CMat2(v1 * v2));
    ASSERT_LE((r12 - r1 * r2).cwiseAbs().maxCoeff(), 1e-11 * std::max(1.0, r12.norm()));
    const CMat2 back = inverse_spinor(r1);
    ASSERT_TRUE((back - v1).norm() < 1e-7 * v1.norm() || (back + v1).norm() < 1e-7 * v1.norm());
    ASSERT_GE(back.trace().real(), -1e-12);
  }
}

TEST(cone, inverse_spinor_tie_break) {
  // V = [[0, 1], [-1, 0]] has zero trace; first nonzero entry (0, 1) gets
  // positive real part.
  CMat2 v;
  v << 0, 1, -1, 0;
  const CMat2 back = inverse_spinor(spinor_rho(v));
  ASSERT_LE((back - v).norm(), 1e-12);
  ASSERT_LE((inverse_spinor(spinor_rho(CMat2(-v))) - v).norm(), 1e-12);

  CMat2 w;
  w << Complex(0, 1), 0, 0, Complex(0, -1);
  ASSERT_LE((inverse_spinor(spinor_rho(w)) - w).norm(), 1e-12);
}

TEST(cone, delta_rank_one_examples) {
  PauliVector u(1, 0, 0, 1);
  Mat4 d = delta_rank_one(u, u);
  ASSERT_GE(oracle_min_eig(choi_of(d)), -1e-14);
  ASSERT_EQ(Eigen::FullPivLU<Mat4>(d).rank(), 1);

  const PauliVector x(1, 1, 0, 0);
  d = delta_rank_one(x, x);
  const CMat2 img = sigma_of(d * PauliVector(1, 0.2, -0.3, 0.1));
  const auto e = Eigen::SelfAdjointEigenSolver<CMat2>(img).eigenvalues();
  ASSERT_NEAR(e(0), 0, 1e-14);
  ASSERT_GT(e(1), 0);

  Rng rng(Seed{5});
  for (int t = 0; t < 50; ++t) {
    const Mat4 r = delta_rank_one(rand_boundary_vector(rng), rand_boundary_vector(rng));
    ASSERT_EQ(Eigen::FullPivLU<Mat4>(r).rank(), 1);
  }
  ASSERT_THROW(delta_rank_one(PauliVector(1, 0, 0, 0), x), DomainError);
}

TEST(cone, delta_rank_one_map_action) {
  Rng rng(Seed{6});
  const PauliVector u = rand_boundary_vector(rng), w = rand_boundary_vector(rng);
  const Mat4 d = delta_rank_one(u, w);
  const CMat2 x = random_hermitian2();
  const CMat2 expect = (sigma_of(w) * x).trace() * sigma_of(u);
  ASSERT_LE((apply_map(d, x) - expect).norm(), 1e-13 * (1 + x.norm()));
}
