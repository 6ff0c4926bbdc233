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

#include <algorithm>
#include <cmath>
#include <limits>

namespace qck {

const Mat4& minkowski_metric() {
  static const Mat4 eta = Vec4(1, -1, -1, -1).asDiagonal();
  return eta;
}

const char* to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::interior: return "interior";
    case ConeStatus::boundary: return "boundary";
    case ConeStatus::outside: return "outside";
  }
  return "outside";
}

ConeClassification classify_vector(const PauliVector& x, double tol) {
  ConeClassification out;
  out.margin = x(0) - x.tail<3>().norm();
  if (std::abs(out.margin) <= tol) {
    out.status = ConeStatus::boundary;
  } else {
    out.status = out.margin > 0 ? ConeStatus::interior : ConeStatus::outside;
  }
  return out;
}

TrustRegionResult trs_min_sphere(const Mat3& m, const Vec3& v, double c) {
  const auto eig = sym_eig(Mat3((m + m.transpose()) / 2.0));
  const Vec3 lambda = eig.values;
  const Vec3 g = eig.vectors.transpose() * v;

  const double scale =
      std::max({lambda.cwiseAbs().maxCoeff(), g.norm(), std::numeric_limits<double>::min()});
  Vec3 gap;
  for (int i = 0; i < 3; ++i) {
    gap(i) = lambda(i) - lambda(0);
    if (gap(i) <= 1e-12 * scale) gap(i) = 0;
  }

  double bottom_weight = 0;
  double outer_weight = 0;
  for (int i = 0; i < 3; ++i) {
    if (gap(i) == 0) {
      bottom_weight += g(i) * g(i);
    } else {
      outer_weight += g(i) * g(i) / (gap(i) * gap(i));
    }
  }

  TrustRegionResult out;
  Vec3 y = Vec3::Zero();
  if (std::sqrt(bottom_weight) <= 1e-13 * scale && outer_weight <= 1.0) {
    // Hard case: the multiplier sits at the bottom eigenvalue and the free
    // bottom-eigenspace component fills up the unit norm.
    out.hard_case = true;
    out.multiplier = lambda(0);
    bool filled = false;
    for (int i = 0; i < 3; ++i) {
      if (gap(i) != 0) {
        y(i) = -g(i) / gap(i);
      } else if (!filled) {
        y(i) = std::sqrt(std::max(0.0, 1.0 - outer_weight));
        filled = true;
      }
    }
  } else {
    // sum g_i^2 / (gap_i + t)^2 = 1 is decreasing in t > 0 with the root in
    // [max(0, |g| - spread), |g|].
    auto secular = [&](double t) {
      double s = 0;
      for (int i = 0; i < 3; ++i) {
        const double d = gap(i) + t;
        s += g(i) * g(i) / (d * d);
      }
      return s - 1.0;
    };
    double hi = g.norm();
    double lo = std::max(0.0, hi - gap(2));
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (secular(mid) > 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double t = hi;
    out.multiplier = lambda(0) - t;
    for (int i = 0; i < 3; ++i) y(i) = -g(i) / (gap(i) + t);
  }

  Vec3 u = eig.vectors * y;
  const double n = u.norm();
  u = n > 0 ? Vec3(u / n) : Vec3(eig.vectors.col(0));
  out.argmin_u = u;
  out.min_value = u.dot(m * u) + 2.0 * v.dot(u) + c;
  return out;
}

PositivityResult is_positive_map(const PiMatrix& p, double tol) {
  const double a = p(0, 0);
  const Vec3 b = p.block<1, 3>(0, 1).transpose();
  const Vec3 cv = p.block<3, 1>(1, 0);
  const Mat3 y = p.block<3, 3>(1, 1);

  // q(u) = (a + b.u)^2 - |c + Y u|^2 = u^T M u + 2 w.u + k
  const Mat3 m = b * b.transpose() - y.transpose() * y;
  const Vec3 w = a * b - y.transpose() * cv;
  const double k = a * a - cv.squaredNorm();
  const auto trs = trs_min_sphere(m, w, k);

  PositivityResult out;
  out.min_quadratic = trs.min_value;
  out.time_margin = a - b.norm();
  out.positive = out.time_margin >= -tol && out.min_quadratic >= -tol;

  Vec3 u = trs.argmin_u;
  if (out.time_margin < -tol) u = -b.normalized();
  out.witness << 1.0, u;
  return out;
}

double image_margin(const PiMatrix& p, const Vec3& u) {
  Vec4 x;
  x << 1.0, u;
  const Vec4 image = p * x;
  return image(0) - image.tail<3>().norm();
}

std::optional<ThetaFactorization> theta_membership(const PiMatrix& p, double tol) {
  const Mat4& eta = minkowski_metric();
  const Mat4 gram = p.transpose() * eta * p;
  const double r2 = gram(0, 0);
  if (!(r2 > 0) || !(p(0, 0) > 0)) return std::nullopt;
  if ((gram - r2 * eta).cwiseAbs().maxCoeff() > tol * r2) return std::nullopt;

  ThetaFactorization out;
  out.r = std::sqrt(r2);
  out.o = p / out.r;
  out.proper = out.o.determinant() > 0;
  return out;
}

PiMatrix spinor_rho(const CMat2& v) {
  if (std::abs(v.determinant() - Complex(1.0)) > 1e-10) {
    throw DomainError("spinor_rho: det V must be 1");
  }
  KrausSet k;
  k.ops.push_back(v);
  return pi_from_kraus(k);
}

CMat2 inverse_spinor(const Mat4& o, double tol) {
  const auto theta = theta_membership(o, tol);
  if (!theta || std::abs(theta->r - 1.0) > tol || !theta->proper) {
    throw DomainError("inverse_spinor: input is not a proper orthochronous Lorentz matrix");
  }

  const auto eig = herm_eig(choi_of(o));
  const Eigen::Vector4cd vec = std::sqrt(std::max(0.0, eig.values(3))) * eig.vectors.col(3);
  CMat2 v;
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a) v(a, i) = vec(2 * i + a);
  v /= std::sqrt(v.determinant());

  const double tr = v.trace().real();
  bool flip = tr < -1e-12;
  if (std::abs(tr) <= 1e-12) {
    // Row-major scan; Eigen storage is column-major.
    const Eigen::Matrix<Complex, 2, 2, Eigen::RowMajor> rows = v;
    for (int i = 0; i < 4; ++i) {
      const Complex z = rows.data()[i];
      if (std::abs(z) <= 1e-12) continue;
      flip = std::abs(z.real()) > 1e-12 ? z.real() < 0 : z.imag() < 0;
      break;
    }
  }
  return flip ? CMat2(-v) : v;
}

PiMatrix delta_rank_one(const PauliVector& u, const PauliVector& w) {
  if (classify_vector(u).status != ConeStatus::boundary ||
      classify_vector(w).status != ConeStatus::boundary) {
    throw DomainError("delta_rank_one: inputs must lie on the cone boundary");
  }
  return u * w.transpose();
}

}  // namespace qck
