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

#ifndef QCK_CONE_HPP
#define QCK_CONE_HPP

#include <optional>

#include "qck/pauli.hpp"

namespace qck {

/// Lorentz cone L4 = { x : x0 >= |(x1, x2, x3)| }. Its elements are exactly
/// the Pauli coordinates of positive semidefinite 2x2 matrices.

/// Minkowski metric diag(1, -1, -1, -1). Not to be confused with
/// transpose_pi(), the improper element diag(1, 1, -1, 1).
const Mat4& minkowski_metric();

enum class ConeStatus { interior, boundary, outside };

const char* to_string(ConeStatus s);

struct ConeClassification {
  ConeStatus status = ConeStatus::outside;
  double margin = 0;  // x0 - |x_vec|
};

ConeClassification classify_vector(const PauliVector& x, double tol = 1e-10);

struct TrustRegionResult {
  double min_value = 0;
  Vec3 argmin_u = Vec3::UnitX();
  double multiplier = 0;  // lambda with (M - lambda I) u = -v
  bool hard_case = false;
};

/// Exact global minimum of u^T M u + 2 v.u + c over the unit sphere |u| = 1.
/// Solves the secular equation for the Lagrange multiplier below the
/// smallest eigenvalue of M; falls back to the hard case when v has no
/// component in the bottom eigenspace.
TrustRegionResult trs_min_sphere(const Mat3& m, const Vec3& v, double c);

struct PositivityResult {
  bool positive = false;
  /// Boundary vector (1, u*) where the image is closest to leaving L4. When
  /// `positive` is false, p * witness lies outside L4.
  PauliVector witness = PauliVector(1, 1, 0, 0);
  /// min over unit u of (a + b.u)^2 - |c + Y u|^2 for p = [[a, b^T], [c, Y]].
  double min_quadratic = 0;
  /// a - |b|: the time component of the image must stay nonnegative.
  double time_margin = 0;
};

/// Exact test of whether p maps L4 into itself (i.e. the map is positive).
PositivityResult is_positive_map(const PiMatrix& p, double tol = 1e-9);

/// (p x)_0 - |(p x)_vec| for x = (1, u). Negative means the image of the
/// boundary ray through u leaves the cone.
double image_margin(const PiMatrix& p, const Vec3& u);

struct ThetaFactorization {
  double r = 0;
  Mat4 o;             // orthochronous Lorentz transformation, o^T eta o = eta
  bool proper = true; // det o = +1
};

/// Membership in the group of operators mapping the cone boundary onto
/// itself: p^T eta p = r^2 eta with r > 0 and p00 > 0. The metric identity
/// is checked entrywise relative to r^2.
std::optional<ThetaFactorization> theta_membership(const PiMatrix& p, double tol = 1e-9);

/// Spinor map: sigma(rho(V) x) = V sigma(x) V^*. A group homomorphism
/// SL2(C) -> SO+(1,3), rho(V1 V2) = rho(V1) rho(V2). Requires
/// |det V - 1| <= 1e-10.
PiMatrix spinor_rho(const CMat2& v);

/// Recovers V with spinor_rho(V) = o from the rank-one Choi matrix of o.
/// det V = 1 and the sign is fixed by Re Tr V >= 0 (ties: first nonzero
/// entry in row-major order gets positive real part, or positive imaginary
/// part if its real part vanishes). Throws DomainError unless o is proper
/// orthochronous within tol.
CMat2 inverse_spinor(const Mat4& o, double tol = 1e-9);

/// Rank-one cone operator u w^T for u, w on the cone boundary. The map is
/// X -> Tr(sigma(w) X) sigma(u). Throws DomainError when an input is off the
/// boundary by more than 1e-10.
PiMatrix delta_rank_one(const PauliVector& u, const PauliVector& w);

}  // namespace qck

#endif  // QCK_CONE_HPP
