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

#include "qck/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace qck {

namespace {

constexpr double kSchwarzThreshold = 1e-9;
constexpr double kUnitalTol = 1e-9;

CMat2 unit(int i, int j) {
  CMat2 e = CMat2::Zero();
  e(i, j) = 1.0;
  return e;
}

void require_unital(const PiMatrix& p, const char* what) {
  if (!is_unital(p, kUnitalTol)) throw DomainError(std::string(what) + ": map is not unital");
}

// Unit vectors spanning the tangent plane at n.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& n) {
  const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 a = (seed - seed.dot(n) * n).normalized();
  return {a, n.cross(a)};
}

Vec3 fibonacci_node(int i, int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * i;
  return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

// Columns are eigenvectors of the rank-one projection, eigenvalue 0 first,
// so w diag(0, 1) w^* = proj.
CMat2 projection_frame(const CMat2& proj) {
  return herm_eig(CMat2((proj + proj.adjoint()) / 2.0)).vectors;
}

bool is_rank_one_projection(const CMat2& q, double tol) {
  return (q - q.adjoint()).norm() <= tol && (q * q - q).norm() <= tol &&
         std::abs(q.trace() - 1.0) <= tol;
}

}  // namespace

PsdCheck is_cp(const PiMatrix& p, double tol) {
  const double m = min_eigenvalue(choi_of(p));
  return {m >= -tol, m};
}

PsdCheck is_ccp(const PiMatrix& p, double tol) {
  const double m = min_eigenvalue(partial_transpose_first(choi_of(p)));
  return {m >= -tol, m};
}

bool is_k_positive(const PiMatrix& p, int k, double tol) {
  switch (k) {
    case 1: return is_positive_map(p, tol).positive;
    case 2: return is_cp(p, tol).ok;
    default: throw DomainError("k-positivity is only supported for k = 1, 2");
  }
}

bool is_unital(const PiMatrix& p, double tol) {
  return (p.col(0) - Vec4::UnitX()).cwiseAbs().maxCoeff() <= tol;
}

bool is_trace_preserving(const PiMatrix& p, double tol) {
  return (p.row(0).transpose() - Vec4::UnitX()).cwiseAbs().maxCoeff() <= tol;
}

bool is_bistochastic(const PiMatrix& p, double tol) {
  return is_unital(p, tol) && is_trace_preserving(p, tol) && is_positive_map(p, tol).positive;
}

Mat3 f_map(const PiMatrix& p, double tol) {
  if (!is_bistochastic(p, tol)) throw DomainError("f_map: map is not bistochastic");
  return p.block<3, 3>(1, 1);
}

bool in_conv_so3(const Mat3& y, double tol) {
  const auto s = svd3(y);
  const auto& t = s.singular_values;
  return t(0) <= 1.0 + tol && t(0) + t(1) - s.det_sign * t(2) <= 1.0 + tol;
}

bool in_delta1(const PiMatrix& p, double tol) {
  return trace_norm3(f_map(p, tol)) <= 1.0 + tol;
}

double schwarz_defect(const PiMatrix& p, const CMat2& x) {
  const CMat2 sx = apply_map(p, x);
  const CMat2 d = apply_map(p, CMat2(x.adjoint() * x)) - sx.adjoint() * sx;
  return herm_eig(CMat2((d + d.adjoint()) / 2.0)).values(0);
}

std::optional<SchwarzWitness> schwarz_falsify(const PiMatrix& p, int trials, Seed seed) {
  require_unital(p, "schwarz_falsify");

  std::vector<CMat2> fixed;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) fixed.push_back(unit(i, j));
  for (const auto& s : pauli_basis()) fixed.push_back(s);
  const Complex i1(0, 1);
  CMat2 m;
  m << 1.0, 0.0, 0.0, i1;
  fixed.push_back(m);
  m << 1.0, 1.0, 1.0, -1.0;
  fixed.push_back(m);
  m << 0.0, -i1, i1, 2.0;
  fixed.push_back(m);
  m << 1.0, i1, -i1, 1.0;
  fixed.push_back(m);

  SchwarzWitness best;
  double best_defect = std::numeric_limits<double>::infinity();
  for (const auto& x : fixed) {
    const double d = schwarz_defect(p, x);
    if (d < best_defect) {
      best_defect = d;
      best.x = x;
    }
  }

  const int n = std::max(trials, 0);
  std::vector<double> defects(n);
  std::vector<CMat2> samples(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    samples[i] = rand_complex2(rng);
    defects[i] = schwarz_defect(p, samples[i]);
  }
  for (int i = 0; i < n; ++i) {
    if (defects[i] < best_defect) {
      best_defect = defects[i];
      best.x = samples[i];
    }
  }

  if (!(best_defect < -kSchwarzThreshold)) return std::nullopt;
  best.violation = -best_defect;
  return best;
}

double commutator_condition(const PiMatrix& p, const CMat2& proj, double tol) {
  if (!is_rank_one_projection(proj, tol)) {
    throw DomainError("commutator_condition: not a rank-one projection");
  }
  require_unital(p, "commutator_condition");

  const CMat2 sp = apply_map(p, proj);
  double worst = 0;
  for (const auto& x : pauli_basis()) {
    const CMat2 sx = apply_map(p, x);
    const CMat2 lhs = apply_map(p, CMat2(proj * x - x * proj));
    worst = std::max(worst, (lhs - (sp * sx - sx * sp)).norm());
  }
  return worst;
}

CMat2 projection_from_direction(const Vec3& n) {
  const Vec3 u = n.normalized();
  PauliVector x;
  x << 1.0, u;
  return sigma_of(x / std::numbers::sqrt2);
}

double idempotent_residual(const PiMatrix& p, const CMat2& proj) {
  const CMat2 q = apply_map(p, proj);
  return (q * q - q).norm();
}

ProjectionSearchResult idempotent_image_search(const PiMatrix& p, int grid_size,
                                               int refine_steps) {
  const int n = std::max(grid_size, 1);
  std::vector<double> values(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    values[i] = idempotent_residual(p, projection_from_direction(fibonacci_node(i, n)));
  }
  const auto it = std::min_element(values.begin(), values.end());
  Vec3 dir = fibonacci_node(static_cast<int>(it - values.begin()), n);
  double best = *it;

  const double spacing = std::sqrt(4.0 * std::numbers::pi / n);
  double step = spacing;
  for (int k = 0; k < refine_steps; ++k) {
    const auto [a, b] = tangent_frame(dir);
    bool moved = false;
    for (const Vec3& d : {a, Vec3(-a), b, Vec3(-b)}) {
      const Vec3 cand = (dir + step * d).normalized();
      const double v = idempotent_residual(p, projection_from_direction(cand));
      if (v < best) {
        best = v;
        dir = cand;
        moved = true;
        break;
      }
    }
    if (!moved) step /= 2;
  }

  ProjectionSearchResult out;
  out.direction = dir;
  out.projection = projection_from_direction(dir);
  out.residual = best;
  out.grid_spacing = spacing;
  return out;
}

PiMatrix schur_multiplier_pi(const CMat2& a) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("schur_multiplier_pi: multiplier is not Hermitian");
  }
  std::array<CMat2, 4> images;
  for (int mu = 0; mu < 4; ++mu) images[mu] = a.cwiseProduct(pauli_basis()[mu]);
  return pi_from_basis_action(images);
}

bool schur_multiplier_cp(const CMat2& a) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12) return false;
  return is_cp(schur_multiplier_pi(a), 1e-12).ok;
}

std::optional<UnitaryCertificate> schwarz_unitary_certificate(const PiMatrix& p, double tol) {
  require_unital(p, "schwarz_unitary_certificate");

  CMat2 src = unit(1, 1);
  CMat2 dst = apply_map(p, src);
  if (!is_rank_one_projection(dst, tol)) {
    const auto search = idempotent_image_search(p);
    src = search.projection;
    dst = apply_map(p, src);
    if (!is_rank_one_projection(dst, tol)) return std::nullopt;
  }

  const CMat2 wp = projection_frame(src);
  const CMat2 wq = projection_frame(dst);
  auto rotated = [&](const CMat2& x) -> CMat2 {
    return wq.adjoint() * apply_map(p, CMat2(wp * x * wp.adjoint())) * wq;
  };

  // Block form: diagonal units fixed, E12 sent to a multiple of itself.
  const CMat2 s12 = rotated(unit(0, 1));
  const Complex s1 = s12(0, 1);
  if ((rotated(unit(0, 0)) - unit(0, 0)).norm() > tol) return std::nullopt;
  if ((rotated(unit(1, 1)) - unit(1, 1)).norm() > tol) return std::nullopt;
  if ((s12 - s1 * unit(0, 1)).norm() > tol) return std::nullopt;

  // Schur complement of [[1, S1], [conj S1, 1]], sampled along unit u.
  for (int k = 0; k < 16; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 16;
    const Eigen::Vector2cd u(std::cos(th), std::polar(1.0, 0.5 * th) * std::sin(th));
    CMat2 block;
    block << 1.0, s1, std::conj(s1), 1.0;
    if ((u.adjoint() * block * u)(0).real() < -tol) return std::nullopt;
  }
  if (std::abs(std::abs(s1) - 1.0) > tol) return std::nullopt;

  UnitaryCertificate cert;
  cert.source = src;
  cert.target = dst;
  cert.block_datum = s1;
  CMat2 d = CMat2::Identity();
  d(0, 0) = s1 / std::abs(s1);
  cert.unitary = wq * d * wp.adjoint();
  double worst = 0;
  for (const auto& x : pauli_basis()) {
    worst = std::max(
        worst, (apply_map(p, x) - cert.unitary * x * cert.unitary.adjoint()).norm());
  }
  cert.residual = worst;
  if (worst > tol) return std::nullopt;
  return cert;
}

MapReport analyze_map(const PiMatrix& p, const AnalyzeOptions& opts) {
  MapReport r;
  r.positivity = is_positive_map(p, opts.psd_tol);
  r.positive = r.positivity.positive;

  const auto cp = is_cp(p, opts.psd_tol);
  const auto ccp = is_ccp(p, opts.psd_tol);
  r.cp = cp.ok;
  r.ccp = ccp.ok;
  r.min_choi_eig = cp.min_eig;
  r.min_pt_choi_eig = ccp.min_eig;

  r.unital = is_unital(p, opts.psd_tol);
  r.trace_preserving = is_trace_preserving(p, opts.psd_tol);
  r.bistochastic = r.unital && r.trace_preserving && r.positive;
  if (r.bistochastic) {
    r.bloch_trace_norm = trace_norm3(p.block<3, 3>(1, 1));
    r.in_delta1 = *r.bloch_trace_norm <= 1.0 + opts.psd_tol;
  }
  r.decomposable = r.positive;

  r.theta = theta_membership(p, opts.psd_tol);
  r.projection = idempotent_image_search(p, opts.grid_size, opts.refine_steps);
  if (r.unital) {
    r.schwarz_witness = schwarz_falsify(p, opts.schwarz_trials, opts.seed);
    r.unitary_certificate = schwarz_unitary_certificate(p, opts.affine_tol);
  }

  if (opts.decompose && r.positive) {
    DecomposeOptions d;
    d.tol = opts.cone_tol;
    d.max_iter = opts.max_iter;
    d.positivity_tol = opts.psd_tol;
    r.decomposition = decompose_stormer(p, d);
  }
  return r;
}

}  // namespace qck
