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

#include "qck/decompose.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace qck {

const char* to_string(DecompositionMethod m) {
  switch (m) {
    case DecompositionMethod::cp_fast_path: return "cp_fast_path";
    case DecompositionMethod::ccp_fast_path: return "ccp_fast_path";
    case DecompositionMethod::dykstra: return "dykstra";
    case DecompositionMethod::barrier: return "barrier";
  }
  return "dykstra";
}

NotPositiveError::NotPositiveError(const PositivityResult& r)
    : DomainError("not a positive map"), result_(r) {}

namespace {

constexpr double kAffineTol = 1e-8;

// Orthonormal basis (P_i (x) P_j) / 2 of Hermitian 4x4 matrices under
// <A, B> = Re Tr(A B).
const std::array<CMat4, 16>& hermitian_basis() {
  static const std::array<CMat4, 16> basis = [] {
    std::array<CMat4, 16> out;
    std::array<CMat2, 4> paulis;
    const double s2 = std::sqrt(2.0);
    for (int k = 0; k < 4; ++k) paulis[k] = pauli_basis()[k] * s2;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CMat4 m;
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) m.block<2, 2>(2 * r, 2 * c) = paulis[i](r, c) * paulis[j];
        out[4 * i + j] = m / 2.0;
      }
    }
    return out;
  }();
  return basis;
}

double min_eig_pair(const CMat4& d1, const CMat4& d2) {
  return std::min(min_eigenvalue(d1), min_eigenvalue(d2));
}

struct BarrierOutcome {
  CMat4 d1;
  int newton_steps = 0;
};

// Maximizes t subject to D1 - t I >= 0 and PT(C - D1) - t I >= 0 by a
// log-barrier path-following method. Variables: 16 coordinates of D1 in
// hermitian_basis() followed by t.
BarrierOutcome barrier_solve(const CMat4& c_in, const CMat4& start, double tol, int budget) {
  using Vec17 = Eigen::Matrix<double, 17, 1>;
  using Mat17 = Eigen::Matrix<double, 17, 17>;

  const double scale = std::max(c_in.norm(), std::numeric_limits<double>::min());
  const CMat4 c = c_in / scale;
  const CMat4 pt_c = partial_transpose_first(c);
  const double target = tol / scale;
  const auto& basis = hermitian_basis();
  const CMat4 id = CMat4::Identity();

  std::array<CMat4, 17> a1;
  std::array<CMat4, 17> a2;
  for (int k = 0; k < 16; ++k) {
    a1[k] = basis[k];
    a2[k] = -partial_transpose_first(basis[k]);
  }
  a1[16] = -id;
  a2[16] = -id;

  auto d1_of = [&](const Vec17& z) {
    CMat4 d = CMat4::Zero();
    for (int k = 0; k < 16; ++k) d += z(k) * basis[k];
    return d;
  };
  auto slacks = [&](const Vec17& z, CMat4& f1, CMat4& f2) {
    const CMat4 d1 = d1_of(z);
    f1 = d1 - z(16) * id;
    f2 = pt_c - partial_transpose_first(d1) - z(16) * id;
  };

  Vec17 z;
  const CMat4 d0 = start / scale;
  for (int k = 0; k < 16; ++k) z(k) = (basis[k] * d0).trace().real();
  {
    const CMat4 d1 = d1_of(z);
    z(16) = min_eig_pair(d1, pt_c - partial_transpose_first(d1)) - 1.0;
  }

  BarrierOutcome out;
  double s = 1.0;
  auto objective = [&](const Vec17& zz) {
    CMat4 f1, f2;
    slacks(zz, f1, f2);
    Eigen::LLT<CMat4> l1(f1), l2(f2);
    if (l1.info() != Eigen::Success || l2.info() != Eigen::Success) {
      return std::numeric_limits<double>::infinity();
    }
    double logdet = 0;
    for (int i = 0; i < 4; ++i) {
      const double x1 = l1.matrixLLT()(i, i).real();
      const double x2 = l2.matrixLLT()(i, i).real();
      if (!(x1 > 0) || !(x2 > 0)) return std::numeric_limits<double>::infinity();
      logdet += 2.0 * (std::log(x1) + std::log(x2));
    }
    return -s * zz(16) - logdet;
  };

  for (int outer = 0; outer < 60 && out.newton_steps < budget; ++outer) {
    for (int inner = 0; inner < 100 && out.newton_steps < budget; ++inner) {
      CMat4 f1, f2;
      slacks(z, f1, f2);
      const CMat4 inv1 = f1.llt().solve(id);
      const CMat4 inv2 = f2.llt().solve(id);
      std::array<CMat4, 17> x1;
      std::array<CMat4, 17> x2;
      for (int k = 0; k < 17; ++k) {
        x1[k] = inv1 * a1[k];
        x2[k] = inv2 * a2[k];
      }
      Vec17 g;
      Mat17 h;
      for (int k = 0; k < 17; ++k) {
        g(k) = -x1[k].trace().real() - x2[k].trace().real();
        for (int l = k; l < 17; ++l) {
          const double v = (x1[k].cwiseProduct(x1[l].transpose())).sum().real() +
                           (x2[k].cwiseProduct(x2[l].transpose())).sum().real();
          h(k, l) = v;
          h(l, k) = v;
        }
      }
      g(16) -= s;

      const Vec17 dz = -h.ldlt().solve(g);
      const double decrement = -g.dot(dz);
      if (!(decrement / 2 > 1e-10)) break;

      const double f0 = objective(z);
      double step = 1.0;
      while (objective(z + step * dz) > f0 - 0.25 * step * decrement && step > 1e-12) step *= 0.5;
      if (step <= 1e-12) break;
      z += step * dz;
      ++out.newton_steps;
    }

    const CMat4 d1 = d1_of(z);
    if (min_eig_pair(d1, pt_c - partial_transpose_first(d1)) >= -target) break;
    s *= 10.0;
    if (s > 1e18) break;
  }

  out.d1 = d1_of(z) * scale;
  return out;
}

void finish(const PiMatrix& p, DecompositionResult& r, double tol) {
  r.d1 = (r.d1 + r.d1.adjoint()) / 2.0;
  r.d2 = (r.d2 + r.d2.adjoint()) / 2.0;
  const auto res = verify_decomposition(p, r.d1, r.d2);
  r.affine_residual = res.affine;
  r.cone_residual = res.cone;
  r.converged = res.cone >= -tol && res.affine <= kAffineTol;

  const double kraus_tol = std::max(1e-9, -res.cone);
  r.kraus1 = kraus_from_choi(r.d1, kraus_tol);
  r.kraus2 = kraus_from_choi(r.d2, kraus_tol);
  r.kraus1.twist = false;
  r.kraus2.twist = true;
}

}  // namespace

DecompositionResult decompose_stormer(const PiMatrix& p, const DecomposeOptions& opts) {
  const auto positivity = is_positive_map(p, opts.positivity_tol);
  if (!positivity.positive) throw NotPositiveError(positivity);

  const ChoiMatrix c = choi_of(p);
  const ChoiMatrix pt_c = partial_transpose_first(c);
  DecompositionResult r;

  if (min_eigenvalue(c) >= -opts.tol) {
    r.method = DecompositionMethod::cp_fast_path;
    r.d1 = c;
    finish(p, r, opts.tol);
    return r;
  }
  if (min_eigenvalue(pt_c) >= -opts.tol) {
    r.method = DecompositionMethod::ccp_fast_path;
    r.d2 = pt_c;
    finish(p, r, opts.tol);
    return r;
  }

  // Dykstra: x alternates between the PSD cone (correction P) and the set
  // {X : PT(C - X) >= 0} (correction Q). The second projection is
  // C - PT(psd_project(PT(C - X))) because PT is a Frobenius isometry.
  CMat4 x = psd_project(CMat4(c / 2.0));
  CMat4 corr_p = CMat4::Zero();
  CMat4 corr_q = CMat4::Zero();
  CMat4 z2 = partial_transpose_first(CMat4(c - x));
  double checkpoint = std::numeric_limits<double>::infinity();
  bool converged = false;
  int k = 0;
  while (k < opts.max_iter) {
    ++k;
    const CMat4 y = psd_project(CMat4(x + corr_p));
    corr_p = x + corr_p - y;
    const CMat4 shifted = y + corr_q;
    z2 = psd_project(partial_transpose_first(CMat4(c - shifted)));
    x = c - partial_transpose_first(z2);
    corr_q = shifted - x;

    const double r_min = min_eigenvalue(x);
    if (r_min >= -opts.tol) {
      converged = true;
      break;
    }
    if (opts.stall_window > 0 && k % opts.stall_window == 0) {
      const double deficit = -r_min;
      if (deficit > 0.5 * checkpoint) break;
      checkpoint = deficit;
    }
  }

  r.iterations = k;
  r.method = DecompositionMethod::dykstra;
  // Newton steps count against the same iteration cap.
  if (converged || !opts.allow_barrier || k >= opts.max_iter) {
    r.d1 = x;
    r.d2 = z2;
  } else {
    const auto polished = barrier_solve(c, x, opts.tol, opts.max_iter - k);
    r.method = DecompositionMethod::barrier;
    r.iterations += polished.newton_steps;
    r.d1 = polished.d1;
    r.d2 = partial_transpose_first(CMat4(c - polished.d1));
  }
  finish(p, r, opts.tol);
  return r;
}

DecompositionResiduals verify_decomposition(const PiMatrix& p, const ChoiMatrix& d1,
                                            const ChoiMatrix& d2) {
  const ChoiMatrix c = choi_of(p);
  DecompositionResiduals out;
  out.affine = (c - d1 - partial_transpose_first(d2)).norm();
  // Symmetrize so slightly non-Hermitian input still yields a spectrum.
  out.cone = std::min(min_eigenvalue(CMat4((d1 + d1.adjoint()) / 2.0)),
                      min_eigenvalue(CMat4((d2 + d2.adjoint()) / 2.0)));
  return out;
}

DecompositionResiduals verify_decomposition(const PiMatrix& p, const DecompositionResult& r) {
  return verify_decomposition(p, r.d1, r.d2);
}

PiMatrix reconstruct_pi(const DecompositionResult& r) {
  return pi_from_kraus(r.kraus1) + pi_from_kraus(r.kraus2);
}

}  // namespace qck
