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

#include "qck/pauli.hpp"

#include <cmath>
#include <string>

namespace qck {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::array<CMat2, 4> make_basis() {
  const Complex i(0, 1);
  std::array<CMat2, 4> b;
  b[0] << 1, 0, 0, 1;
  b[1] << 0, 1, 1, 0;
  b[2] << 0, -i, i, 0;
  b[3] << 1, 0, 0, -1;
  for (auto& m : b) m *= kInvSqrt2;
  return b;
}

// Hermitian-part coordinates.
Vec4 real_coords(const CMat2& a) { return complex_coords(a).real(); }

// pi of X -> K X K^*.
Mat4 conjugation_pi(const CMat2& k) {
  const auto& basis = pauli_basis();
  Mat4 p;
  for (int mu = 0; mu < 4; ++mu) {
    p.col(mu) = real_coords(k * basis[mu] * k.adjoint());
  }
  return p;
}

}  // namespace

const std::array<CMat2, 4>& pauli_basis() {
  static const std::array<CMat2, 4> basis = make_basis();
  return basis;
}

const Mat4& transpose_pi() {
  static const Mat4 j = Vec4(1, 1, -1, 1).asDiagonal();
  return j;
}

CMat2 sigma_of(const PauliVector& x) {
  const auto& b = pauli_basis();
  return x(0) * b[0] + x(1) * b[1] + x(2) * b[2] + x(3) * b[3];
}

Eigen::Vector4cd complex_coords(const CMat2& a) {
  const auto& b = pauli_basis();
  Eigen::Vector4cd c;
  for (int mu = 0; mu < 4; ++mu) c(mu) = (b[mu] * a).trace();
  return c;
}

PauliVector pauli_coords(const CMat2& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("not Hermitian");
  }
  return real_coords(a);
}

PiMatrix pi_from_basis_action(const std::array<CMat2, 4>& images) {
  PiMatrix p;
  for (int mu = 0; mu < 4; ++mu) p.col(mu) = real_coords(images[mu]);
  return p;
}

CMat2 apply_map(const PiMatrix& p, const CMat2& x) {
  const Eigen::Vector4cd image = p.cast<Complex>() * complex_coords(x);
  const auto& b = pauli_basis();
  return image(0) * b[0] + image(1) * b[1] + image(2) * b[2] + image(3) * b[3];
}

ChoiMatrix choi_of(const PiMatrix& p) {
  ChoiMatrix c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMat2 e = CMat2::Zero();
      e(i, j) = 1;
      c.block<2, 2>(2 * i, 2 * j) = apply_map(p, e);
    }
  }
  return c;
}

PiMatrix pi_from_choi(const ChoiMatrix& c) {
  const auto& b = pauli_basis();
  std::array<CMat2, 4> images;
  for (int mu = 0; mu < 4; ++mu) {
    CMat2 img = CMat2::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) img += b[mu](i, j) * c.block<2, 2>(2 * i, 2 * j);
    images[mu] = img;
  }
  return pi_from_basis_action(images);
}

NotPsdError::NotPsdError(double min_eig)
    : DomainError("Choi matrix is not positive semidefinite (min eigenvalue " +
                  std::to_string(min_eig) + ")"),
      min_eig_(min_eig) {}

KrausSet kraus_from_choi(const ChoiMatrix& c, double psd_tol) {
  const auto eig = herm_eig(c);
  if (eig.values(0) < -psd_tol) throw NotPsdError(eig.values(0));

  const double rank_cutoff = std::max(psd_tol, 1e-12 * std::max(1.0, eig.values(3)));
  KrausSet out;
  for (int k = 3; k >= 0; --k) {
    if (eig.values(k) <= rank_cutoff) continue;
    const Eigen::Vector4cd v = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    CMat2 op;
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a) op(a, i) = v(2 * i + a);

    // Fix the phase on the first entry (row-major) within 1e-12 of the
    // largest modulus.
    const double top = op.cwiseAbs().maxCoeff();
    for (int r = 0; r < 2; ++r) {
      bool done = false;
      for (int s = 0; s < 2; ++s) {
        const double mag = std::abs(op(r, s));
        if (mag >= top * (1.0 - 1e-12)) {
          op *= std::conj(op(r, s)) / mag;
          op(r, s) = mag;
          done = true;
          break;
        }
      }
      if (done) break;
    }
    out.ops.push_back(op);
  }
  return out;
}

PiMatrix pi_from_kraus(const KrausSet& k) {
  PiMatrix p = PiMatrix::Zero();
  for (std::size_t i = 0; i < k.ops.size(); ++i) p += k.weight(i) * conjugation_pi(k.ops[i]);
  return k.twist ? compose_with_transpose(p) : p;
}

PiMatrix compose_with_transpose(const PiMatrix& p) { return p * transpose_pi(); }

}  // namespace qck
