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

#ifndef QCK_PAULI_HPP
#define QCK_PAULI_HPP

#include <array>
#include <vector>

#include "qck/smallmat.hpp"

namespace qck {

/// Coordinates (x0, x1, x2, x3) of a Hermitian 2x2 matrix in the normalized
/// Pauli basis sigma_0 = 1/sqrt2, sigma_i = pauli_i/sqrt2.
using PauliVector = Vec4;

/// Real 4x4 matrix p of a Hermitian-preserving map S on M2, fixed by
///   sigma(p x) = S(sigma(x))   for all real x.
/// Column mu holds the Pauli coordinates of S(sigma_mu), so composition of
/// maps is matrix multiplication: pi(S1 o S2) = pi(S1) pi(S2).
using PiMatrix = Mat4;

/// Choi matrix sum_ij E_ij (x) S(E_ij); the first tensor factor carries the
/// input index. Row 2i+a, column 2j+b holds S(E_ij)(a,b).
using ChoiMatrix = CMat4;

/// Kraus representation. With twist == false the map is
///   X -> sum_k w_k K_k X K_k^*,
/// with twist == true it is X -> sum_k w_k K_k X^t K_k^*.
/// Empty weights mean unit weights.
struct KrausSet {
  std::vector<CMat2> ops;
  std::vector<double> weights;
  bool twist = false;

  double weight(std::size_t k) const { return weights.empty() ? 1.0 : weights[k]; }
};

/// pi of the transposition map, diag(1, 1, -1, 1).
const Mat4& transpose_pi();

const std::array<CMat2, 4>& pauli_basis();

CMat2 sigma_of(const PauliVector& x);

/// Throws DomainError for non-Hermitian input (tolerance 1e-12).
PauliVector pauli_coords(const CMat2& a);

/// Complex coordinates Tr(sigma_mu a) of an arbitrary 2x2 matrix.
Eigen::Vector4cd complex_coords(const CMat2& a);

/// Builds pi from the images S(sigma_mu). Only the Hermitian part of each
/// image contributes.
PiMatrix pi_from_basis_action(const std::array<CMat2, 4>& images);

/// Applies the complex-linear extension of the map to any 2x2 matrix.
CMat2 apply_map(const PiMatrix& p, const CMat2& x);

ChoiMatrix choi_of(const PiMatrix& p);

/// Inverse of choi_of on Hermitian input.
PiMatrix pi_from_choi(const ChoiMatrix& c);

/// Thrown by kraus_from_choi when the Choi matrix has an eigenvalue below
/// the PSD tolerance.
class NotPsdError : public DomainError {
 public:
  explicit NotPsdError(double min_eig);
  double min_eigenvalue() const { return min_eig_; }

 private:
  double min_eig_;
};

/// Spectral Kraus extraction: one operator sqrt(l_k) * reshape(v_k) per
/// eigenvalue above the rank cutoff. Each operator's largest-modulus entry
/// is made real positive.
KrausSet kraus_from_choi(const ChoiMatrix& c, double psd_tol = 1e-9);

PiMatrix pi_from_kraus(const KrausSet& k);

/// p * diag(1, 1, -1, 1): the map S o t.
PiMatrix compose_with_transpose(const PiMatrix& p);

}  // namespace qck

#endif  // QCK_PAULI_HPP
