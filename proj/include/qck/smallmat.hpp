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

#ifndef QCK_SMALLMAT_HPP
#define QCK_SMALLMAT_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qck {

using Complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

/// Raised when a kernel receives input outside its domain (non-Hermitian
/// matrix, non-PSD Choi matrix, off-boundary cone vector, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigen-decomposition of a Hermitian (or real symmetric) N x N matrix.
/// Eigenvalues ascend; column k of `vectors` belongs to `values[k]`.
template <typename Scalar, int N>
struct SymEigResult {
  Eigen::Matrix<double, N, 1> values;
  Eigen::Matrix<Scalar, N, N> vectors;
};

struct Svd3Result {
  Mat3 left;
  Vec3 singular_values;  // descending, nonnegative
  Mat3 right;
  int det_sign = 0;      // sign of det of the input; 0 when rank deficient
};

/// Cyclic Jacobi eigensolver for N <= 4. Throws DomainError("not Hermitian")
/// when the input departs from Hermiticity by more than 1e-12 relative to
/// its largest entry. The input is symmetrized before iterating.
///
/// Each eigenvector is normalized so its first entry of modulus above 1e-12
/// is real positive.
template <typename Scalar, int N>
SymEigResult<Scalar, N> herm_eig(const Eigen::Matrix<Scalar, N, N>& h);

SymEigResult<Complex, 2> herm_eig(const CMat2& h);
SymEigResult<Complex, 4> herm_eig(const CMat4& h);
SymEigResult<double, 3> sym_eig(const Mat3& h);
SymEigResult<double, 4> sym_eig(const Mat4& h);

/// Singular value decomposition of a real 3x3 matrix, y = left * diag(t) *
/// right^T, computed from the eigenvectors of y^T y with singular values
/// taken as |y v_k| and left vectors repaired from y v_k.
Svd3Result svd3(const Mat3& y);

/// Nearest positive semidefinite matrix in Frobenius norm (eigenvalue clip).
CMat2 psd_project(const CMat2& h);
CMat4 psd_project(const CMat4& h);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMat4& h);

/// Transpose on the first tensor factor: [[A,B],[C,D]] -> [[A,C],[B,D]].
CMat4 partial_transpose_first(const CMat4& c);

/// Schatten-1 norm t1 + t2 + t3.
double trace_norm3(const Mat3& y);

/// Largest singular value.
double operator_norm(const Mat3& y);
double operator_norm(const Mat4& y);

}  // namespace qck

#endif  // QCK_SMALLMAT_HPP
