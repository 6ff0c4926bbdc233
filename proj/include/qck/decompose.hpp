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

#ifndef QCK_DECOMPOSE_HPP
#define QCK_DECOMPOSE_HPP

#include "qck/cone.hpp"

namespace qck {

// Every positive qubit map splits as S = L1 + L2 o t with L1, L2 completely
// positive. In Choi space this is the feasibility problem
//
//   C(S) = D1 + PT(D2),   D1 >= 0,   D2 >= 0,
//
// solved over the Hermitian variable D1 with D2 = PT(C(S) - D1).

enum class DecompositionMethod { cp_fast_path, ccp_fast_path, dykstra, barrier };

const char* to_string(DecompositionMethod m);

struct DecomposeOptions {
  /// Stop once both D1 and D2 have min eigenvalue >= -tol.
  double tol = 1e-10;
  /// Shared cap on Dykstra iterations and barrier Newton steps.
  int max_iter = 10000;
  /// Positivity tolerance for the input check.
  double positivity_tol = 1e-9;
  /// Dykstra hands over to the barrier method when the cone residual fails
  /// to halve over this many iterations.
  int stall_window = 250;
  bool allow_barrier = true;
};

struct DecompositionResult {
  ChoiMatrix d1 = ChoiMatrix::Zero();  // Choi matrix of L1
  ChoiMatrix d2 = ChoiMatrix::Zero();  // Choi matrix of L2
  KrausSet kraus1;                     // L1
  KrausSet kraus2;                     // L2 o t (twist = true)
  double affine_residual = 0;          // |C(S) - d1 - PT(d2)|_F
  double cone_residual = 0;            // min eigenvalue over d1 and d2
  int iterations = 0;
  bool converged = false;
  DecompositionMethod method = DecompositionMethod::dykstra;
};

/// Thrown by decompose_stormer for maps that are not positive.
class NotPositiveError : public DomainError {
 public:
  explicit NotPositiveError(const PositivityResult& r);
  const PositivityResult& positivity() const { return result_; }

 private:
  PositivityResult result_;
};

/// Dykstra alternating projections between the PSD cone and
/// { X : PT(C(S) - X) >= 0 }, started from psd_project(C(S)/2). Maps that
/// are already CP or coCP take a fast path. If Dykstra stalls (thin
/// feasible sets make it sublinear) a log-barrier method maximizing the
/// common smallest eigenvalue of D1 and D2 finishes the job.
///
/// Throws NotPositiveError when p is not positive. On non-convergence the
/// result carries converged = false and the achieved residuals.
DecompositionResult decompose_stormer(const PiMatrix& p, const DecomposeOptions& opts = {});

struct DecompositionResiduals {
  double affine = 0;
  double cone = 0;
};

/// Recomputes both residuals from scratch.
DecompositionResiduals verify_decomposition(const PiMatrix& p, const ChoiMatrix& d1,
                                            const ChoiMatrix& d2);
DecompositionResiduals verify_decomposition(const PiMatrix& p, const DecompositionResult& r);

/// pi(L1) + pi(L2) * diag(1,1,-1,1) from the Kraus sets.
PiMatrix reconstruct_pi(const DecompositionResult& r);

}  // namespace qck

#endif  // QCK_DECOMPOSE_HPP
