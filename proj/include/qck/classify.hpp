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

#ifndef QCK_CLASSIFY_HPP
#define QCK_CLASSIFY_HPP

#include <optional>

#include "qck/cone.hpp"
#include "qck/decompose.hpp"
#include "qck/genrand.hpp"

namespace qck {

struct PsdCheck {
  bool ok = false;
  double min_eig = 0;
};

/// Complete positivity via the Choi matrix: min eigenvalue >= -tol.
PsdCheck is_cp(const PiMatrix& p, double tol = 1e-9);

/// Complete copositivity: is_cp(p * diag(1,1,-1,1)), i.e. the partially
/// transposed Choi matrix is PSD.
PsdCheck is_ccp(const PiMatrix& p, double tol = 1e-9);

/// k = 1 is positivity, k = 2 coincides with complete positivity on M2.
/// Other k throw DomainError.
bool is_k_positive(const PiMatrix& p, int k, double tol = 1e-9);

/// S(1) = 1: column 0 of p is e0.
bool is_unital(const PiMatrix& p, double tol = 1e-9);
/// Tr S(X) = Tr X: row 0 of p is e0^T.
bool is_trace_preserving(const PiMatrix& p, double tol = 1e-9);
/// Unital, trace preserving and positive.
bool is_bistochastic(const PiMatrix& p, double tol = 1e-9);

/// Lower-right 3x3 block Y of a bistochastic p = (1 (+) Y). Throws
/// DomainError for non-bistochastic input.
Mat3 f_map(const PiMatrix& p, double tol = 1e-9);

/// Y in conv SO(3): t1 <= 1 and t1 + t2 - sign(det Y) t3 <= 1, the t3 term
/// dropped when det Y = 0.
bool in_conv_so3(const Mat3& y, double tol = 1e-9);

/// Bistochastic maps that are CP and coCP: trace norm of f_map(p) <= 1.
bool in_delta1(const PiMatrix& p, double tol = 1e-9);

struct SchwarzWitness {
  CMat2 x;
  double violation = 0;  // -min eig of S(X*X) - S(X*) S(X)
};

/// Smallest eigenvalue of S(X*X) - S(X*) S(X).
double schwarz_defect(const PiMatrix& p, const CMat2& x);

/// Searches for a violation of the Kadison-Schwarz inequality. Tries the
/// matrix units, the Pauli basis and a few fixed normal matrices, then
/// `trials` complex Gaussian matrices drawn from child_seed(seed, i). The
/// worst violator is returned when its defect is below -1e-9.
///
/// Finding nothing does not prove the map is Schwarz. Throws DomainError
/// for non-unital maps.
std::optional<SchwarzWitness> schwarz_falsify(const PiMatrix& p, int trials, Seed seed);

/// max over X in {sigma_mu} of |S([P,X]) - [S(P), S(X)]|_F. Linearity
/// extends a zero residual to every X. Throws DomainError unless proj is a
/// rank-one orthogonal projection (within tol) and p is unital.
double commutator_condition(const PiMatrix& p, const CMat2& proj, double tol = 1e-10);

/// Rank-one projection (1 + n.pauli)/2 for a unit vector n.
CMat2 projection_from_direction(const Vec3& n);

struct ProjectionSearchResult {
  CMat2 projection;
  Vec3 direction;
  double residual = 0;      // |S(P)^2 - S(P)|_F
  double grid_spacing = 0;  // typical distance between grid nodes
};

double idempotent_residual(const PiMatrix& p, const CMat2& proj);

/// Minimizes |S(P)^2 - S(P)|_F over rank-one projections with a
/// Fibonacci-sphere grid followed by a shrinking pattern search.
ProjectionSearchResult idempotent_image_search(const PiMatrix& p, int grid_size = 4096,
                                               int refine_steps = 20);

/// pi of X -> A o X (entrywise product). Requires Hermitian A.
PiMatrix schur_multiplier_pi(const CMat2& a);

/// Whether X -> A o X is completely positive. Non-Hermitian A never gives
/// a Hermitian-preserving map and yields false.
bool schur_multiplier_cp(const CMat2& a);

struct UnitaryCertificate {
  CMat2 unitary;       // S(X) = U X U^*
  CMat2 source;        // P
  CMat2 target;        // Q = S(P)
  Complex block_datum; // S1 after rotating P, Q to diag(0, 1)
  double residual = 0; // max_mu |S(sigma_mu) - U sigma_mu U^*|_F
  /// The hypothesis that S is extremal among positive maps is not checked.
  bool extremality_assumed = true;
};

/// For a unital map, finds rank-one projections P, Q with S(P) = Q, rotates
/// both to diag(0, 1), reads off the block datum S1 and returns
/// U = diag(S1, 1) (rotated back) when |S1| = 1 and S is conjugation by U.
/// Returns nullopt when no projection pair exists, the map does not take
/// the block form, or |S1| != 1. Throws DomainError for non-unital maps.
std::optional<UnitaryCertificate> schwarz_unitary_certificate(const PiMatrix& p,
                                                              double tol = 1e-8);

struct AnalyzeOptions {
  double psd_tol = 1e-9;
  double affine_tol = 1e-8;
  double cone_tol = 1e-10;
  bool decompose = true;
  int max_iter = 10000;
  int schwarz_trials = 256;
  Seed seed{};
  int grid_size = 4096;
  int refine_steps = 20;
};

struct MapReport {
  bool positive = false;
  bool cp = false;
  bool ccp = false;
  bool bistochastic = false;
  bool unital = false;
  bool trace_preserving = false;
  std::optional<bool> in_delta1;
  bool decomposable = false;
  double min_choi_eig = 0;
  double min_pt_choi_eig = 0;
  std::optional<double> bloch_trace_norm;

  PositivityResult positivity;
  std::optional<ThetaFactorization> theta;
  std::optional<ProjectionSearchResult> projection;
  std::optional<SchwarzWitness> schwarz_witness;
  std::optional<UnitaryCertificate> unitary_certificate;
  std::optional<DecompositionResult> decomposition;
};

/// Runs every predicate and collects the certificates.
MapReport analyze_map(const PiMatrix& p, const AnalyzeOptions& opts = {});

}  // namespace qck

#endif  // QCK_CLASSIFY_HPP
