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

#ifndef QCK_BATCH_HPP
#define QCK_BATCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "qck/classify.hpp"
#include "qck/decompose.hpp"
#include "qck/genrand.hpp"

namespace qck {

// Batch kernels fan out over independent maps with OpenMP. Item i always
// draws from child_seed(seed, i), so results do not depend on the thread
// count and the qck::serial versions reproduce them exactly.

enum class GenerateKind { sl2, unitary, positive, bistochastic, boundary };

const char* to_string(GenerateKind k);
/// Throws std::invalid_argument for unknown names.
GenerateKind parse_generate_kind(const std::string& name);

struct GeneratedItem {
  GenerateKind kind = GenerateKind::positive;
  Seed seed;                           // child seed the item was drawn from
  PiMatrix pi = PiMatrix::Zero();      // the map (rho(V), X -> U X U^*, ...)
  std::optional<CMat2> op;             // sl2 / unitary draws
  std::optional<PauliVector> vector;   // boundary draws; pi = x x^T
};

std::vector<GeneratedItem> generate_batch(GenerateKind kind, Seed seed, int count,
                                          int n_terms = 3);

struct DecomposeOutcome {
  std::optional<DecompositionResult> result;
  std::string error;  // set when decompose_stormer threw
};

std::vector<DecomposeOutcome> decompose_batch(const std::vector<PiMatrix>& maps,
                                              const DecomposeOptions& opts = {});

struct Delta1Check {
  double trace_norm = 0;  // trace norm of the Bloch block
  bool cp = false;
  bool ccp = false;
};

/// Trace norm of the Bloch block next to the CP and coCP verdicts.
std::vector<Delta1Check> delta1_batch(const std::vector<PiMatrix>& maps, double tol = 1e-9);

namespace serial {

std::vector<GeneratedItem> generate_batch(GenerateKind kind, Seed seed, int count,
                                          int n_terms = 3);
std::vector<DecomposeOutcome> decompose_batch(const std::vector<PiMatrix>& maps,
                                              const DecomposeOptions& opts = {});
std::vector<Delta1Check> delta1_batch(const std::vector<PiMatrix>& maps, double tol = 1e-9);

}  // namespace serial

}  // namespace qck

#endif  // QCK_BATCH_HPP
