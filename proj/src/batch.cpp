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

#include "qck/batch.hpp"

#include <exception>
#include <stdexcept>

namespace qck {

const char* to_string(GenerateKind k) {
  switch (k) {
    case GenerateKind::sl2: return "sl2";
    case GenerateKind::unitary: return "unitary";
    case GenerateKind::positive: return "positive";
    case GenerateKind::bistochastic: return "bistochastic";
    case GenerateKind::boundary: return "boundary";
  }
  return "positive";
}

GenerateKind parse_generate_kind(const std::string& name) {
  for (auto k : {GenerateKind::sl2, GenerateKind::unitary, GenerateKind::positive,
                 GenerateKind::bistochastic, GenerateKind::boundary}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown kind: " + name);
}

namespace {

GeneratedItem generate_one(GenerateKind kind, Seed seed, int n_terms) {
  GeneratedItem item;
  item.kind = kind;
  item.seed = seed;
  Rng rng(seed);
  switch (kind) {
    case GenerateKind::sl2:
      item.op = rand_sl2(rng);
      item.pi = spinor_rho(*item.op);
      break;
    case GenerateKind::unitary:
      item.op = rand_unitary2(rng);
      item.pi = pi_from_kraus(KrausSet{{*item.op}, {}, false});
      break;
    case GenerateKind::positive:
      item.pi = sample_positive_map(rng, n_terms).pi;
      break;
    case GenerateKind::bistochastic:
      item.pi = rand_bistochastic(rng);
      break;
    case GenerateKind::boundary:
      item.vector = rand_boundary_vector(rng);
      item.pi = delta_rank_one(*item.vector, *item.vector);
      break;
  }
  return item;
}

DecomposeOutcome decompose_one(const PiMatrix& p, const DecomposeOptions& opts) {
  DecomposeOutcome out;
  try {
    out.result = decompose_stormer(p, opts);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

Delta1Check delta1_one(const PiMatrix& p, double tol) {
  Delta1Check c;
  c.trace_norm = trace_norm3(p.block<3, 3>(1, 1));
  c.cp = is_cp(p, tol).ok;
  c.ccp = is_ccp(p, tol).ok;
  return c;
}

}  // namespace

std::vector<GeneratedItem> generate_batch(GenerateKind kind, Seed seed, int count, int n_terms) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<GeneratedItem> out(count);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) {
    out[i] = generate_one(kind, child_seed(seed, i), n_terms);
  }
  return out;
}

std::vector<DecomposeOutcome> decompose_batch(const std::vector<PiMatrix>& maps,
                                              const DecomposeOptions& opts) {
  const int n = static_cast<int>(maps.size());
  std::vector<DecomposeOutcome> out(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) out[i] = decompose_one(maps[i], opts);
  return out;
}

std::vector<Delta1Check> delta1_batch(const std::vector<PiMatrix>& maps, double tol) {
  const int n = static_cast<int>(maps.size());
  std::vector<Delta1Check> out(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[i] = delta1_one(maps[i], tol);
  return out;
}

namespace serial {

std::vector<GeneratedItem> generate_batch(GenerateKind kind, Seed seed, int count, int n_terms) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<GeneratedItem> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(generate_one(kind, child_seed(seed, i), n_terms));
  return out;
}

std::vector<DecomposeOutcome> decompose_batch(const std::vector<PiMatrix>& maps,
                                              const DecomposeOptions& opts) {
  std::vector<DecomposeOutcome> out;
  out.reserve(maps.size());
  for (const auto& p : maps) out.push_back(decompose_one(p, opts));
  return out;
}

std::vector<Delta1Check> delta1_batch(const std::vector<PiMatrix>& maps, double tol) {
  std::vector<Delta1Check> out;
  out.reserve(maps.size());
  for (const auto& p : maps) out.push_back(delta1_one(p, tol));
  return out;
}

}  // namespace serial

}  // namespace qck
