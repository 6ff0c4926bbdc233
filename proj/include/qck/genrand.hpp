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

#ifndef QCK_GENRAND_HPP
#define QCK_GENRAND_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qck/pauli.hpp"

namespace qck {

struct Seed {
  std::uint64_t value = 0;
};

/// Parses a decimal or 0x-prefixed hexadecimal seed. Throws
/// std::invalid_argument on malformed text.
Seed parse_seed(std::string_view text);

/// Child seed for stream `index`: splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15).
Seed child_seed(Seed seed, std::uint64_t index);

/// SplitMix64 stream. The generator, the double conversion and the Box-Muller
/// transform are fixed here so fixtures reproduce across platforms:
///   state += 0x9E3779B97F4A7C15; z = state;
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///   return z ^ (z >> 31);
///   uniform()  = (next_u64() >> 11) * 2^-53            in [0, 1)
///   gaussian() = sqrt(-2 ln(1 - u1)) * cos(2 pi u2), then the paired sin
///                value on the following call.
class Rng {
 public:
  explicit Rng(Seed seed) : state_(seed.value) {}

  std::uint64_t next_u64();
  double uniform();
  double gaussian();
  /// (g1 + i g2) / sqrt2, unit variance.
  Complex complex_gaussian();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

enum class TermKind { proper_lorentz, improper_lorentz, rank_one };

CMat2 rand_sl2(Rng& rng);
CMat2 rand_sl2(Seed seed);

CMat2 rand_unitary2(Rng& rng);
CMat2 rand_unitary2(Seed seed);

/// (1, n) with n a uniformly random unit vector.
PauliVector rand_boundary_vector(Rng& rng);
PauliVector rand_boundary_vector(Seed seed);

/// Complex Gaussian 2x2 matrix and its Hermitian part.
CMat2 rand_complex2(Rng& rng);
CMat2 rand_hermitian2(Rng& rng);

struct PositiveMapSample {
  PiMatrix pi;
  std::vector<TermKind> kinds;
  std::vector<double> weights;
};

/// sum_i w_i T_i / (T_i)_00 with Dirichlet(1, ..., 1) weights and each T_i
/// drawn uniformly among rho(V), rho(V) J and u w^T.
PositiveMapSample sample_positive_map(Rng& rng, int n_terms);
PiMatrix rand_positive_map(Seed seed, int n_terms);

/// Block form (1 (+) Y) with Y Gaussian rescaled to operator norm `op_norm`,
/// or to a uniform norm in (0, 1] when none is given.
PiMatrix rand_bistochastic(Rng& rng, std::optional<double> op_norm = std::nullopt);
PiMatrix rand_bistochastic(Seed seed, std::optional<double> op_norm = std::nullopt);

}  // namespace qck

#endif  // QCK_GENRAND_HPP
