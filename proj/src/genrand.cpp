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

#include "qck/genrand.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qck/cone.hpp"

namespace qck {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Seed parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed seed: " + std::string(text));
  }
  return Seed{value};
}

Seed child_seed(Seed seed, std::uint64_t index) {
  return Seed{mix(seed.value + (index + 1) * kGolden)};
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::numbers::sqrt2;
}

std::uint64_t Rng::below(std::uint64_t n) {
  return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
}

CMat2 rand_complex2(Rng& rng) {
  CMat2 m;
  m << rng.complex_gaussian(), rng.complex_gaussian(), rng.complex_gaussian(),
      rng.complex_gaussian();
  return m;
}

CMat2 rand_hermitian2(Rng& rng) {
  const CMat2 m = rand_complex2(rng);
  return (m + m.adjoint()) / 2.0;
}

CMat2 rand_sl2(Rng& rng) {
  // U1 diag(e^{r/2}, e^{-r/2}) U2 with Haar U1, U2 in SU(2) and Gaussian r.
  auto su2 = [&rng] {
    const CMat2 u = rand_unitary2(rng);
    return CMat2(u / std::sqrt(u.determinant()));
  };
  const CMat2 u1 = su2();
  const CMat2 u2 = su2();
  const double r = rng.gaussian();
  CMat2 d = CMat2::Zero();
  d(0, 0) = std::exp(r / 2);
  d(1, 1) = std::exp(-r / 2);
  return u1 * d * u2;
}

CMat2 rand_sl2(Seed seed) {
  Rng rng(seed);
  return rand_sl2(rng);
}

CMat2 rand_unitary2(Rng& rng) {
  for (;;) {
    const CMat2 g = rand_complex2(rng);
    Eigen::Vector2cd c0 = g.col(0);
    const double n0 = c0.norm();
    if (n0 < 1e-8) continue;
    c0 /= n0;
    Eigen::Vector2cd c1 = g.col(1) - c0.dot(g.col(1)) * c0;
    const double n1 = c1.norm();
    if (n1 < 1e-8) continue;
    c1 /= n1;
    // Second Gram-Schmidt pass keeps U U^* = 1 at machine precision.
    c1 -= c0.dot(c1) * c0;
    c1.normalize();
    CMat2 u;
    u.col(0) = c0;
    u.col(1) = c1;
    return u;
  }
}

CMat2 rand_unitary2(Seed seed) {
  Rng rng(seed);
  return rand_unitary2(rng);
}

PauliVector rand_boundary_vector(Rng& rng) {
  for (;;) {
    Vec3 n(rng.gaussian(), rng.gaussian(), rng.gaussian());
    const double len = n.norm();
    if (len < 1e-8) continue;
    n /= len;
    PauliVector x;
    x << 1.0, n;
    return x;
  }
}

PauliVector rand_boundary_vector(Seed seed) {
  Rng rng(seed);
  return rand_boundary_vector(rng);
}

PositiveMapSample sample_positive_map(Rng& rng, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");

  PositiveMapSample out;
  out.pi = PiMatrix::Zero();
  std::vector<PiMatrix> terms;
  double total = 0;
  for (int i = 0; i < n_terms; ++i) {
    const auto kind = static_cast<TermKind>(rng.below(3));
    PiMatrix t;
    switch (kind) {
      case TermKind::proper_lorentz:
        t = spinor_rho(rand_sl2(rng));
        break;
      case TermKind::improper_lorentz:
        t = compose_with_transpose(spinor_rho(rand_sl2(rng)));
        break;
      case TermKind::rank_one: {
        const PauliVector u = rand_boundary_vector(rng);
        const PauliVector w = rand_boundary_vector(rng);
        t = delta_rank_one(u, w);
        break;
      }
    }
    t /= t(0, 0);
    const double w = -std::log(1.0 - rng.uniform());
    total += w;
    out.kinds.push_back(kind);
    out.weights.push_back(w);
    terms.push_back(t);
  }
  for (int i = 0; i < n_terms; ++i) {
    out.weights[i] /= total;
    out.pi += out.weights[i] * terms[i];
  }
  return out;
}

PiMatrix rand_positive_map(Seed seed, int n_terms) {
  Rng rng(seed);
  return sample_positive_map(rng, n_terms).pi;
}

PiMatrix rand_bistochastic(Rng& rng, std::optional<double> op_norm) {
  Mat3 y;
  for (;;) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) y(i, j) = rng.gaussian();
    if (operator_norm(y) > 1e-8) break;
  }
  const double target = op_norm ? *op_norm : 1.0 - rng.uniform();
  y *= target / operator_norm(y);

  PiMatrix p = PiMatrix::Zero();
  p(0, 0) = 1.0;
  p.block<3, 3>(1, 1) = y;
  return p;
}

PiMatrix rand_bistochastic(Seed seed, std::optional<double> op_norm) {
  Rng rng(seed);
  return rand_bistochastic(rng, op_norm);
}

}  // namespace qck
