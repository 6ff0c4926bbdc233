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

// Serial reference vs OpenMP batch kernels on the same seeded inputs.
//
//   qck_bench [count] [seed]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qck/batch.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<qck::PiMatrix> maps_of(const std::vector<qck::GeneratedItem>& items) {
  std::vector<qck::PiMatrix> out;
  for (const auto& it : items) out.push_back(it.pi);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 200;
  const qck::Seed seed = argc > 2 ? qck::parse_seed(argv[2]) : qck::Seed{1234};
  std::printf("threads: %d, maps: %d\n", omp_get_max_threads(), count);

  std::vector<qck::GeneratedItem> gen_s, gen_p;
  const double t_gen_s = seconds([&] {
    gen_s = qck::serial::generate_batch(qck::GenerateKind::positive, seed, count);
  });
  const double t_gen_p = seconds([&] {
    gen_p = qck::generate_batch(qck::GenerateKind::positive, seed, count);
  });
  const auto positive = maps_of(gen_p);

  std::vector<qck::DecomposeOutcome> dec_s, dec_p;
  const double t_dec_s = seconds([&] { dec_s = qck::serial::decompose_batch(positive); });
  const double t_dec_p = seconds([&] { dec_p = qck::decompose_batch(positive); });

  const auto bist = maps_of(qck::generate_batch(qck::GenerateKind::bistochastic, seed, count * 50));
  std::vector<qck::Delta1Check> del_s, del_p;
  const double t_del_s = seconds([&] { del_s = qck::serial::delta1_batch(bist); });
  const double t_del_p = seconds([&] { del_p = qck::delta1_batch(bist); });

  int mismatches = 0;
  for (int i = 0; i < count; ++i) {
    if (gen_s[i].pi != gen_p[i].pi) ++mismatches;
    if (dec_s[i].result.has_value() != dec_p[i].result.has_value()) ++mismatches;
    if (dec_s[i].result && dec_s[i].result->d1 != dec_p[i].result->d1) ++mismatches;
  }
  for (std::size_t i = 0; i < bist.size(); ++i) {
    if (del_s[i].trace_norm != del_p[i].trace_norm || del_s[i].cp != del_p[i].cp ||
        del_s[i].ccp != del_p[i].ccp) {
      ++mismatches;
    }
  }

  std::printf("%-12s %12s %12s %8s\n", "kernel", "serial [s]", "openmp [s]", "speedup");
  std::printf("%-12s %12.4f %12.4f %8.2f\n", "generate", t_gen_s, t_gen_p, t_gen_s / t_gen_p);
  std::printf("%-12s %12.4f %12.4f %8.2f\n", "decompose", t_dec_s, t_dec_p, t_dec_s / t_dec_p);
  std::printf("%-12s %12.4f %12.4f %8.2f\n", "delta1", t_del_s, t_del_p, t_del_s / t_del_p);
  std::printf("mismatches: %d\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
