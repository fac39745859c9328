#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ept/context.hpp"
#include "ept/markov.hpp"
#include "ept/measure.hpp"
#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/stset.hpp"
#include "ept/sym_int.hpp"

namespace {

double signed_unit(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
}

/// Exactly-symmetric positive semidefinite matrix (Gram construction).
std::vector<double> gram_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (auto& value : g) value = signed_unit(rng);
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) {
        dot += g[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(k)] *
               g[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(k)];
      }
      m[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          dot;
      m[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
          dot;
    }
  }
  return m;
}

ept::Partition blocks_of_four(const ept::SampleSpace& space) {
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start + 3 < space.size(); start += 4) {
    blocks.push_back({start, start + 1, start + 2, start + 3});
  }
  return ept::Partition(space, blocks);
}

void BM_PartitionMeet(benchmark::State& state) {
  const auto space = ept::SampleSpace::with_size(12);
  const auto a = blocks_of_four(space);
  std::vector<std::vector<int>> striped;
  for (int r = 0; r < 3; ++r) striped.push_back({r, r + 3, r + 6, r + 9});
  const ept::Partition b(space, striped);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::meet(a, b));
  }
}
BENCHMARK(BM_PartitionMeet);

void BM_PartitionJoin(benchmark::State& state) {
  const auto space = ept::SampleSpace::with_size(12);
  const auto a = blocks_of_four(space);
  std::vector<std::vector<int>> striped;
  for (int r = 0; r < 3; ++r) striped.push_back({r, r + 3, r + 6, r + 9});
  const ept::Partition b(space, striped);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::join(a, b));
  }
}
BENCHMARK(BM_PartitionJoin);

void BM_QuadRepRoundTrip(benchmark::State& state) {
  const auto space = ept::SampleSpace::with_size(10);
  const auto event = ept::Partition(space, {{0, 1, 2}, {3, 4}, {5}, {6, 7, 8}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::partition_of(ept::quad_rep(event)));
  }
}
BENCHMARK(BM_QuadRepRoundTrip);

void BM_UniverseCensus(benchmark::State& state) {
  const auto space = ept::SampleSpace::with_size(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::count_universes(space));
  }
}
BENCHMARK(BM_UniverseCensus);

void BM_StateValidation(benchmark::State& state) {
  const int n = 16;
  const auto space = ept::SampleSpace::with_size(n);
  const auto m = gram_matrix(n, 21);
  for (auto _ : state) {
    const ept::QuadraticState candidate(space, m);
    benchmark::DoNotOptimize(candidate.validation().psd);
  }
}
BENCHMARK(BM_StateValidation);

void BM_MeasureEvaluation(benchmark::State& state) {
  const int n = 16;
  const auto space = ept::SampleSpace::with_size(n);
  const ept::QuadraticState quadratic(space, gram_matrix(n, 22));
  const auto event = blocks_of_four(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::measure_of(quadratic, event));
  }
}
BENCHMARK(BM_MeasureEvaluation);

void BM_PlusIdentityResidual(benchmark::State& state) {
  const auto space = ept::SampleSpace::with_size(6);
  const std::vector<std::vector<int>> singletons{{0}, {1}, {2}, {3}, {4}, {5}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::plus_identity_residual(space, singletons).is_zero());
  }
}
BENCHMARK(BM_PlusIdentityResidual);

void BM_NoGoCertificate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ept::cpt_no_go_certificate(5).ok());
  }
}
BENCHMARK(BM_NoGoCertificate);

}  // namespace

BENCHMARK_MAIN();
