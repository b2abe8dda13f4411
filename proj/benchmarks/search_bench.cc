// Copyright 2026 The eqknot Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "benchmark/benchmark.h"
#include "eqknot/checkerboard.hpp"
#include "eqknot/embedsearch.hpp"
#include "eqknot/gsignature.hpp"
#include "eqknot/lattice.hpp"

namespace eqknot {
namespace {

// K_5 minus the edge {1, 3}, all weights -1.
CheckerboardGraph Graph940() {
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (u != 1 || v != 3) edges.push_back({u, v, -1});
    }
  }
  return CheckerboardGraph(5, std::move(edges));
}

const SymmetrySpec kSymmetry940{{2, 3, 0, 1, 4}, 2,
                                SymmetryKind::kStrongInversion, 1};

// Path graph with a doubled last edge: a quotient of rank n - 1.
GramLattice PathLattice(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v, -1});
  edges.push_back({n - 2, n - 1, -1});
  return GlLattice(CheckerboardGraph(n, std::move(edges)));
}

void BM_EnumerateVectors(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int norm = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateVectors(k, norm));
  }
}
BENCHMARK(BM_EnumerateVectors)->Args({6, 4})->Args({8, 4})->Args({10, 6});

void BM_Classes940(benchmark::State& state) {
  const GramLattice g = GlLattice(Graph940());
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateEmbeddingClasses(g, 6));
  }
}
BENCHMARK(BM_Classes940)->Unit(benchmark::kMillisecond);

void BM_AllEmbeddings940(benchmark::State& state) {
  const GramLattice g = GlLattice(Graph940());
  const SearchOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateEmbeddings(g, 6, options));
  }
}
BENCHMARK(BM_AllEmbeddings940)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ClassesPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GramLattice g = PathLattice(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateEmbeddingClasses(g, n));
  }
}
BENCHMARK(BM_ClassesPath)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Obstruction940(benchmark::State& state) {
  const CheckerboardGraph graph = Graph940();
  const GramLattice g = GlLattice(graph);
  const LatticeIsometry r = InducedIsometry(graph, kSymmetry940);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        DonaldsonObstruction(g, r, -2, 2, SignMode::kBoth));
  }
}
BENCHMARK(BM_Obstruction940);

void BM_Delta940(benchmark::State& state) {
  const CheckerboardGraph graph = Graph940();
  const GramLattice g = GlLattice(graph);
  const BigMatrix r = InducedIsometry(graph, kSymmetry940).matrix;
  const std::vector<Embedding> classes = EnumerateEmbeddingClasses(g, 6);
  for (auto _ : state) {
    for (const Embedding& e : classes) {
      benchmark::DoNotOptimize(EquivariantDelta(e, r, 2));
    }
  }
}
BENCHMARK(BM_Delta940);

void BM_Signature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = ((i * 7 + j * 7 + i * j) % 9) - 4;
  }
  const GramLattice g(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Signature(g));
  }
}
BENCHMARK(BM_Signature)->RangeMultiplier(2)->Range(4, 32);

void BM_GSigDirectSum946(benchmark::State& state) {
  const BigMatrix gram{{0, 2, -1, 0}, {2, 0, 0, -1}, {-1, 0, 0, 2},
                       {0, -1, 2, 0}};
  const BigMatrix tau{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1},
                      {0, 0, -1, 0}};
  BigMatrix sum(0, 0), r(0, 0);
  for (int i = 0; i < state.range(0); ++i) {
    sum = DirectSum(sum, gram);
    r = DirectSum(r, tau);
  }
  const GramLattice g(sum);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GSigInvolution(g, r));
  }
}
BENCHMARK(BM_GSigDirectSum946)->Arg(1)->Arg(4)->Arg(8);

}  // namespace
}  // namespace eqknot

BENCHMARK_MAIN();
