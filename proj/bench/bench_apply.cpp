// Copyright 2026 The schupp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference kernels against the OpenMP ones, on half-filled sectors.

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <vector>

#include "schupp/hamiltonian.hpp"
#include "schupp/vecops.hpp"

namespace {

using schupp::LatticeSpec;

LatticeSpec lattice(int kind, int sites) {
  switch (kind) {
    case 0: return LatticeSpec::chain(sites);
    case 1: return LatticeSpec::square_ladder(sites / 2);
    default: return LatticeSpec::crossed_ladder(sites / 2, 0.5);
  }
}

struct Fixture {
  std::shared_ptr<schupp::SectorBasis> basis;
  std::vector<schupp::kernels::PackedBond> bonds;
  std::vector<double> x, y;

  Fixture(int kind, int sites) {
    const LatticeSpec s = lattice(kind, sites);
    basis = std::make_shared<schupp::SectorBasis>(s.n_sites(), s.n_sites() / 2);
    bonds = schupp::kernels::pack(schupp::build(s));
    x.resize(basis->dim());
    y.resize(basis->dim());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::sin(0.5 + static_cast<double>(k));
  }
};

void label(benchmark::State& state, const Fixture& f) {
  static const char* names[] = {"chain", "ladder", "x-ladder"};
  state.SetLabel(names[state.range(0)]);
  state.counters["dim"] = static_cast<double>(f.basis->dim());
  state.counters["elems/s"] = benchmark::Counter(
      static_cast<double>(f.basis->dim() * f.bonds.size()) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate);
}

void BM_ApplySerial(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    schupp::kernels::apply_serial(f.bonds, *f.basis, f.x, f.y);
    benchmark::DoNotOptimize(f.y.data());
  }
  label(state, f);
}

void BM_ApplyParallel(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    schupp::kernels::apply_parallel(f.bonds, *f.basis, f.x, f.y);
    benchmark::DoNotOptimize(f.y.data());
  }
  label(state, f);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int kind = 0; kind < 3; ++kind)
    for (int sites : {16, 20, 24}) b->Args({kind, sites});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_ApplySerial)->Apply(sizes);
BENCHMARK(BM_ApplyParallel)->Apply(sizes);

void BM_DotSerial(benchmark::State& state) {
  std::vector<double> a(static_cast<std::size_t>(state.range(0)), 0.5), b(a.size(), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(schupp::vecops::dot_serial(a, b));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * 16);
}

void BM_DotParallel(benchmark::State& state) {
  std::vector<double> a(static_cast<std::size_t>(state.range(0)), 0.5), b(a.size(), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(schupp::vecops::dot(a, b));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * 16);
}

void BM_AxpySerial(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)), 0.5), y(x.size(), 0.25);
  for (auto _ : state) {
    schupp::vecops::axpy_serial(1e-9, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * 24);
}

void BM_AxpyParallel(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)), 0.5), y(x.size(), 0.25);
  for (auto _ : state) {
    schupp::vecops::axpy(1e-9, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) * 24);
}

BENCHMARK(BM_DotSerial)->Arg(184756)->Arg(2704156);
BENCHMARK(BM_DotParallel)->Arg(184756)->Arg(2704156);
BENCHMARK(BM_AxpySerial)->Arg(184756)->Arg(2704156);
BENCHMARK(BM_AxpyParallel)->Arg(184756)->Arg(2704156);

}  // namespace

BENCHMARK_MAIN();
