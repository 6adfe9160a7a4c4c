#include "satake/boundary.hpp"
#include "satake/numeric.hpp"
#include "satake/spherical.hpp"

#include <benchmark/benchmark.h>

using namespace satake;

namespace {

WeightVector fund(RatVec c) { return {Basis::fundamental_weight, std::move(c)}; }

void BM_WeylOrbit_F4(benchmark::State& state) {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("f4split");
    const WeightVector regular = fund({1, 1, 1, 1});
    for (auto _ : state) {
        auto orbit = rs.weyl_orbit(regular);  // 1152 elements
        benchmark::DoNotOptimize(orbit);
    }
}
BENCHMARK(BM_WeylOrbit_F4)->Unit(benchmark::kMillisecond);

void BM_WeightSystem_A3(benchmark::State& state) {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl4r");
    const WeightVector lam = fund({2, 2, 2});
    for (auto _ : state) {
        auto ws = weight_system(rs, lam);
        benchmark::DoNotOptimize(ws);
    }
}
BENCHMARK(BM_WeightSystem_A3)->Unit(benchmark::kMillisecond);

void BM_SphericalLattice_BC5(benchmark::State& state) {
    const RestrictedRootSystem rs = RestrictedRootSystem::build(
        SystemType::BC, 5, {{"short", 2}, {"long", 2}, {"double", 1}});
    for (auto _ : state) {
        auto basis = spherical_lattice_basis(rs);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_SphericalLattice_BC5);

void BM_BuildIrrep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RatVec coords(n - 1, Rat(0));
    coords[0] = Rat(2);  // the PSD model weight 2ω₁
    for (auto _ : state) {
        auto rep = NumericIrrep::build(n, fund(coords));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_BuildIrrep)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KFixedVector(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RatVec coords(n - 1, Rat(0));
    coords[0] = Rat(2);
    const NumericIrrep rep = NumericIrrep::build(n, fund(coords));
    for (auto _ : state) {
        // Rebuilt each round: the cache would make repeat calls free.
        auto fresh = NumericIrrep::build(n, fund(coords));
        benchmark::DoNotOptimize(fresh.k_fixed_vector());
    }
}
BENCHMARK(BM_KFixedVector)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BoundaryPoset_A5(benchmark::State& state) {
    const RestrictedRootSystem rs =
        RestrictedRootSystem::build(SystemType::A, 5, {{"all", 1}});
    const WeightVector regular = fund({2, 2, 2, 2, 2});  // 31 nodes
    for (auto _ : state) {
        auto poset = boundary_poset(rs, regular);
        benchmark::DoNotOptimize(poset);
    }
}
BENCHMARK(BM_BoundaryPoset_A5);

void BM_HaarSamples(benchmark::State& state) {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    for (auto _ : state) {
        auto avg = haar_average(rep, state.range(0), 0xC0FFEE);
        benchmark::DoNotOptimize(avg);
    }
}
BENCHMARK(BM_HaarSamples)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BoundaryLimit(benchmark::State& state) {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const SimpleSubset e = SimpleSubset::from_indices(2, {0});
    const IntVec h = {1, 1, -2};
    const Eigen::MatrixXd g = Eigen::MatrixXd::Identity(3, 3);
    const auto grid = make_t_grid(10.0, 51);
    for (auto _ : state) {
        auto lim = boundary_limit(rep, e, h, g, grid);
        benchmark::DoNotOptimize(lim);
    }
}
BENCHMARK(BM_BoundaryLimit);

}  // namespace

BENCHMARK_MAIN();
