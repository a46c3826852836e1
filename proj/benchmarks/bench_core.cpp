#include <benchmark/benchmark.h>

#include "locho/bottleneck.hpp"
#include "locho/complex.hpp"
#include "locho/local_homology.hpp"
#include "locho/persistence.hpp"
#include "locho/synthetic.hpp"

namespace {

locho::PointCloud cross_cloud(double density) {
    return locho::generate({locho::SpaceKind::cross2d, density});
}

void BM_BuildRips(benchmark::State& state) {
    const double density = 1.0 / static_cast<double>(state.range(0));
    locho::PointCloud cloud = cross_cloud(density);
    for (auto _ : state) {
        auto f = locho::build_rips(cloud, 0.1, 1);
        benchmark::DoNotOptimize(f);
    }
    state.SetLabel(std::to_string(cloud.size()) + " points");
}
BENCHMARK(BM_BuildRips)->Arg(50)->Arg(100)->Arg(200);

void BM_Reduce(benchmark::State& state) {
    const double density = 1.0 / static_cast<double>(state.range(0));
    locho::Filtration f = locho::build_rips(cross_cloud(density), 0.1, 1);
    for (auto _ : state) {
        auto d = locho::reduce(f, 1);
        benchmark::DoNotOptimize(d);
    }
    state.SetLabel(std::to_string(f.size()) + " cells");
}
BENCHMARK(BM_Reduce)->Arg(50)->Arg(100)->Arg(200);

void BM_AlphaPipeline(benchmark::State& state) {
    const double density = 1.0 / static_cast<double>(state.range(0));
    locho::PointCloud cloud = cross_cloud(density);
    locho::LocalQuery query{{0.0, 0.0}, 0.25, density, 0.1, 1};
    for (auto _ : state) {
        auto res = locho::alpha_pipeline(cloud, query);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_AlphaPipeline)->Arg(50)->Arg(100)->Arg(200);

void BM_RPipeline(benchmark::State& state) {
    const double density = 1.0 / static_cast<double>(state.range(0));
    locho::PointCloud cloud = locho::generate({locho::SpaceKind::circle, density});
    locho::LocalQuery query{{1.0, 0.0}, 1.0, density, 2.0 * density, 1};
    for (auto _ : state) {
        auto res = locho::r_pipeline(cloud, query);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_RPipeline)->Arg(20)->Arg(50)->Arg(100);

void BM_Bottleneck(benchmark::State& state) {
    const double density = 1.0 / static_cast<double>(state.range(0));
    locho::PointCloud cloud = cross_cloud(density);
    locho::LocalQuery q1{{0.0, 0.0}, 0.25, density, 0.1, 1};
    locho::LocalQuery q2 = q1;
    q2.basepoint = {0.1, 0.0};
    auto a = locho::alpha_pipeline(cloud, q1).diagram;
    auto b = locho::alpha_pipeline(cloud, q2).diagram;
    for (auto _ : state) {
        benchmark::DoNotOptimize(locho::bottleneck_distance(a, b));
    }
}
BENCHMARK(BM_Bottleneck)->Arg(50)->Arg(100);

}  // namespace
