#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <random>

#include "xling/hubness.hpp"
#include "xling/hungarian.hpp"
#include "xling/sts.hpp"

namespace {

Eigen::MatrixXd random_rows(Eigen::Index m, Eigen::Index d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd out(m, d);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < d; ++j) out(i, j) = normal(gen);
    return out;
}

xling::WeightedBag random_bag(Eigen::Index tokens, Eigen::Index d, std::uint64_t seed) {
    xling::WeightedBag bag;
    bag.vectors = random_rows(tokens, d, seed);
    bag.weights.assign(static_cast<std::size_t>(tokens), 1.0);
    bag.words.assign(static_cast<std::size_t>(tokens), "w");
    bag.total_weight = static_cast<double>(tokens);
    return bag;
}

void BM_Hungarian(benchmark::State& state) {
    const auto n = state.range(0);
    const Eigen::MatrixXd w = random_rows(n, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(xling::hungarian_matching(w));
}

void BM_OptimalMatching(benchmark::State& state) {
    const auto tokens = state.range(0);
    const auto bag_x = random_bag(tokens, 300, 11);
    const auto bag_y = random_bag(tokens, 300, 13);
    for (auto _ : state) benchmark::DoNotOptimize(xling::sim_optimal_matching(bag_x, bag_y));
}

void BM_PrincipalAngles(benchmark::State& state) {
    const auto tokens = state.range(0);
    const auto bag_x = random_bag(tokens, 300, 11);
    const auto bag_y = random_bag(tokens, 300, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(xling::sim_principal_angles(bag_x, bag_y, 4));
}

void BM_HubnessScan(benchmark::State& state) {
    const auto n = state.range(0);
    const Eigen::MatrixXd space = random_rows(n, 100, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(xling::hubness_counts(space, space, 20, true));
    state.SetItemsProcessed(state.iterations() * n);
}

BENCHMARK(BM_Hungarian)->Arg(50)->Arg(100);
BENCHMARK(BM_OptimalMatching)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalAngles)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HubnessScan)->Arg(2000)->Unit(benchmark::kMillisecond);

} // namespace
