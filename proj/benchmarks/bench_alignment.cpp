#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <random>

#include "xling/ranking.hpp"
#include "xling/transforms.hpp"

namespace {

Eigen::MatrixXd random_rows(Eigen::Index m, Eigen::Index d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd out(m, d);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) out(i, j) = normal(gen);
        out.row(i).normalize();
    }
    return out;
}

void BM_FitLeastSquares(benchmark::State& state) {
    const auto m = state.range(0);
    const auto d = state.range(1);
    const Eigen::MatrixXd x = random_rows(m, d, 1);
    const Eigen::MatrixXd y = random_rows(m, d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(xling::fit_least_squares(x, y));
}

void BM_FitOrthogonal(benchmark::State& state) {
    const auto m = state.range(0);
    const auto d = state.range(1);
    const Eigen::MatrixXd x = random_rows(m, d, 1);
    const Eigen::MatrixXd y = random_rows(m, d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(xling::fit_orthogonal(x, y));
}

void BM_FitCca(benchmark::State& state) {
    const auto m = state.range(0);
    const auto d = state.range(1);
    const Eigen::MatrixXd x = random_rows(m, d, 1);
    const Eigen::MatrixXd y = random_rows(m, d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(xling::fit_cca(x, y));
}

void BM_FitOrthogonalRankingEpoch(benchmark::State& state) {
    const auto m = state.range(0);
    const auto d = state.range(1);
    const Eigen::MatrixXd x = random_rows(m, d, 1);
    const Eigen::MatrixXd y = random_rows(m, d, 2);
    xling::RankingConfig config;
    config.epochs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(xling::fit_orthogonal_ranking(x, y, config));
    state.SetItemsProcessed(state.iterations() * m);
}

BENCHMARK(BM_FitLeastSquares)->Args({2000, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitOrthogonal)->Args({2000, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitCca)->Args({2000, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitOrthogonalRankingEpoch)->Args({500, 50})->Unit(benchmark::kMillisecond);

} // namespace
