// Microbenchmarks for the hot paths: the factor-and-solve step behind every
// dual evaluation, the line searches, the oracle enumeration, and one
// full driver run on a small euclidean instance.

#include <random>

#include <benchmark/benchmark.h>

#include "cdmc/compensation.hpp"
#include "cdmc/drivers.hpp"
#include "cdmc/oracle.hpp"
#include "cdmc/tsplib.hpp"

namespace {

using namespace cdmc;

PrimalProblem random_problem(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> w(1, 2000);
    PrimalProblem p;
    p.Q = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.Q(i, j) = p.Q(j, i) = w(rng);
    p.c.resize(n);
    for (int i = 0; i < n; ++i) p.c(i) = -w(rng);
    return p;
}

WeightedGraph random_euclidean_graph(int n1, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 2000.0);
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n1));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n1, n1);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j)
            w(i, j) = w(j, i) = tsplib::dist_euc2d(pts[i].first, pts[i].second,
                                                   pts[j].first, pts[j].second);
    return WeightedGraph(std::move(w), "bench");
}

void BM_DualValue(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimalProblem p = random_problem(n, 1);
    PerturbationConfig cfg;
    cfg.alpha = choose_alpha(p.Q, PerturbationPolicy{});
    cfg.beta = Eigen::VectorXd::Constant(n, 500.0);
    const Eigen::VectorXd sigma = default_sigma0(p, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_value(p, cfg, sigma));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DualValue)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_MaxStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimalProblem p = random_problem(n, 2);
    PerturbationConfig cfg;
    cfg.alpha = choose_alpha(p.Q, PerturbationPolicy{});
    cfg.beta = Eigen::VectorXd::Constant(n, 500.0);
    const Eigen::VectorXd sigma = default_sigma0(p, cfg);
    const Eigen::VectorXd d = dual_gradient(p, cfg, sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_step(p, cfg, sigma, d));
    }
}
BENCHMARK(BM_MaxStep)->Arg(64)->Arg(128)->Arg(256);

void BM_OracleGrayCode(benchmark::State& state) {
    const int n1 = static_cast<int>(state.range(0));
    const WeightedGraph g = random_euclidean_graph(n1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_maxcut(g, n1));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << (n1 - 1)));
}
BENCHMARK(BM_OracleGrayCode)->DenseRange(16, 22, 2)->Unit(benchmark::kMillisecond);

void BM_CompensatePass(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PrimalProblem p = random_problem(n, 4);
    std::mt19937_64 rng(5);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = (rng() & 1) ? 1.0 : -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compensate(p, x));
    }
}
BENCHMARK(BM_CompensatePass)->Arg(100)->Arg(500);

void BM_GoldenSection(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(golden_section(
            [](double a) { return -(a - 1.234) * (a - 1.234); }, 0.0, 10.0, 1e-8));
    }
}
BENCHMARK(BM_GoldenSection);

void BM_Cda1SmallInstance(benchmark::State& state) {
    const WeightedGraph g = random_euclidean_graph(static_cast<int>(state.range(0)), 6);
    const PerturbationPolicy policy;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_graph(g, Algorithm::Cda1, policy));
    }
}
BENCHMARK(BM_Cda1SmallInstance)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
