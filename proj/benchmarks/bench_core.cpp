#include <benchmark/benchmark.h>

#include "latorus/involutions.hpp"
#include "latorus/verify.hpp"

using namespace latorus;

namespace {

const QuantumMatrix& qm1() {
    static const QuantumMatrix q = QuantumMatrix::rank2(Rational(-1));
    return q;
}

QTElement dense_element(int terms) {
    QTElement a(2);
    for (int k = 0; k < terms; ++k)
        a.add_term(Degree{k % 5 - 2, (k * 3) % 5 - 2}, Rational(2 * k + 1, k + 2));
    return a;
}

void BM_twist(benchmark::State& state) {
    const auto degrees = degree_window(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const Degree& a : degrees)
            for (const Degree& b : degrees) benchmark::DoNotOptimize(twist(qm1(), a, b));
    }
}
BENCHMARK(BM_twist)->Arg(1)->Arg(2)->Arg(3);

void BM_qt_mul(benchmark::State& state) {
    const QTElement a = dense_element(static_cast<int>(state.range(0)));
    const QTElement b = dense_element(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qt_mul(qm1(), a, b));
}
BENCHMARK(BM_qt_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_oct_mul(benchmark::State& state) {
    OctElement a(3), b(3);
    for (int k = 0; k < state.range(0); ++k) {
        a.add_term(Degree{k % 3 - 1, (k * 2) % 3 - 1, k % 2}, Rational(k + 1));
        b.add_term(Degree{(k * 2) % 3 - 1, k % 3 - 1, -(k % 2)}, Rational(k + 2));
    }
    for (auto _ : state) benchmark::DoNotOptimize(oct_mul(a, b));
}
BENCHMARK(BM_oct_mul)->Arg(4)->Arg(8);

void BM_bracket(benchmark::State& state) {
    const MatrixLieTorus torus(static_cast<int>(state.range(0)), qm1());
    const LieElement x = torus.matrix_unit(1, 2, dense_element(6));
    const LieElement y = torus.matrix_unit(2, 1, dense_element(6));
    for (auto _ : state) benchmark::DoNotOptimize(torus.bracket(x, y));
}
BENCHMARK(BM_bracket)->Arg(2)->Arg(3)->Arg(5);

void BM_ad_eta(benchmark::State& state) {
    const MatrixLieTorus torus(3, qm1());
    const LieElement x = torus.matrix_unit(2, 3, dense_element(6));
    const Root alpha = Root::pair(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(torus.ad_eta(alpha, x));
}
BENCHMARK(BM_ad_eta);

void BM_theta_transport(benchmark::State& state) {
    const MatrixLieTorus torus(3, qm1());
    const LieElement x = torus.matrix_unit(1, 2, dense_element(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(torus.theta(Root::pair(3, 4), Root::pair(1, 2), x));
}
BENCHMARK(BM_theta_transport);

void BM_division_witness(benchmark::State& state) {
    const MatrixLieTorus torus(2, qm1());
    const GradedComponentKey key{Root::pair(1, 2), Degree{1, 1}};
    for (auto _ : state)
        benchmark::DoNotOptimize(torus.division_witness(key, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_division_witness)->Arg(1)->Arg(2);

void BM_oracle_search(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_search_pre_chevalley(qm1(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_oracle_search)->Arg(2)->Arg(3);

void BM_verify_division_suite(benchmark::State& state) {
    VerifyOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_division(2, qm1(), 2, opts));
}
BENCHMARK(BM_verify_division_suite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
