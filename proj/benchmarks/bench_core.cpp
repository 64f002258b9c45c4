#include <benchmark/benchmark.h>

#include "pw/doubles/doubles.hpp"
#include "pw/freecat/centre.hpp"
#include "pw/hopf/io.hpp"

namespace {

pw::hopf::HopfAlgebra load_named(const std::string& name) {
    return pw::hopf::load_hopf(std::string(PW_DATA_DIR) + "/" + name + ".json");
}

void bm_check_axioms(benchmark::State& state) {
    auto h = load_named("sweedler_f5");
    for (auto _ : state) benchmark::DoNotOptimize(pw::hopf::check_axioms(h).all_passed());
}
BENCHMARK(bm_check_axioms);

void bm_enumerate_characters(benchmark::State& state) {
    auto h = load_named("s3_f7");
    for (auto _ : state) benchmark::DoNotOptimize(pw::hopf::enumerate_characters(h).size());
}
BENCHMARK(bm_enumerate_characters);

void bm_build_drinfeld_double(benchmark::State& state) {
    auto h = load_named("sweedler_f5");
    for (auto _ : state) benchmark::DoNotOptimize(pw::doubles::build_drinfeld_double(h).dim());
}
BENCHMARK(bm_build_drinfeld_double);

void bm_rmatrix_check(benchmark::State& state) {
    auto d = pw::doubles::build_drinfeld_double(load_named("kc3_f7"));
    for (auto _ : state) benchmark::DoNotOptimize(pw::doubles::check_rmatrix(d).all());
}
BENCHMARK(bm_rmatrix_check);

void bm_diagram_compose(benchmark::State& state) {
    using namespace pw::freecat;
    Diagram a = tensor(tensor(sigma(), sigma()), tensor(rho(), rho()));
    Diagram b = tensor(tensor(rho(), sigma()), tensor(sigma(), identity(1)));
    Diagram c = ev_n(3);  // 6 -> 0, closes everything into loops
    for (auto _ : state) benchmark::DoNotOptimize(compose(c, compose(b, a)).strands.size());
}
BENCHMARK(bm_diagram_compose);

void bm_enumerate_half_braidings(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pw::freecat::enumerate_half_braidings(3).size());
}
BENCHMARK(bm_enumerate_half_braidings);

void bm_centre_tensor(benchmark::State& state) {
    auto objs = pw::freecat::enumerate_half_braidings(2);
    for (auto _ : state)
        for (const auto& c1 : objs)
            benchmark::DoNotOptimize(pw::freecat::centre_tensor(c1, objs[5]).n);
}
BENCHMARK(bm_centre_tensor);

}  // namespace

BENCHMARK_MAIN();
