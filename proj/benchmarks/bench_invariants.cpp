// Hot paths: the big adjoint differentials, full fingerprints, certificate
// verification, and the elimination engines.
#include <benchmark/benchmark.h>

#include "lievar/certificate.hpp"
#include "lievar/hasse.hpp"

#include <random>

using namespace lievar;

namespace {

const Catalog& cat() {
    static Catalog c = Catalog::load(std::string(LIEVAR_SOURCE_DATA_DIR) + "/catalog");
    return c;
}

const CertStore& certs() {
    static CertStore s = CertStore::load(std::string(LIEVAR_SOURCE_DATA_DIR) + "/certs");
    return s;
}

void bench_adjoint_d3_rank(benchmark::State& state) {
    LieAlgebra<Rat> gF = cat().rational("gF");
    for (auto _ : state) {
        Matrix<Rat> d3 = coboundary_matrix(gF, 3, Module::Adjoint);
        benchmark::DoNotOptimize(rank(d3));
    }
}
BENCHMARK(bench_adjoint_d3_rank);

void bench_full_fingerprint_dim7(benchmark::State& state) {
    LieAlgebra<Rat> g31 = cat().rational("g31");
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(g31));
}
BENCHMARK(bench_full_fingerprint_dim7);

void bench_fingerprint_quadext(benchmark::State& state) {
    AlgebraVariant v = cat().instantiate("gI", {{"a", "1-w"}});
    const auto& L = std::get<LieAlgebra<QuadExt>>(v);
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(L));
}
BENCHMARK(bench_fingerprint_quadext);

void bench_certificate_verify(benchmark::State& state) {
    const Certificate* c = certs().find("gF_to_gE");
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(*c, cat()));
}
BENCHMARK(bench_certificate_verify);

void bench_rank_engines(benchmark::State& state) {
    std::mt19937_64 rng(5);
    Matrix<Rat> m(40, 40);
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j)
            m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
    if (state.range(0) == 0)
        for (auto _ : state) benchmark::DoNotOptimize(rank(m));
    else if (state.range(0) == 1)
        for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m));
    else
        for (auto _ : state) benchmark::DoNotOptimize(rank_field_gauss(m));
}
BENCHMARK(bench_rank_engines)->Arg(0)->Arg(1)->Arg(2);

void bench_ideal_property(benchmark::State& state) {
    LieAlgebra<Rat> g8 = cat().rational("g8");
    for (auto _ : state) benchmark::DoNotOptimize(ideal_property_R(g8));
}
BENCHMARK(bench_ideal_property);

} // namespace

BENCHMARK_MAIN();
