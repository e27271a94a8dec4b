// Microbenchmarks for the hot paths: exact polynomial construction, root
// finding, Fox-derivative images, and the full twisted-Alexander engine.
#include <benchmark/benchmark.h>

#include <complex>

#include "talex/chebyshev.hpp"
#include "talex/families.hpp"
#include "talex/repvariety.hpp"
#include "talex/roots.hpp"
#include "talex/twisted.hpp"

using namespace talex;

namespace {

std::complex<double> nonreal_root_J(int m, int n) {
    RileyData data = parabolic_slice_J(m, n);
    for (const RileyRoot& r : data.roots)
        if (!r.is_real) return r.z;
    return data.roots.front().z;
}

std::complex<double> nonreal_root_C(int m, int n, int p) {
    RileyData data = riley_poly_C(m, n, p);
    for (const RileyRoot& r : data.roots)
        if (!r.is_real) return r.z;
    return data.roots.front().z;
}

struct EngineFixture {
    Presentation pres;
    RepAssignment rep;
    Word w;
};

EngineFixture engine_fixture_J(int m, int n, bool flip) {
    FamilySpec f{FamilySpec::Kind::J, m, n, 1};
    Orientation o{flip};
    Presentation pres = family_presentation(f, o);
    ParabolicRep pr = parabolic_rep(nonreal_root_J(m, n));
    return {pres, make_rep(pres, {pr.A, pr.B}), word_w_J(m, n)};
}

EngineFixture engine_fixture_C(int m, int n, int p, bool flip) {
    FamilySpec f{FamilySpec::Kind::C, m, n, p};
    Orientation o{flip};
    Presentation pres = family_presentation(f, o);
    ParabolicRep pr = parabolic_rep(nonreal_root_C(m, n, p));
    return {pres, make_rep(pres, {pr.A, pr.B}), word_w_C(m, n, p)};
}

void BM_cheb_S(benchmark::State& state) {
    const long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cheb_S(k));
}
BENCHMARK(BM_cheb_S)->Arg(64)->Arg(256);

void BM_riley_chain_C(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(riley_chain_C(m, m, 3 * m));
}
BENCHMARK(BM_riley_chain_C)->Arg(3)->Arg(7);

void BM_parabolic_slice_poly_J(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parabolic_slice_poly_J(m, m));
}
BENCHMARK(BM_parabolic_slice_poly_J)->Arg(3)->Arg(6);

void BM_find_roots(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    IntPoly p = parabolic_slice_poly_J(m, m);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_find_roots)->Arg(3)->Arg(6);

void BM_phi_fox_J(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    EngineFixture fx = engine_fixture_J(m, m, false);
    for (auto _ : state) benchmark::DoNotOptimize(phi_fox(fx.w, 1, fx.rep));
}
BENCHMARK(BM_phi_fox_J)->Arg(3)->Arg(6);

void BM_twisted_fastpath_J(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    EngineFixture fx = engine_fixture_J(m, m, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(twisted_alexander_fastpath(fx.pres, fx.rep, fx.w));
}
BENCHMARK(BM_twisted_fastpath_J)->Arg(3)->Arg(6);

void BM_twisted_general_J(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    EngineFixture fx = engine_fixture_J(m, m, false);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_alexander(fx.pres, fx.rep, 0));
}
BENCHMARK(BM_twisted_general_J)->Arg(3)->Arg(6);

void BM_twisted_fastpath_C(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    EngineFixture fx = engine_fixture_C(m, 1, m + 2, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(twisted_alexander_fastpath(fx.pres, fx.rep, fx.w));
}
BENCHMARK(BM_twisted_fastpath_C)->Arg(1)->Arg(3);

void BM_reduced_alexander(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    Presentation pres = presentation_J(m, m, Orientation{false});
    for (auto _ : state) benchmark::DoNotOptimize(reduced_alexander(pres));
}
BENCHMARK(BM_reduced_alexander)->Arg(3)->Arg(6);

} // namespace

BENCHMARK_MAIN();
