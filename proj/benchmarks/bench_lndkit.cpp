#include <benchmark/benchmark.h>

#include <lndkit/catalog.hpp>
#include <lndkit/danielewski.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/dualgraph.hpp>
#include <lndkit/parser.hpp>

namespace {

using namespace lnd;

void BM_MultiplyPowersOfP(benchmark::State &state)
{
    const VarSet v = catalog::xyz();
    const MultiPoly P = catalog::surface_poly(v);
    const auto e = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(P.pow(e));
    }
}
BENCHMARK(BM_MultiplyPowersOfP)->Arg(2)->Arg(4)->Arg(6);

void BM_SubstituteIntoQuartic(benchmark::State &state)
{
    const VarSet v = catalog::xyz();
    const MultiPoly q = catalog::displayed_quartic(v);
    const Bindings b{{"y", parse("y + x*(x*z + y^2)", v)}, {"z", parse("z - 2*y*(x*z + y^2)", v)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(substitute(q, b));
    }
}
BENCHMARK(BM_SubstituteIntoQuartic);

void BM_ExponentialOfPD(benchmark::State &state)
{
    const VarSet v = catalog::xyz();
    const Derivation d = catalog::surface_derivation(v);
    const MultiPoly P = catalog::surface_poly(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponential(d, P));
    }
}
BENCHMARK(BM_ExponentialOfPD)->Unit(benchmark::kMillisecond);

void BM_CertifiedExponentialOfPD(benchmark::State &state)
{
    const VarSet v = catalog::xyz();
    const Derivation d = catalog::surface_derivation(v);
    const MultiPoly P = catalog::surface_poly(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponential_automorphism(d, P));
    }
}
BENCHMARK(BM_CertifiedExponentialOfPD)->Unit(benchmark::kMillisecond);

void BM_StableTameWord(benchmark::State &state)
{
    const VarSet v4 = catalog::xyzu();
    const Derivation d = catalog::surface_derivation(v4);
    const MultiPoly P = catalog::surface_poly(v4);
    const MultiPoly u = MultiPoly::variable(v4, "u");
    const MultiPoly one = MultiPoly::constant(v4, 1);
    for (auto _ : state) {
        MapWord w(v4);
        w.then_exponential(d.scaled(u), one)
            .then(PolyMap(v4, Bindings{{"u", u + P}}))
            .then_exponential(d.scaled(u), -one)
            .then(PolyMap(v4, Bindings{{"u", u - P}}));
        benchmark::DoNotOptimize(w.evaluate());
    }
}
BENCHMARK(BM_StableTameWord)->Unit(benchmark::kMillisecond);

void BM_NilpotencyCertificate(benchmark::State &state)
{
    const Derivation d = catalog::surface_derivation(catalog::xyz());
    for (auto _ : state) {
        benchmark::DoNotOptimize(nilpotency_certificate(d, 64));
    }
}
BENCHMARK(BM_NilpotencyCertificate);

void BM_FiberContractionSearch(benchmark::State &state)
{
    const auto g = fiber_candidate(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(can_contract_to_fiber(g));
    }
}
BENCHMARK(BM_FiberContractionSearch)->Arg(0)->Arg(1)->Arg(4);

void BM_DistinguishingFunctionSearch(benchmark::State &state)
{
    const auto c = danielewski::build_cocycle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(danielewski::distinguishing_function_search(c, 5));
    }
}
BENCHMARK(BM_DistinguishingFunctionSearch);

} // namespace

BENCHMARK_MAIN();
