#include <benchmark/benchmark.h>

#include <vector>

#include "descent/curve.hpp"
#include "descent/group_structure.hpp"
#include "descent/localsolve.hpp"
#include "descent/mumford.hpp"
#include "descent/search.hpp"

using namespace descent;

namespace {

HyperellipticCurve quintic() {
    return new_curve({BigRat(1), BigRat(-1), BigRat(0), BigRat(0), BigRat(0),
                      BigRat(1)});  // y^2 = x^5 - x + 1
}

HyperellipticCurve sextic() {
    return new_curve({BigRat(2), BigRat(0), BigRat(0), BigRat(0), BigRat(0),
                      BigRat(0), BigRat(1)});  // y^2 = x^6 + 2
}

} // namespace

static void BM_CantorAdd(benchmark::State& state) {
    auto c = quintic();
    uint32_t p = static_cast<uint32_t>(state.range(0));
    auto f = curve_poly_fp(c, p);
    auto elems = jac_elements(c, p);
    std::size_t i = 0, j = elems.size() / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor_add(f, elems[i], elems[j]));
        if (++i == elems.size()) i = 0;
        if (++j == elems.size()) j = 0;
    }
}
BENCHMARK(BM_CantorAdd)->Arg(31)->Arg(97);

static void BM_JacEnumeration(benchmark::State& state) {
    auto c = quintic();
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(jac_elements(c, p));
}
BENCHMARK(BM_JacEnumeration)->Arg(11)->Arg(31);

static void BM_JacGroupStructure(benchmark::State& state) {
    auto c = quintic();
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(jac_group_structure(c, p));
}
BENCHMARK(BM_JacGroupStructure)->Arg(11)->Arg(31);

static void BM_PointsOverFp(benchmark::State& state) {
    auto c = sextic();
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(points_over_fp(c, p));
}
BENCHMARK(BM_PointsOverFp)->Arg(97)->Arg(997);

static void BM_PointSearch(benchmark::State& state) {
    auto c = sextic();
    uint32_t H = static_cast<uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(point_search(c, H));
}
BENCHMARK(BM_PointSearch)->Arg(20)->Arg(100);

static void BM_QpSolvability(benchmark::State& state) {
    auto c = sextic();
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(has_qp_points(c, p));
}
BENCHMARK(BM_QpSolvability)->Arg(2)->Arg(13);

BENCHMARK_MAIN();
