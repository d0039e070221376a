#include <benchmark/benchmark.h>

#include "ideal/crush.hpp"
#include "ideal/inflate.hpp"
#include "ideal/io.hpp"
#include "ideal/isomorphism.hpp"

using namespace ideal;

namespace {

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

void BM_Links(benchmark::State& st) {
    Triangulation t = read_tri(fixture("whitehead-x.tri"));
    for (auto _ : st) benchmark::DoNotOptimize(build_links(t));
}
BENCHMARK(BM_Links);

void BM_EnumerateFrames(benchmark::State& st) {
    Triangulation t = read_tri(fixture("fig8.tri"));
    Links links = build_links(t);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_frame_collections(links, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnumerateFrames)->Arg(6)->Arg(8);

void BM_Inflate(benchmark::State& st) {
    Triangulation t = read_tri(fixture("whitehead-x.tri"));
    Links links = build_links(t);
    auto fr = read_frames(fixture("whitehead-x.frame"), links);
    for (auto _ : st) benchmark::DoNotOptimize(inflate(t, links, fr));
}
BENCHMARK(BM_Inflate);

void BM_CrushBoundary(benchmark::State& st) {
    Triangulation t = read_tri(fixture("fig8-inflated.tri"));
    for (auto _ : st) benchmark::DoNotOptimize(crush_along_boundary(t));
}
BENCHMARK(BM_CrushBoundary);

void BM_Isomorphism(benchmark::State& st) {
    Triangulation a = read_tri(fixture("fig8-inflated.tri"));
    Triangulation b = crush_along_boundary(a);
    Links links = build_links(b);
    auto fr = read_frames(fixture("fig8-xi1.frame"), links);
    Triangulation c = inflate(b, links, fr).tri;
    for (auto _ : st) benchmark::DoNotOptimize(isomorphic(a, c));
}
BENCHMARK(BM_Isomorphism);

}  // namespace

BENCHMARK_MAIN();
