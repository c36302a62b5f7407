// Serial reference against the OpenMP batch kernels: universe closure and bullet.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "syzex/corpus.hpp"
#include "syzex/extdim.hpp"
#include "syzex/kernels.hpp"

using namespace syzex;

namespace {

struct Case {
    const char* id;
    int d;
    int mult;
};

constexpr Case cases[] = {{"kron2", 6, 3}, {"nodeA", 8, 2}, {"beilinson2", 5, 2}};

const AlgebraPtr& algebra(const char* id)
{
    static std::map<std::string, AlgebraPtr> cache;
    auto& a = cache[id];
    if (!a)
        a = build_algebra(load_corpus(id).spec);
    return a;
}

UniverseOptions options(const Case& c, bool parallel)
{
    UniverseOptions o;
    o.dim_bound = c.d;
    o.mult_bound = c.mult;
    o.parallel = parallel;
    return o;
}

void universe(benchmark::State& state, bool parallel)
{
    const auto& c = cases[state.range(0)];
    state.SetLabel(std::string(c.id) + " d=" + std::to_string(c.d) + (parallel ? " parallel" : " serial"));
    std::size_t members = 0;
    for (auto _ : state) {
        const auto u = generate_universe(algebra(c.id), options(c, parallel));
        members = u.members.size();
        benchmark::DoNotOptimize(members);
    }
    state.counters["members"] = static_cast<double>(members);
    state.counters["threads"] = parallel ? worker_count() : 1;
}

void bullet_batch(benchmark::State& state, bool parallel)
{
    const auto& c = cases[state.range(0)];
    const auto u = generate_universe(algebra(c.id), options(c, true));
    AddCat left(u.algebra), right(u.algebra);
    for (int i = 0; i < u.members.size(); ++i)
        (i % 2 == 0 ? left : right).insert(u.members[i]);
    BulletOptions o;
    o.mult_bound = c.mult;
    o.parallel = parallel;
    state.SetLabel(std::string(c.id) + " d=" + std::to_string(c.d) + (parallel ? " parallel" : " serial"));
    std::size_t members = 0;
    for (auto _ : state) {
        const auto b = bullet(u, left, right, o);
        members = b.size();
        benchmark::DoNotOptimize(members);
    }
    state.counters["members"] = static_cast<double>(members);
}

}

BENCHMARK_CAPTURE(universe, serial, false)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(universe, parallel, true)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bullet_batch, serial, false)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bullet_batch, parallel, true)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
