#include "glocsur/random_instances.hpp"
#include "glocsur/selftest.hpp"

#include <benchmark/benchmark.h>

using namespace glocsur;
namespace rnd = glocsur::randomized;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

/// Many declared places over D4, so the per-place images dominate.
LocalizationProblem wide_problem() {
  auto rng = rnd::instance_rng(9, 0);
  const FiniteGroup g = FiniteGroup::dihedral(4);
  const GModule m = rnd::random_lattice_module(rng, g, 4);
  const auto subs = all_subgroups(g);
  LocalizationProblem p{m, {}, {}, TailSide::S, cyclic_subgroup_classes(g)};
  for (std::size_t k = 0; k < 48; ++k) {
    p.places.push_back({"v" + std::to_string(k), PlaceKind::finite, subs[k % subs.size()]});
    if (k % 3) p.S.push_back("v" + std::to_string(k));
  }
  return p;
}

void BM_is_surjective(benchmark::State& state) {
  const LocalizationProblem p = wide_problem();
  for (auto _ : state) benchmark::DoNotOptimize(is_surjective(p, exec_of(state)).surjective);
}

void BM_bar_boundary_2(benchmark::State& state) {
  auto rng = rnd::instance_rng(9, 1);
  const FiniteGroup g = FiniteGroup::quaternion();
  const GModule m = rnd::random_lattice_module(rng, g, 4);
  const auto all = SubgroupOfG::whole(g);
  for (auto _ : state) benchmark::DoNotOptimize(bar_boundary_2(m, all, exec_of(state)));
}

void BM_build_six_term(benchmark::State& state) {
  // C2 x C2 x C2 acting on Z[G] modulo the norm line: (B3)_G has several torsion generators.
  const FiniteGroup g = rnd::group_catalog()[10].group;
  const GModule b2 = permutation_module(g, SubgroupOfG::trivial(g));
  IntMatrix ones(b2.rank(), 1);
  for (std::size_t r = 0; r < b2.rank(); ++r) ones(r, 0) = 1;
  const SubmoduleData sd = submodule(b2, ones);
  const ShortExactSequence seq(sd.sub, b2, sd.quotient, sd.inclusion, IntMatrix::identity(b2.rank()));
  for (auto _ : state) benchmark::DoNotOptimize(build_six_term(seq, exec_of(state)).delta);
}

void BM_selftest(benchmark::State& state) {
  SelftestOptions opts;
  opts.count = 16;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_selftest(opts).ok());
}

}  // namespace

BENCHMARK(BM_is_surjective)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bar_boundary_2)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_six_term)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_selftest)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
