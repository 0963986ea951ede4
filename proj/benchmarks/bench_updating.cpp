#include <benchmark/benchmark.h>

#include <random>

#include "credalkit/dynamics.hpp"

using namespace credalkit;

namespace {

Rational rat(const char* text) { return *parse_rational(text); }

StateSpace urn_space() { return StateSpace({"r", "b", "y"}); }

CredalSet urn_set() {
  return CredalSet(urn_space(),
                   {Prior({rat("9/20"), rat("9/20"), rat("2/20")}),
                    Prior({rat("6/10"), rat("2/10"), rat("2/10")}),
                    Prior({rat("1/10"), rat("3/10"), rat("6/10")})});
}

// Wider random set over four states, bigger denominators.
CredalSet wide_set(std::size_t vertices) {
  std::mt19937_64 engine(0xbe9c);
  std::uniform_int_distribution<int> weight(1, 97);
  std::vector<Prior> priors;
  for (std::size_t i = 0; i < vertices; ++i) {
    std::vector<Rational> w(4);
    Rational total = 0;
    for (auto& c : w) {
      c = weight(engine);
      total += c;
    }
    for (auto& c : w) c /= total;
    priors.emplace_back(w);
  }
  return CredalSet(StateSpace({"s1", "s2", "s3", "s4"}), std::move(priors));
}

void BM_UpdateFullBayes(benchmark::State& state) {
  const CredalSet set = wide_set(static_cast<std::size_t>(state.range(0)));
  const Event event = Event::from_indices(4, std::vector<std::size_t>{0, 1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(update(set, event, FullBayes{}));
  }
}
BENCHMARK(BM_UpdateFullBayes)->Arg(3)->Arg(6)->Arg(10);

void BM_UpdatePartialBayes(benchmark::State& state) {
  const CredalSet set = wide_set(static_cast<std::size_t>(state.range(0)));
  const Event event = Event::from_indices(4, std::vector<std::size_t>{0, 1, 2});
  const UpdateRule rule = ConstantPartialBayes{rat("3/4")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(update(set, event, rule));
  }
}
BENCHMARK(BM_UpdatePartialBayes)->Arg(3)->Arg(6)->Arg(10);

void BM_ClipHalfspace(benchmark::State& state) {
  const CredalSet set = wide_set(static_cast<std::size_t>(state.range(0)));
  const Halfspace halfspace{
      Event::from_indices(4, std::vector<std::size_t>{0, 1}).indicator(),
      rat("2/5")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(clip_halfspace(set.polytope(), halfspace));
  }
}
BENCHMARK(BM_ClipHalfspace)->Arg(6)->Arg(10);

void BM_HullMembership(benchmark::State& state) {
  const CredalSet set = wide_set(static_cast<std::size_t>(state.range(0)));
  const Point probe{rat("1/4"), rat("1/4"), rat("1/4"), rat("1/4")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_membership(probe, set.polytope()));
  }
}
BENCHMARK(BM_HullMembership)->Arg(6)->Arg(10);

void BM_MeuValue(benchmark::State& state) {
  const CredalSet set = wide_set(10);
  const Act act({rat("0"), rat("10"), rat("-3"), rat("5/2")});
  for (auto _ : state) {
    benchmark::DoNotOptimize(meu_value(set, act));
  }
}
BENCHMARK(BM_MeuValue);

void BM_IdentifyThreshold(benchmark::State& state) {
  const CredalSet set = urn_set();
  const Event event = Event::from_indices(3, std::vector<std::size_t>{0, 1});
  const CredalSet posterior =
      update(set, event, ConstantPartialBayes{rat("13/18")});
  for (auto _ : state) {
    benchmark::DoNotOptimize(identify_rho(set, event, posterior));
  }
}
BENCHMARK(BM_IdentifyThreshold);

void BM_SequentialUpdate(benchmark::State& state) {
  const CredalSet set = wide_set(8);
  const Event outer = Event::from_indices(4, std::vector<std::size_t>{0, 1, 2});
  const Event inner = Event::from_indices(4, std::vector<std::size_t>{0, 1});
  const InformationPath path({{outer, rat("7/8")}, {inner, rat("1/2")}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequential_update(set, path));
  }
}
BENCHMARK(BM_SequentialUpdate);

}  // namespace

BENCHMARK_MAIN();
