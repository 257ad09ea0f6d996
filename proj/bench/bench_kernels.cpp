// Serial reference path against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "momentrr/chern.hpp"
#include "momentrr/coxeter.hpp"
#include "oracles.hpp"

using namespace momentrr;

namespace {

struct Fixture {
  RootSystem rs;
  FiberBundle bundle;
  std::vector<MultElement> members;

  Fixture(const char *type, std::size_t rank, std::vector<std::size_t> theta)
      : rs(build_root_system(CartanMatrix::of_type(type, rank))),
        bundle(weyl_fibration(rs, Parabolic(rs, std::move(theta)))) {
    momentrr::testing::Generator gen(momentrr::testing::kDefaultSeed);
    members = momentrr::testing::random_members(bundle.total_ptr(), bundle.xi(), gen, 4);
  }
};

const Fixture &fixture(int which) {
  static const Fixture a3("A", 3, {0, 1});
  static const Fixture b3("B", 3, {0});
  static const Fixture d4("D", 4, {0, 1});
  switch (which) {
  case 0: return a3;
  case 1: return b3;
  default: return d4;
  }
}

Exec exec_of(const benchmark::State &state) {
  return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

void label(benchmark::State &state) {
  static const char *names[] = {"A3", "B3", "D4"};
  state.SetLabel(std::string(names[state.range(0)]) +
                 (state.range(1) == 0 ? " serial" : " parallel"));
}

void BM_Pushforward(benchmark::State &state) {
  const Fixture &f = fixture(static_cast<int>(state.range(0)));
  const PushOptions opt{false, exec_of(state)};
  for (auto _ : state)
    for (const auto &z : f.members) benchmark::DoNotOptimize(pushforward_mult(f.bundle, z, opt));
  label(state);
}

void BM_Membership(benchmark::State &state) {
  const Fixture &f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto &z : f.members) benchmark::DoNotOptimize(check_membership(z, exec_of(state)));
  label(state);
}

void BM_RiemannRoch(benchmark::State &state) {
  const Fixture &f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rr_check(f.bundle, f.members.front(), 2, ToddConvention::Exact, exec_of(state)));
  label(state);
}

} // namespace

BENCHMARK(BM_Pushforward)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Membership)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RiemannRoch)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
