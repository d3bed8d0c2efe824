#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/lattice.hpp"
#include "pcg/subgroup.hpp"
#include "pcg/word.hpp"

namespace {

pcg::CommutationGraph path_graph(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return pcg::CommutationGraph(names, edges);
}

pcg::CommutationGraph cycle_graph(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return pcg::CommutationGraph(names, edges);
}

std::vector<pcg::Letter> random_letters(const pcg::CommutationGraph& g,
                                        int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<pcg::Letter> out;
  for (int i = 0; i < len; ++i) {
    int v = static_cast<int>(rng() % g.size());
    int sign = (rng() & 1) ? 1 : -1;
    out.push_back({v, sign});
  }
  return out;
}

void BM_normal_form(benchmark::State& state) {
  pcg::CommutationGraph g = path_graph(5);
  auto letters = random_letters(g, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcg::GroupElement::from_letters(g, letters));
  }
}
BENCHMARK(BM_normal_form)->Arg(16)->Arg(64)->Arg(256);

void BM_multiply(benchmark::State& state) {
  pcg::CommutationGraph g = path_graph(5);
  auto u = pcg::GroupElement::from_letters(
      g, random_letters(g, static_cast<int>(state.range(0)), 11));
  auto w = pcg::GroupElement::from_letters(
      g, random_letters(g, static_cast<int>(state.range(0)), 13));
  for (auto _ : state) {
    benchmark::DoNotOptimize(u * w);
  }
}
BENCHMARK(BM_multiply)->Arg(16)->Arg(64)->Arg(256);

void BM_centraliser(benchmark::State& state) {
  pcg::CommutationGraph g = cycle_graph(4);
  auto w = pcg::GroupElement::from_letters(
      g, random_letters(g, static_cast<int>(state.range(0)), 17));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcg::centraliser_of_element(w));
  }
}
BENCHMARK(BM_centraliser)->Arg(8)->Arg(32)->Arg(128);

void BM_meet(benchmark::State& state) {
  pcg::CommutationGraph g = cycle_graph(4);
  auto u = pcg::GroupElement::from_letters(g, random_letters(g, 24, 19));
  auto w = pcg::GroupElement::from_letters(g, random_letters(g, 24, 23));
  auto q1 = pcg::centraliser_of_element(u);
  auto q2 = pcg::centraliser_of_element(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcg::intersect_quasiparabolic(q1, q2));
  }
}
BENCHMARK(BM_meet);

void BM_closed_sets(benchmark::State& state) {
  pcg::CommutationGraph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcg::enumerate_closed_sets(g));
  }
}
BENCHMARK(BM_closed_sets)->Arg(4)->Arg(8)->Arg(12);

void BM_lattice_height(benchmark::State& state) {
  pcg::CommutationGraph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcg::centraliser_lattice_height(g));
  }
}
BENCHMARK(BM_lattice_height)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
