#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/io.hpp"
#include "pcg/word.hpp"

namespace support {

inline pcg::CommutationGraph p3() {
  return pcg::CommutationGraph({"a", "b", "c"}, {{0, 1}, {1, 2}});
}

inline pcg::CommutationGraph c4() {
  return pcg::CommutationGraph({"a", "b", "c", "d"},
                               {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline pcg::CommutationGraph p4() {
  return pcg::CommutationGraph({"a", "b", "c", "d"},
                               {{0, 1}, {1, 2}, {2, 3}});
}

inline pcg::CommutationGraph k3() {
  return pcg::CommutationGraph({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
}

inline pcg::GroupElement w(const pcg::CommutationGraph& g,
                           const std::string& text) {
  return pcg::parse_word(g, text);
}

inline std::string nf(const pcg::CommutationGraph& g,
                      const std::string& text) {
  return pcg::format_word(pcg::parse_word(g, text));
}

// Erdos-Renyi-ish graph on n vertices named a, b, ..., each edge a coin flip.
inline pcg::CommutationGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return pcg::CommutationGraph(names, edges);
}

inline std::vector<pcg::Letter> random_letters(const pcg::CommutationGraph& g,
                                               int len, std::mt19937_64& rng) {
  std::vector<pcg::Letter> out;
  for (int i = 0; i < len; ++i) {
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.size()));
    int sign = (rng() & 1) ? 1 : -1;
    out.push_back(pcg::Letter{v, sign});
  }
  return out;
}

}  // namespace support
