#include "pcg/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace pcg {

bool set_lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  // Compare sorted index sequences lexicographically.
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int i = __builtin_ctzll(x);
    int j = __builtin_ctzll(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

CommutationGraph::CommutationGraph(std::vector<std::string> names,
                                   std::vector<std::pair<int, int>> edges)
    : names_(std::move(names)) {
  if (names_.size() > 64)
    throw DomainError("commutation graph limited to 64 vertices, got " +
                      std::to_string(names_.size()));
  adj_.assign(names_.size(), 0);
  full_ = names_.empty()
              ? VertexSet{}
              : VertexSet{~std::uint64_t{0} >> (64 - names_.size())};
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
      throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop on vertex " + names_[u]);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

std::optional<int> CommutationGraph::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VertexSet CommutationGraph::make_set(const std::vector<std::string>& names) const {
  VertexSet s;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw DomainError("unknown vertex '" + n + "'");
    s = s.with(*i);
  }
  return s;
}

void CommutationGraph::check_set(VertexSet s) const {
  if (!s.subset_of(full_))
    throw DomainError("vertex set contains a vertex foreign to this graph");
}

VertexSet CommutationGraph::orthogonal_complement(VertexSet y, VertexSet z) const {
  check_set(y);
  check_set(z);
  VertexSet out = z;
  for (int v : y.indices())
    out = out & VertexSet{adj_[v] | (std::uint64_t{1} << v)};
  return out;
}

VertexSet CommutationGraph::closure_in(VertexSet z, VertexSet y) const {
  return orthogonal_complement(orthogonal_complement(y, z), z);
}

VertexSet CommutationGraph::closed_join(VertexSet y, VertexSet z) const {
  if (!is_closed(y))
    throw DomainError("closed_join: first operand is not a closed set");
  if (!is_closed(z))
    throw DomainError("closed_join: second operand is not a closed set");
  return closure(y | z);
}

std::vector<VertexSet> CommutationGraph::delta_components(VertexSet s) const {
  check_set(s);
  std::vector<VertexSet> comps;
  VertexSet left = s;
  while (!left.empty()) {
    int start = __builtin_ctzll(left.bits);
    VertexSet comp = VertexSet::single(start);
    // BFS over non-edges inside s.
    std::vector<int> frontier{start};
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      for (int w : (s - comp).indices()) {
        if (!adjacent(v, w) && v != w) {
          comp = comp.with(w);
          frontier.push_back(w);
        }
      }
    }
    comps.push_back(comp);
    left = left - comp;
  }
  std::sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) {
    return __builtin_ctzll(a.bits) < __builtin_ctzll(b.bits);
  });
  return comps;
}

bool ClosedSetLattice::contains(VertexSet s) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](VertexSet e) { return e == s; });
}

ClosedSetLattice enumerate_closed_sets(const CommutationGraph& g) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> work;
  auto push = [&](VertexSet s) {
    if (seen.insert(s.bits).second) work.push_back(s);
  };
  push(g.full_set());
  push(g.perp(g.full_set()));
  for (int v = 0; v < g.size(); ++v) push(g.perp(VertexSet::single(v)));
  // Close under pairwise intersection.
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(work[i] & work[j]);

  ClosedSetLattice lat;
  lat.graph = &g;
  lat.elements = std::move(work);
  std::sort(lat.elements.begin(), lat.elements.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return set_lex_less(a, b);
  });
  return lat;
}

HeightResult lattice_height(const ClosedSetLattice& lattice) {
  const auto& els = lattice.elements;  // sorted by size, small first
  const int n = static_cast<int>(els.size());
  std::vector<int> depth(n, 0);  // longest chain going down from els[i]
  std::vector<int> next(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (els[j] == els[i] || !els[j].subset_of(els[i])) continue;
      int cand = depth[j] + 1;
      if (cand > depth[i] ||
          (cand == depth[i] && next[i] >= 0 && set_lex_less(els[j], els[next[i]]))) {
        depth[i] = cand;
        next[i] = j;
      }
    }
  }
  HeightResult res;
  if (n == 0) return res;
  int top = n - 1;  // X is the unique largest closed set
  res.height = depth[top];
  for (int i = top; i >= 0; i = next[i]) {
    res.witness.push_back(els[i]);
    if (next[i] < 0) break;
  }
  return res;
}

}  // namespace pcg
