#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/errors.hpp"

namespace pcg {

// Subset of the vertices of one CommutationGraph, packed as a bitmask.
// Vertex i of the owning graph is bit i. The owning graph is implicit;
// graph operations validate that no foreign bit is set.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }

  bool contains(int v) const { return (bits >> v) & 1u; }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcountll(bits); }

  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  VertexSet with(int v) const { return VertexSet{bits | (std::uint64_t{1} << v)}; }
  VertexSet without(int v) const { return VertexSet{bits & ~(std::uint64_t{1} << v)}; }

  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m;) {
      int v = __builtin_ctzll(m);
      out.push_back(v);
      m &= m - 1;
    }
    return out;
  }
};

// True if set a precedes b in the order used for deterministic listings:
// sorted index sequences compared lexicographically.
bool set_lex_less(VertexSet a, VertexSet b);

// Finite simple graph whose vertices are the group generators and whose
// edges are the commutation relations. Vertex order is the declaration
// order in the source file and fixes the ShortLex order on generators.
// Holds at most 64 vertices.
class CommutationGraph {
public:
  CommutationGraph(std::vector<std::string> names,
                   std::vector<std::pair<int, int>> edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  std::optional<int> index_of(std::string_view name) const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  // Commutation of the corresponding group generators: x commutes with
  // itself and with every neighbour.
  bool commutes(int u, int v) const { return u == v || adjacent(u, v); }

  VertexSet full_set() const { return full_; }
  VertexSet neighbours(int v) const { return VertexSet{adj_[v]}; }

  // Builds a set from vertex names; unknown names raise DomainError.
  VertexSet make_set(const std::vector<std::string>& names) const;

  // O^Z(Y) = { u in Z : d(u, y) <= 1 for all y in Y }. O^Z({}) = Z.
  VertexSet orthogonal_complement(VertexSet y, VertexSet z) const;
  // Y^perp, taken in the whole vertex set.
  VertexSet perp(VertexSet y) const { return orthogonal_complement(y, full_); }

  // cl_Z(Y) = O^Z(O^Z(Y)); closure(Y) works inside the full vertex set.
  VertexSet closure_in(VertexSet z, VertexSet y) const;
  VertexSet closure(VertexSet y) const { return closure_in(full_, y); }
  bool is_closed_in(VertexSet z, VertexSet y) const { return closure_in(z, y) == y; }
  bool is_closed(VertexSet y) const { return closure(y) == y; }

  // Join in the lattice of closed sets; both inputs must be closed.
  VertexSet closed_join(VertexSet y, VertexSet z) const;

  // Connected components of the non-commutation graph (the complement
  // graph) induced on s, ordered by least vertex.
  std::vector<VertexSet> delta_components(VertexSet s) const;

  void check_set(VertexSet s) const;

private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;
  VertexSet full_;
};

// All closed sets of the graph, sorted by (size, set-lex). Closed sets are
// exactly the orthogonal complements Y^perp for Y over all subsets; the
// enumeration seeds { X } with the vertex complements x^perp and closes
// under pairwise intersection, so it never scans 2^X.
struct ClosedSetLattice {
  const CommutationGraph* graph = nullptr;
  std::vector<VertexSet> elements;

  bool contains(VertexSet s) const;
};

ClosedSetLattice enumerate_closed_sets(const CommutationGraph& g);

// Longest strict chain in the closed-set lattice, counted in links.
// Ties between witness chains are broken per step by the set-lex-least
// successor among those attaining the maximum depth.
struct HeightResult {
  int height = 0;
  std::vector<VertexSet> witness;  // descending, from X down to X^perp
};

HeightResult lattice_height(const ClosedSetLattice& lattice);

}  // namespace pcg
