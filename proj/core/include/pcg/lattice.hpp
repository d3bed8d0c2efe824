#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/subgroup.hpp"

namespace pcg {

using CentraliserChain = std::vector<QuasiparabolicSubgroup>;

// Parabolic padding between canonical quasiparabolic centralisers C > D
// where D owns at least one block that C lacks. With Z the parabolic set
// of D, v_1 < ... < v_b the blocks of D missing from C and t_i the least
// vertex of a(v_i), the returned chain is
//   P(C) > G(Y_b) > ... > G(Y_1) > P(D),  Y_i = cl(Z + {t_1..t_i}),
// which is strict and has b + 1 links. Violated preconditions raise
// DomainError.
std::vector<ParabolicSubgroup> cpad_chain(const QuasiparabolicSubgroup& c,
                                          const QuasiparabolicSubgroup& d);

// Rewrites a strictly descending chain of canonical quasiparabolic
// centralisers whose first and last entries are parabolic into a strictly
// descending parabolic chain with at least as many links. Steps that
// introduce blocks expand to cpad_chain segments, steps that only shrink
// the parabolic set map to their parabolic parts and the remaining steps
// collapse.
std::vector<ParabolicSubgroup> parabolicize_chain(
    const CentraliserChain& chain);

// Every entry a centraliser over one graph and every step strict.
bool verify_chain(const CentraliserChain& chain);

// Height of the centraliser lattice, counted in links. Equals the height
// of the closed-set lattice.
std::size_t centraliser_lattice_height(const CommutationGraph& g);

// A chain of parabolic centralisers attaining the lattice height, from the
// whole group down to the centre.
CentraliserChain witness_chain(const CommutationGraph& g);

struct ChainSearchResult {
  std::size_t best_length = 0;  // links of the longest chain found
  CentraliserChain best_chain;
  std::size_t chains_tried = 0;
};

// Randomized falsification search for long centraliser chains: each sample
// starts at the whole group and keeps intersecting with centralisers of
// random elements of the given ball while that shrinks the subgroup.
// Deterministic for a fixed seed.
ChainSearchResult search_longest_chain(const CommutationGraph& g, int radius,
                                       std::size_t samples,
                                       std::uint64_t seed);

}  // namespace pcg
