#pragma once

#include "pcg/word.hpp"

namespace pcg {

// Witness for how conjugation by g acts on the cyclic core of w.
//
// Writing cyclic_reduce(w) = (u, v), the fields satisfy
//   u  = tail1 * head^{-1}             lg(u) = lg(tail1) + lg(head)
//   g  = head * rotor * commuter * tail2,   lengths additive
//   core = v conjugated by rotor, a cyclic permutation of v
//   commuter commutes with v letter by letter
//   every vertex of rotor and commuter commutes with every vertex of tail1
//   w^g = core^(tail1 * tail2)         lg(w^g) = lg(core) + 2 lg(tail1 * tail2)
//
// In particular tail1 * tail2 is the conjugator of the cyclic reduction of
// w^g and core is its cyclically minimal part.
struct ConjDecomposition {
  GroupElement head;
  GroupElement rotor;
  GroupElement commuter;
  GroupElement tail1;
  GroupElement tail2;
  GroupElement core;
};

// Computes the decomposition above. Verifies every stated identity before
// returning and throws std::logic_error if any fails.
ConjDecomposition conjugate_decompose(const GroupElement& w,
                                      const GroupElement& g);

}  // namespace pcg
