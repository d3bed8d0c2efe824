#pragma once

#include <cstddef>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/word.hpp"

namespace pcg {

// G(Y)^conj, a conjugate of the subgroup generated by the vertices in Y.
// Built through make_parabolic, which strips the G(Y)-part of the
// conjugator.
struct ParabolicSubgroup {
  VertexSet y;
  GroupElement conj;

  const CommutationGraph& graph() const { return conj.graph(); }
};

ParabolicSubgroup make_parabolic(const CommutationGraph& g, VertexSet y,
                                 const GroupElement& conj);

// Q(w1, ..., wk; Z)^conj = (<w1> x ... x <wk> x G(Z))^conj in standard
// form:
//   * every wi is a cyclically minimal root with at least two vertices in
//     its support,
//   * the supports of the wi are exactly the delta components of their
//     union, so distinct blocks commute letterwise,
//   * Z is disjoint from the block supports and centralises them,
//   * blocks are stored as the ShortLex-least of {wi, wi^-1}, sorted.
// A parabolic subgroup is the special case with no blocks. Construct
// through standardize.
class QuasiparabolicSubgroup {
public:
  const CommutationGraph& graph() const { return *graph_; }
  const std::vector<GroupElement>& blocks() const { return blocks_; }
  VertexSet z_set() const { return z_; }
  const GroupElement& conj() const { return conj_; }

private:
  QuasiparabolicSubgroup(const CommutationGraph* g,
                         std::vector<GroupElement> blocks, VertexSet z,
                         GroupElement conj)
      : graph_(g), blocks_(std::move(blocks)), z_(z), conj_(std::move(conj)) {}

  friend QuasiparabolicSubgroup standardize(const CommutationGraph& g,
                                            std::vector<GroupElement> blocks,
                                            VertexSet z,
                                            const GroupElement& conj);

  const CommutationGraph* graph_;
  std::vector<GroupElement> blocks_;
  VertexSet z_;
  GroupElement conj_;
};

// Normalises (blocks, z, conj) to the standard form above. Accepts single
// letter blocks and folds them into Z; everything else must already satisfy
// the block conditions or a DomainError is raised. Left divisors of the
// conjugator lying in the subgroup are stripped.
QuasiparabolicSubgroup standardize(const CommutationGraph& g,
                                   std::vector<GroupElement> blocks,
                                   VertexSet z, const GroupElement& conj);

QuasiparabolicSubgroup whole_group(const CommutationGraph& g);
QuasiparabolicSubgroup as_quasiparabolic(const ParabolicSubgroup& p);

// C(w) = (<r1> x ... x <rm> x G(a(v)^perp \ a(v)))^u where w = u^-1 v u
// with v cyclically minimal and ri is the root of the i-th block of v.
QuasiparabolicSubgroup centraliser_of_element(const GroupElement& w);

// Centraliser of a finite set, C({}) being the whole group.
QuasiparabolicSubgroup centraliser_of_set(const CommutationGraph& g,
                                          const std::vector<GroupElement>& s);

// G(Y)^a meet G(Z)^b, again parabolic.
ParabolicSubgroup intersect_parabolic(const ParabolicSubgroup& p1,
                                      const ParabolicSubgroup& p2);

// Meet of two quasiparabolic subgroups, again quasiparabolic.
QuasiparabolicSubgroup intersect_quasiparabolic(
    const QuasiparabolicSubgroup& q1, const QuasiparabolicSubgroup& q2);

bool contains(const ParabolicSubgroup& p, const GroupElement& x);
bool contains(const QuasiparabolicSubgroup& q, const GroupElement& x);

// Conjugated generators: the blocks and the Z vertices, each under conj.
std::vector<GroupElement> generators(const QuasiparabolicSubgroup& q);

bool contains_subgroup(const QuasiparabolicSubgroup& h,
                       const QuasiparabolicSubgroup& k);
bool subgroup_equal(const QuasiparabolicSubgroup& h,
                    const QuasiparabolicSubgroup& k);

// Rank of Q(w1..wk; Z) is the pair (|Z|, k), compared left to right.
struct Rank {
  std::size_t z_size = 0;
  std::size_t block_count = 0;

  friend bool operator==(Rank a, Rank b) {
    return a.z_size == b.z_size && a.block_count == b.block_count;
  }
  friend bool operator!=(Rank a, Rank b) { return !(a == b); }
};

bool rank_less(Rank a, Rank b);
Rank rank(const QuasiparabolicSubgroup& q);

// Whether the subgroup is the centraliser of some subset of the group.
// With Y the parabolic part, w the product of the blocks and
// Z = a(w)^perp \ a(w), this holds exactly when Y is closed in the whole
// graph and closed in the subgraph induced on Z. Ignores the conjugator.
bool is_centraliser(const QuasiparabolicSubgroup& q);

// A finite set S with C(S) = q, namely the product of the blocks together
// with the vertices of O^Z(Y), all under the conjugator. Raises
// DomainError when q is not a centraliser.
std::vector<GroupElement> present_as_centraliser(
    const QuasiparabolicSubgroup& q);

// Join inside the parabolic centraliser lattice. Supports canonical
// subgroups over closed sets only.
ParabolicSubgroup parabolic_join(const ParabolicSubgroup& p1,
                                 const ParabolicSubgroup& p2);

// P(Q) = G(Z)^conj, the parabolic part.
ParabolicSubgroup parabolic_part(const QuasiparabolicSubgroup& q);

// b(Q, R) = number of blocks of Q that are not blocks of R, and
// p(Q, R) = |Z_Q \ Z_R|. Both require canonical forms (trivial
// conjugators).
std::size_t block_difference(const QuasiparabolicSubgroup& q,
                             const QuasiparabolicSubgroup& r);
std::size_t parabolic_difference(const QuasiparabolicSubgroup& q,
                                 const QuasiparabolicSubgroup& r);

}  // namespace pcg
