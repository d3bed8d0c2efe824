#include "pcg/subgroup.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "pcg/errors.hpp"

namespace pcg {

namespace {

void check_same_graph(const CommutationGraph& g, const GroupElement& w,
                      const char* op) {
  if (&g != &w.graph()) throw DomainError(std::string(op) + ": mixed graphs");
}

bool word_less(const GroupElement& a, const GroupElement& b) {
  return shortlex_less(a, b);
}

GroupElement block_representative(const GroupElement& b) {
  GroupElement inv = b.inverse();
  return shortlex_less(inv, b) ? inv : b;
}

GroupElement single_letter(const CommutationGraph& g, int v) {
  return GroupElement::from_letters(g, {Letter{v, 1}});
}

}  // namespace

ParabolicSubgroup make_parabolic(const CommutationGraph& g, VertexSet y,
                                 const GroupElement& conj) {
  g.check_set(y);
  check_same_graph(g, conj, "make_parabolic");
  return ParabolicSubgroup{y, greatest_divisor(conj, y, Side::Left).rest};
}

QuasiparabolicSubgroup standardize(const CommutationGraph& g,
                                   std::vector<GroupElement> blocks,
                                   VertexSet z, const GroupElement& conj) {
  g.check_set(z);
  check_same_graph(g, conj, "standardize");
  for (const auto& b : blocks) check_same_graph(g, b, "standardize");

  std::vector<GroupElement> kept;
  for (const auto& b : blocks) {
    if (b.is_identity()) throw DomainError("standardize: trivial block");
    if (!is_cyclically_minimal(b))
      throw DomainError("standardize: block is not cyclically minimal");
    if (root(b).exponent != 1)
      throw DomainError("standardize: block is a proper power");
    if (b.length() == 1) {
      z = z.with(b.word()[0].vertex);
      continue;
    }
    kept.push_back(block_representative(b));
  }

  VertexSet all;
  for (const auto& b : kept) {
    if (!(b.support() & all).empty())
      throw DomainError("standardize: block supports overlap");
    all = all | b.support();
  }

  // Disjoint sets order identically by least vertex and by set-lex, so the
  // supports can be matched against the components positionally.
  std::vector<VertexSet> supports;
  supports.reserve(kept.size());
  for (const auto& b : kept) supports.push_back(b.support());
  std::sort(supports.begin(), supports.end(), set_lex_less);
  std::vector<VertexSet> comps = g.delta_components(all);
  if (comps != supports)
    throw DomainError(
        "standardize: block supports are not the delta components of their "
        "union");

  if (!(z & all).empty())
    throw DomainError("standardize: Z meets the block part");
  if (!z.subset_of(g.perp(all)))
    throw DomainError("standardize: Z does not centralise the block part");

  std::sort(kept.begin(), kept.end(), word_less);

  GroupElement c = conj;
  bool changed = true;
  while (changed) {
    changed = false;
    DivisorSplit s = greatest_divisor(c, z, Side::Left);
    if (!s.divisor.is_identity()) {
      c = s.rest;
      changed = true;
    }
    for (const auto& b : kept) {
      GroupElement binv = b.inverse();
      while (divides(b, c, Side::Left)) {
        c = binv * c;
        changed = true;
      }
      while (divides(binv, c, Side::Left)) {
        c = b * c;
        changed = true;
      }
    }
  }

  return QuasiparabolicSubgroup(&g, std::move(kept), z, std::move(c));
}

QuasiparabolicSubgroup whole_group(const CommutationGraph& g) {
  return standardize(g, {}, g.full_set(), GroupElement::identity(g));
}

QuasiparabolicSubgroup as_quasiparabolic(const ParabolicSubgroup& p) {
  return standardize(p.graph(), {}, p.y, p.conj);
}

QuasiparabolicSubgroup centraliser_of_element(const GroupElement& w) {
  const CommutationGraph& g = w.graph();
  CyclicReduction cr = cyclic_reduce(w);
  std::vector<GroupElement> roots;
  for (const auto& b : block_decomposition(cr.core).blocks)
    roots.push_back(root(b).base);
  VertexSet av = cr.core.support();
  return standardize(g, std::move(roots), g.perp(av) - av, cr.conjugator);
}

QuasiparabolicSubgroup centraliser_of_set(const CommutationGraph& g,
                                          const std::vector<GroupElement>& s) {
  QuasiparabolicSubgroup acc = whole_group(g);
  for (const auto& w : s) {
    check_same_graph(g, w, "centraliser_of_set");
    acc = intersect_quasiparabolic(acc, centraliser_of_element(w));
  }
  return acc;
}

ParabolicSubgroup intersect_parabolic(const ParabolicSubgroup& p1,
                                      const ParabolicSubgroup& p2) {
  if (&p1.graph() != &p2.graph())
    throw DomainError("intersect_parabolic: mixed graphs");
  const CommutationGraph& g = p1.graph();

  // Relative frame g = b a^-1, written as g1 * d * g2 with g1 in G(Z),
  // g2 in G(Y) and d reduced against both.
  GroupElement rel = p2.conj * p1.conj.inverse();
  GroupElement r = greatest_divisor(rel, p2.y, Side::Left).rest;
  DivisorSplit s = greatest_divisor(r, p1.y, Side::Right);
  VertexSet t = g.perp(s.rest.support());
  return make_parabolic(g, p1.y & p2.y & t, s.divisor * p1.conj);
}

QuasiparabolicSubgroup intersect_quasiparabolic(
    const QuasiparabolicSubgroup& q1, const QuasiparabolicSubgroup& q2) {
  if (&q1.graph() != &q2.graph())
    throw DomainError("intersect_quasiparabolic: mixed graphs");
  const CommutationGraph& g = q1.graph();
  const std::vector<GroupElement>& ub = q1.blocks();
  const std::vector<GroupElement>& vb = q2.blocks();
  VertexSet y = q1.z_set();
  VertexSet z = q2.z_set();

  GroupElement rel = q2.conj() * q1.conj().inverse();

  // Left divisors of rel lying in Q(v, Z) are absorbed by the subgroup.
  bool changed = true;
  while (changed) {
    changed = false;
    DivisorSplit s = greatest_divisor(rel, z, Side::Left);
    if (!s.divisor.is_identity()) {
      rel = s.rest;
      changed = true;
    }
    for (const auto& v : vb) {
      GroupElement vinv = v.inverse();
      while (divides(v, rel, Side::Left)) {
        rel = vinv * rel;
        changed = true;
      }
      while (divides(vinv, rel, Side::Left)) {
        rel = v * rel;
        changed = true;
      }
    }
  }

  // rel = d * h with h the greatest right divisor in G(Y). The middle part
  // d then carries no G(Z) letters on the left and no G(Y) letters on the
  // right, which pins the block matching below.
  DivisorSplit hs = greatest_divisor(rel, y, Side::Right);
  GroupElement h = hs.divisor;
  GroupElement d = hs.rest;
  GroupElement dinv = d.inverse();

  std::vector<GroupElement> vconj;
  vconj.reserve(vb.size());
  for (const auto& v : vb) vconj.push_back(v.conjugated_by(d));

  std::vector<GroupElement> out_blocks;
  std::vector<char> u_used(ub.size(), 0), v_used(vb.size(), 0);

  // Matched pairs, <vj>^d = <ui>.
  for (std::size_t j = 0; j < vb.size(); ++j) {
    for (std::size_t i = 0; i < ub.size(); ++i) {
      if (u_used[i]) continue;
      if (vconj[j] == ub[i] || vconj[j] == ub[i].inverse()) {
        out_blocks.push_back(ub[i]);
        u_used[i] = 1;
        v_used[j] = 1;
        break;
      }
    }
  }
  // Unmatched blocks of q2 whose conjugate lands in G(Y).
  for (std::size_t j = 0; j < vb.size(); ++j) {
    if (v_used[j] || !vconj[j].support().subset_of(y)) continue;
    if (!is_cyclically_minimal(vconj[j]) || root(vconj[j]).exponent != 1)
      throw std::logic_error(
          "intersect_quasiparabolic: conjugated block is not a cyclically "
          "minimal root");
    out_blocks.push_back(vconj[j]);
  }
  // Unmatched blocks of q1 lying in G(Z)^d.
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (u_used[i]) continue;
    if (ub[i].conjugated_by(dinv).support().subset_of(z))
      out_blocks.push_back(ub[i]);
  }

  VertexSet t = g.perp(d.support());
  return standardize(g, std::move(out_blocks), y & z & t, h * q1.conj());
}

bool contains(const ParabolicSubgroup& p, const GroupElement& x) {
  check_same_graph(p.graph(), x, "contains");
  return x.conjugated_by(p.conj.inverse()).support().subset_of(p.y);
}

bool contains(const QuasiparabolicSubgroup& q, const GroupElement& x) {
  check_same_graph(q.graph(), x, "contains");
  GroupElement rest = x.conjugated_by(q.conj().inverse());
  for (const auto& b : q.blocks()) {
    DivisorSplit s = greatest_divisor(rest, b.support(), Side::Left);
    if (!s.divisor.is_identity()) {
      long long dl = static_cast<long long>(s.divisor.length());
      long long bl = static_cast<long long>(b.length());
      if (dl % bl != 0) return false;
      long long m = dl / bl;
      if (s.divisor != b.pow(m) && s.divisor != b.pow(-m)) return false;
    }
    rest = s.rest;
  }
  return rest.support().subset_of(q.z_set());
}

std::vector<GroupElement> generators(const QuasiparabolicSubgroup& q) {
  const CommutationGraph& g = q.graph();
  std::vector<GroupElement> out;
  for (const auto& b : q.blocks()) out.push_back(b.conjugated_by(q.conj()));
  for (int v : q.z_set().indices())
    out.push_back(single_letter(g, v).conjugated_by(q.conj()));
  return out;
}

bool contains_subgroup(const QuasiparabolicSubgroup& h,
                       const QuasiparabolicSubgroup& k) {
  if (&h.graph() != &k.graph())
    throw DomainError("contains_subgroup: mixed graphs");
  for (const auto& x : generators(k))
    if (!contains(h, x)) return false;
  return true;
}

bool subgroup_equal(const QuasiparabolicSubgroup& h,
                    const QuasiparabolicSubgroup& k) {
  if (&h.graph() != &k.graph())
    throw DomainError("subgroup_equal: mixed graphs");
  if (h.blocks() == k.blocks() && h.z_set() == k.z_set() &&
      h.conj() == k.conj())
    return true;
  return contains_subgroup(h, k) && contains_subgroup(k, h);
}

bool rank_less(Rank a, Rank b) {
  if (a.z_size != b.z_size) return a.z_size < b.z_size;
  return a.block_count < b.block_count;
}

Rank rank(const QuasiparabolicSubgroup& q) {
  return Rank{static_cast<std::size_t>(q.z_set().size()), q.blocks().size()};
}

bool is_centraliser(const QuasiparabolicSubgroup& q) {
  const CommutationGraph& g = q.graph();
  VertexSet aw;
  for (const auto& b : q.blocks()) aw = aw | b.support();
  VertexSet z = g.perp(aw) - aw;
  return g.is_closed(q.z_set()) && g.is_closed_in(z, q.z_set());
}

std::vector<GroupElement> present_as_centraliser(
    const QuasiparabolicSubgroup& q) {
  if (!is_centraliser(q))
    throw DomainError("present_as_centraliser: subgroup is not a centraliser");
  const CommutationGraph& g = q.graph();
  GroupElement w = GroupElement::identity(g);
  VertexSet aw;
  for (const auto& b : q.blocks()) {
    w = w * b;
    aw = aw | b.support();
  }
  VertexSet z = g.perp(aw) - aw;
  std::vector<GroupElement> out;
  if (!w.is_identity()) out.push_back(w.conjugated_by(q.conj()));
  for (int v : g.orthogonal_complement(q.z_set(), z).indices())
    out.push_back(single_letter(g, v).conjugated_by(q.conj()));
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

ParabolicSubgroup parabolic_join(const ParabolicSubgroup& p1,
                                 const ParabolicSubgroup& p2) {
  if (&p1.graph() != &p2.graph())
    throw DomainError("parabolic_join: mixed graphs");
  if (!p1.conj.is_identity() || !p2.conj.is_identity())
    throw DomainError("unsupported: conjugated join");
  const CommutationGraph& g = p1.graph();
  return make_parabolic(g, g.closed_join(p1.y, p2.y),
                        GroupElement::identity(g));
}

ParabolicSubgroup parabolic_part(const QuasiparabolicSubgroup& q) {
  return make_parabolic(q.graph(), q.z_set(), q.conj());
}

std::size_t block_difference(const QuasiparabolicSubgroup& q,
                             const QuasiparabolicSubgroup& r) {
  if (&q.graph() != &r.graph())
    throw DomainError("block_difference: mixed graphs");
  if (!q.conj().is_identity() || !r.conj().is_identity())
    throw DomainError("block_difference: requires canonical subgroups");
  std::size_t n = 0;
  for (const auto& b : q.blocks()) {
    bool found = false;
    for (const auto& c : r.blocks())
      if (b == c) {
        found = true;
        break;
      }
    if (!found) ++n;
  }
  return n;
}

std::size_t parabolic_difference(const QuasiparabolicSubgroup& q,
                                 const QuasiparabolicSubgroup& r) {
  if (&q.graph() != &r.graph())
    throw DomainError("parabolic_difference: mixed graphs");
  if (!q.conj().is_identity() || !r.conj().is_identity())
    throw DomainError("parabolic_difference: requires canonical subgroups");
  return static_cast<std::size_t>((q.z_set() - r.z_set()).size());
}

}  // namespace pcg
