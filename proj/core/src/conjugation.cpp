#include "pcg/conjugation.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcg {

namespace {

// Greatest common left divisor, computed by greedy letter extraction. The
// common left divisors are closed under join, so the greedy fixpoint is the
// unique maximal one.
GroupElement greatest_common_left_divisor(GroupElement x, GroupElement y) {
  const auto& g = x.graph();
  std::vector<Letter> acc;
  for (;;) {
    auto fx = first_letters(x);
    auto fy = first_letters(y);
    Letter pick{};
    bool found = false;
    for (Letter a : fx) {
      if (std::find(fy.begin(), fy.end(), a) == fy.end()) continue;
      if (!found || letter_less(a, pick)) {
        pick = a;
        found = true;
      }
    }
    if (!found) break;
    acc.push_back(pick);
    GroupElement inv = GroupElement::from_letters(g, {pick.inverse()});
    x = inv * x;
    y = inv * y;
  }
  return from_geodesic_unchecked(g, std::move(acc));
}

bool commutes_with_all(const CommutationGraph& g, int vertex, VertexSet s) {
  for (int y : s.indices())
    if (!g.commutes(vertex, y)) return false;
  return true;
}

void require(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("conjugate_decompose: violated: ") +
                           what);
}

}  // namespace

ConjDecomposition conjugate_decompose(const GroupElement& w,
                                      const GroupElement& g) {
  if (&w.graph() != &g.graph())
    throw DomainError("conjugate_decompose across different groups");
  const auto& graph = w.graph();
  auto [u, v] = cyclic_reduce(w);

  // Maximal cancellation between the back of u and the front of g.
  GroupElement head = greatest_common_left_divisor(u.inverse(), g);
  GroupElement tail1 = u * head;
  GroupElement g_rem = head.inverse() * g;

  VertexSet alpha_t1 = tail1.support();
  VertexSet alpha_v = v.support();
  GroupElement v_cur = v;
  std::vector<Letter> rotor_letters, commuter_letters;

  for (;;) {
    Letter pick{};
    bool found = false, pick_rotor = false;
    auto firsts_v = first_letters(v_cur);
    auto lasts_v = last_letters(v_cur);
    for (Letter l : first_letters(g_rem)) {
      if (!commutes_with_all(graph, l.vertex, alpha_t1)) continue;
      bool rotates =
          std::find(firsts_v.begin(), firsts_v.end(), l) != firsts_v.end() ||
          std::find(lasts_v.begin(), lasts_v.end(), l.inverse()) !=
              lasts_v.end();
      bool commutes = commutes_with_all(graph, l.vertex, alpha_v);
      if (!rotates && !commutes) continue;
      // Rotation wins over commuting; then ShortLex-least letter.
      if (!found || (rotates && !pick_rotor) ||
          (rotates == pick_rotor && letter_less(l, pick))) {
        pick = l;
        found = true;
        pick_rotor = rotates;
      }
    }
    if (!found) break;
    if (pick_rotor) {
      rotor_letters.push_back(pick);
      v_cur = v_cur.conjugated_by(GroupElement::from_letters(graph, {pick}));
    } else {
      commuter_letters.push_back(pick);
    }
    g_rem = GroupElement::from_letters(graph, {pick.inverse()}) * g_rem;
  }

  ConjDecomposition out;
  out.head = head;
  out.rotor = from_geodesic_unchecked(graph, std::move(rotor_letters));
  out.commuter = from_geodesic_unchecked(graph, std::move(commuter_letters));
  out.tail1 = tail1;
  out.tail2 = g_rem;
  out.core = v_cur;

  // Contract checks; cheap relative to the extraction above.
  require(u == out.tail1 * out.head.inverse() &&
              u.length() == out.tail1.length() + out.head.length(),
          "u = tail1 * head^-1 additively");
  require(g == out.head * out.rotor * out.commuter * out.tail2,
          "g = head * rotor * commuter * tail2");
  require(g.length() == out.head.length() + out.rotor.length() +
                            out.commuter.length() + out.tail2.length(),
          "lg(g) adds over the factors");
  require(out.core == v.conjugated_by(out.rotor) &&
              out.core.length() == v.length(),
          "core is the rotor shift of the cyclic part");
  require(is_cyclically_minimal(out.core), "core is cyclically minimal");
  require(out.rotor.support().subset_of(v.support()),
          "rotor is supported inside the cyclic part");
  require(out.commuter * v == v * out.commuter, "commuter commutes with core");
  for (int x : (out.rotor.support() | out.commuter.support()).indices())
    require(commutes_with_all(graph, x, alpha_t1),
            "rotor and commuter commute with tail1");
  GroupElement d = out.tail1 * out.tail2;
  require(d.length() == out.tail1.length() + out.tail2.length(),
          "lg(tail1 * tail2) is additive");
  GroupElement conj = w.conjugated_by(g);
  require(conj == out.core.conjugated_by(d), "w^g = core^(tail1 tail2)");
  require(conj.length() == out.core.length() + 2 * d.length(),
          "lg(w^g) = lg(core) + 2 lg(tail1 tail2)");
  return out;
}

}  // namespace pcg
