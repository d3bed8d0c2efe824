#include "pcg/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>

#include "pcg/errors.hpp"

namespace pcg::oracle {

namespace {

void check_graph(const CommutationGraph& g) {
  if (g.size() > 5) throw DomainError("oracle: graph limit exceeded");
}

void check_radius(int radius) {
  if (radius < 0 || radius > 4)
    throw DomainError("oracle: radius limit exceeded");
}

void check_word(const CommutationGraph& g, const std::vector<Letter>& w) {
  if (w.size() > 6) throw DomainError("oracle: word length limit exceeded");
  for (const Letter& l : w)
    if (l.vertex < 0 || l.vertex >= g.size() || (l.sign != 1 && l.sign != -1))
      throw DomainError("oracle: bad letter");
}

std::vector<int> enc(const std::vector<Letter>& w) {
  std::vector<int> k;
  k.reserve(w.size());
  for (const Letter& l : w) k.push_back(l.vertex * 2 + (l.sign < 0 ? 1 : 0));
  return k;
}

bool lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!(a[i] == b[i])) return letter_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

bool shortlex(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

// All words reachable from w by swapping adjacent commuting letters. The
// input must be geodesic, so the class is cancellation free.
std::vector<std::vector<Letter>> swap_class(const CommutationGraph& g,
                                            const std::vector<Letter>& w) {
  std::set<std::vector<int>> seen{enc(w)};
  std::vector<std::vector<Letter>> out, stack{w};
  while (!stack.empty()) {
    std::vector<Letter> cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].vertex == cur[i + 1].vertex) continue;
      if (!g.adjacent(cur[i].vertex, cur[i + 1].vertex)) continue;
      std::vector<Letter> next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(enc(next)).second) stack.push_back(next);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

// Exhaustive reduction: explore the swap class, restart from any word a
// cancellation shortens, and return the lexicographically least word of
// the final class.
std::vector<Letter> bnf(const CommutationGraph& g, std::vector<Letter> w) {
  for (;;) {
    std::set<std::vector<int>> seen{enc(w)};
    std::vector<std::vector<Letter>> stack{w};
    std::vector<Letter> best = w;
    bool shrunk = false;
    while (!stack.empty()) {
      std::vector<Letter> cur = std::move(stack.back());
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i].vertex == cur[i + 1].vertex &&
            cur[i].sign != cur[i + 1].sign) {
          std::vector<Letter> shorter(cur.begin(), cur.begin() + i);
          shorter.insert(shorter.end(), cur.begin() + i + 2, cur.end());
          w = std::move(shorter);
          shrunk = true;
          break;
        }
      }
      if (shrunk) break;
      if (lex_less(cur, best)) best = cur;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i].vertex == cur[i + 1].vertex) continue;
        if (!g.adjacent(cur[i].vertex, cur[i + 1].vertex)) continue;
        std::vector<Letter> next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(enc(next)).second) stack.push_back(next);
      }
    }
    if (!shrunk) return best;
  }
}

std::vector<Letter> concat(const std::vector<Letter>& a,
                           const std::vector<Letter>& b) {
  std::vector<Letter> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

VertexSet brute_complement(const CommutationGraph& g, VertexSet y,
                           VertexSet z) {
  VertexSet out;
  for (int u : z.indices()) {
    bool ok = true;
    for (int v : y.indices())
      if (!g.commutes(u, v)) {
        ok = false;
        break;
      }
    if (ok) out = out.with(u);
  }
  return out;
}

}  // namespace

std::vector<Letter> brute_normal_form(const CommutationGraph& g,
                                      const std::vector<Letter>& w) {
  check_graph(g);
  check_word(g, w);
  return bnf(g, w);
}

bool brute_equal(const CommutationGraph& g, const std::vector<Letter>& u,
                 const std::vector<Letter>& w) {
  check_graph(g);
  check_word(g, u);
  check_word(g, w);
  return bnf(g, u) == bnf(g, w);
}

std::vector<std::vector<Letter>> ball(const CommutationGraph& g, int radius) {
  check_graph(g);
  check_radius(radius);
  std::vector<std::vector<Letter>> all{{}}, layer{{}};
  std::set<std::vector<int>> seen{{}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::vector<Letter>> next;
    for (const auto& x : layer)
      for (int v = 0; v < g.size(); ++v)
        for (int sign : {1, -1}) {
          std::vector<Letter> y = bnf(g, concat(x, {Letter{v, sign}}));
          if (static_cast<int>(y.size()) != r) continue;
          if (seen.insert(enc(y)).second) next.push_back(y);
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), shortlex);
  return all;
}

std::vector<std::vector<Letter>> brute_centraliser(
    const CommutationGraph& g, const std::vector<std::vector<Letter>>& gens,
    int radius) {
  for (const auto& s : gens) check_word(g, s);
  std::vector<std::vector<Letter>> out;
  for (const auto& x : ball(g, radius)) {
    bool commutes_all = true;
    for (const auto& s : gens)
      if (bnf(g, concat(x, s)) != bnf(g, concat(s, x))) {
        commutes_all = false;
        break;
      }
    if (commutes_all) out.push_back(x);
  }
  return out;
}

std::vector<VertexSet> brute_closed_sets(const CommutationGraph& g) {
  check_graph(g);
  VertexSet full = g.full_set();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    VertexSet s{mask};
    if (brute_complement(g, brute_complement(g, s, full), full) == s)
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return set_lex_less(a, b);
  });
  return out;
}

std::pair<std::vector<Letter>, long long> brute_root(
    const CommutationGraph& g, const std::vector<Letter>& w, int radius) {
  check_graph(g);
  check_word(g, w);
  check_radius(radius);
  std::vector<Letter> bw = bnf(g, w);
  if (bw.empty()) throw DomainError("oracle: root of the identity");
  std::vector<std::vector<Letter>> candidates = ball(g, radius);
  for (long long n = static_cast<long long>(bw.size()); n >= 1; --n) {
    for (const auto& r : candidates) {
      if (r.empty()) continue;
      std::vector<Letter> p = r;
      bool too_long = false;
      for (long long k = 2; k <= n; ++k) {
        p = bnf(g, concat(p, r));
        if (p.size() > bw.size()) {
          too_long = true;
          break;
        }
      }
      if (!too_long && p == bw) return {r, n};
    }
  }
  throw DomainError("oracle: radius too small for root");
}

std::vector<std::vector<Letter>> brute_divisors(const CommutationGraph& g,
                                                const std::vector<Letter>& w,
                                                Side side) {
  check_graph(g);
  check_word(g, w);
  std::vector<Letter> bw = bnf(g, w);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Letter>> out;
  for (const auto& rep : swap_class(g, bw)) {
    for (std::size_t len = 0; len <= rep.size(); ++len) {
      std::vector<Letter> part =
          side == Side::Left
              ? std::vector<Letter>(rep.begin(), rep.begin() + len)
              : std::vector<Letter>(rep.end() - len, rep.end());
      std::vector<Letter> nf = bnf(g, part);
      if (seen.insert(enc(nf)).second) out.push_back(std::move(nf));
    }
  }
  std::sort(out.begin(), out.end(), shortlex);
  return out;
}

}  // namespace pcg::oracle
