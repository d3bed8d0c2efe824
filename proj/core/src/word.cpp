#include "pcg/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "pcg/errors.hpp"

namespace pcg {

namespace detail {

// Deletes the leftmost cancellable pair: positions i < j with the same vertex
// and opposite signs such that every letter strictly between them commutes
// with that vertex. Repeats until no pair remains; the result is geodesic.
std::vector<Letter> reduce_word(const CommutationGraph& g,
                                std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          if (w[j].sign == -w[i].sign) {
            w.erase(w.begin() + j);
            w.erase(w.begin() + i);
            changed = true;
          }
          break;  // same vertex, same sign: blocks any further pairing
        }
        if (!g.adjacent(w[i].vertex, w[j].vertex)) break;
      }
    }
  }
  return w;
}

std::vector<Letter> normalise_geodesic(const CommutationGraph& g,
                                       std::vector<Letter> w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  while (!w.empty()) {
    // Pick the least letter that can be moved to the front.
    std::size_t best = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      bool frontable = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (w[j].vertex == w[i].vertex || !g.adjacent(w[j].vertex, w[i].vertex)) {
          frontable = false;
          break;
        }
      }
      if (frontable && (best == w.size() || letter_less(w[i], w[best])))
        best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace detail

GroupElement from_geodesic_unchecked(const CommutationGraph& g,
                                     std::vector<Letter> w) {
  return GroupElement(&g, detail::normalise_geodesic(g, std::move(w)));
}

GroupElement GroupElement::from_letters(const CommutationGraph& g,
                                        std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.vertex < 0 || l.vertex >= g.size())
      throw DomainError("letter vertex out of range");
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +-1");
  }
  return from_geodesic_unchecked(g, detail::reduce_word(g, std::move(letters)));
}

VertexSet GroupElement::support() const {
  VertexSet s;
  for (const Letter& l : word_) s = s.with(l.vertex);
  return s;
}

GroupElement GroupElement::inverse() const {
  std::vector<Letter> w(word_.rbegin(), word_.rend());
  for (Letter& l : w) l.sign = -l.sign;
  return from_geodesic_unchecked(*graph_, std::move(w));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.graph_ != b.graph_)
    throw DomainError("product of elements of different groups");
  std::vector<Letter> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return GroupElement::from_letters(*a.graph_, std::move(w));
}

GroupElement GroupElement::pow(long long n) const {
  GroupElement base = n >= 0 ? *this : inverse();
  unsigned long long k = n >= 0 ? static_cast<unsigned long long>(n)
                                : 0ull - static_cast<unsigned long long>(n);
  GroupElement acc = GroupElement::identity(*graph_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

GroupElement GroupElement::conjugated_by(const GroupElement& c) const {
  return c.inverse() * (*this) * c;
}

bool shortlex_less(const GroupElement& a, const GroupElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    if (a.word_[i] != b.word_[i]) return letter_less(a.word_[i], b.word_[i]);
  }
  return false;
}

std::vector<Letter> first_letters(const GroupElement& w) {
  const auto& g = w.graph();
  const auto& v = w.word();
  std::vector<Letter> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool frontable = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (v[j].vertex == v[i].vertex || !g.adjacent(v[j].vertex, v[i].vertex)) {
        frontable = false;
        break;
      }
    }
    if (frontable) out.push_back(v[i]);
  }
  std::sort(out.begin(), out.end(), letter_less);
  return out;
}

std::vector<Letter> last_letters(const GroupElement& w) {
  auto out = first_letters(w.inverse());
  for (Letter& l : out) l.sign = -l.sign;
  std::sort(out.begin(), out.end(), letter_less);
  return out;
}

bool divides(const GroupElement& u, const GroupElement& w, Side side) {
  GroupElement rest = side == Side::Left ? u.inverse() * w : w * u.inverse();
  return rest.length() == w.length() - u.length();
}

namespace {

void collect_divisors(const GroupElement& w, std::set<std::vector<Letter>>& seen,
                      std::vector<GroupElement>& out, const GroupElement& prefix) {
  if (!seen.insert(prefix.word()).second) return;
  out.push_back(prefix);
  for (Letter l : first_letters(w)) {
    GroupElement next_prefix =
        prefix * GroupElement::from_letters(w.graph(), {l});
    GroupElement rest =
        GroupElement::from_letters(w.graph(), {l.inverse()}) * w;
    collect_divisors(rest, seen, out, next_prefix);
  }
}

}  // namespace

std::vector<GroupElement> divisors(const GroupElement& w, Side side) {
  if (side == Side::Right) {
    auto left = divisors(w.inverse(), Side::Left);
    for (auto& d : left) d = d.inverse();
    std::sort(left.begin(), left.end(), shortlex_less);
    return left;
  }
  std::set<std::vector<Letter>> seen;
  std::vector<GroupElement> out;
  collect_divisors(w, seen, out, GroupElement::identity(w.graph()));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<GroupElement> left_divisors_of_length(const GroupElement& w,
                                                  int length) {
  const auto& g = w.graph();
  // BFS level by level; deduplicate rests, which determine the divisors.
  std::vector<std::pair<GroupElement, GroupElement>> level{
      {GroupElement::identity(g), w}};
  for (int step = 0; step < length; ++step) {
    std::set<std::vector<Letter>> seen;
    std::vector<std::pair<GroupElement, GroupElement>> next;
    for (const auto& [prefix, rest] : level) {
      for (Letter l : first_letters(rest)) {
        GroupElement nrest = GroupElement::from_letters(g, {l.inverse()}) * rest;
        if (!seen.insert(nrest.word()).second) continue;
        next.emplace_back(prefix * GroupElement::from_letters(g, {l}),
                          std::move(nrest));
      }
    }
    level = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(level.size());
  for (auto& [prefix, rest] : level) out.push_back(std::move(prefix));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

DivisorSplit greatest_divisor(const GroupElement& w, VertexSet y, Side side) {
  w.graph().check_set(y);
  if (side == Side::Right) {
    auto mirror = greatest_divisor(w.inverse(), y, Side::Left);
    return {mirror.divisor.inverse(), mirror.rest.inverse()};
  }
  const auto& g = w.graph();
  GroupElement rest = w;
  std::vector<Letter> acc;
  for (;;) {
    Letter pick{};
    bool found = false;
    for (Letter l : first_letters(rest)) {
      if (y.contains(l.vertex) && (!found || letter_less(l, pick))) {
        pick = l;
        found = true;
      }
    }
    if (!found) break;
    acc.push_back(pick);
    rest = GroupElement::from_letters(g, {pick.inverse()}) * rest;
  }
  return {from_geodesic_unchecked(g, std::move(acc)), rest};
}

CyclicReduction cyclic_reduce(const GroupElement& w) {
  const auto& g = w.graph();
  GroupElement v = w;
  std::vector<Letter> u_rev;  // letters stripped from the right, newest first
  for (;;) {
    auto firsts = first_letters(v);
    auto lasts = last_letters(v);
    Letter pick{};
    bool found = false;
    for (Letter f : firsts) {
      bool closes = std::any_of(lasts.begin(), lasts.end(), [&](Letter l) {
        return l == f.inverse();
      });
      if (closes && (!found || f.vertex < pick.vertex)) {
        pick = f;
        found = true;
      }
    }
    if (!found) break;
    // v = pick * v' * pick^{-1}; strip both ends.
    v = GroupElement::from_letters(g, {pick.inverse()}) * v *
        GroupElement::from_letters(g, {pick});
    u_rev.push_back(pick.inverse());
  }
  std::vector<Letter> u(u_rev.rbegin(), u_rev.rend());
  return {from_geodesic_unchecked(g, std::move(u)), v};
}

bool is_cyclically_minimal(const GroupElement& w) {
  return cyclic_reduce(w).conjugator.is_identity();
}

std::vector<GroupElement> cyclic_shifts(const GroupElement& w) {
  if (!is_cyclically_minimal(w))
    throw DomainError("cyclic_shifts requires a cyclically minimal element");
  // All two-part geodesic splits w = w1 * w2, rotated to w2 * w1.
  std::set<std::vector<Letter>> seen;
  std::vector<GroupElement> out;
  for (const GroupElement& w1 : divisors(w, Side::Left)) {
    GroupElement shifted = w.conjugated_by(w1);
    if (seen.insert(shifted.word()).second) out.push_back(shifted);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

BlockDecomposition block_decomposition(const GroupElement& w) {
  auto [u, v] = cyclic_reduce(w);
  const auto& g = w.graph();
  BlockDecomposition out;
  out.conjugator = u;
  for (VertexSet comp : g.delta_components(v.support())) {
    out.blocks.push_back(greatest_divisor(v, comp, Side::Left).divisor);
  }
  return out;
}

Root root(const GroupElement& w) {
  if (w.is_identity())
    throw DomainError("the identity has no primitive root");
  auto [u, v] = cyclic_reduce(w);
  const auto& g = w.graph();
  // Per block, a root of v is a product of roots of the blocks with a common
  // exponent. Compute each block's primitive root by trying shift candidates.
  auto blocks = block_decomposition(v).blocks;
  auto block_root = [&](const GroupElement& b) -> Root {
    int n = b.length();
    for (int piece = 1; piece <= n; ++piece) {
      if (n % piece != 0) continue;
      int e = n / piece;
      // A root of exponent e is cyclically minimal of length n/e and
      // left-divides b, so scanning divisors of that length is exhaustive.
      for (const GroupElement& r : left_divisors_of_length(b, piece)) {
        if (r.pow(e) == b) return {r, e};
      }
    }
    return {b, 1};
  };
  if (blocks.empty()) return {w, 1};  // unreachable: w != 1
  std::vector<Root> roots;
  roots.reserve(blocks.size());
  int common = 0;
  for (const auto& b : blocks) {
    Root r = block_root(b);
    roots.push_back(r);
    common = common == 0 ? r.exponent : std::gcd(common, r.exponent);
  }
  GroupElement base = GroupElement::identity(g);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    base = base * roots[i].base.pow(roots[i].exponent / common);
  }
  return {base.conjugated_by(u), common};
}

}  // namespace pcg
