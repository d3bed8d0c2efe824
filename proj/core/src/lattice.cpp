#include "pcg/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "pcg/errors.hpp"
#include "pcg/word.hpp"

namespace pcg {

namespace {

void check_canonical_centraliser(const QuasiparabolicSubgroup& q,
                                 const char* op) {
  if (!q.conj().is_identity())
    throw DomainError(std::string(op) + ": entries must be canonical");
  if (!is_centraliser(q))
    throw DomainError(std::string(op) + ": entry is not a centraliser");
}

bool word_less(const GroupElement& a, const GroupElement& b) {
  return shortlex_less(a, b);
}

std::vector<std::pair<int, int>> key_of(const GroupElement& w) {
  std::vector<std::pair<int, int>> k;
  k.reserve(w.length());
  for (const Letter& l : w.word()) k.emplace_back(l.vertex, l.sign);
  return k;
}

// Canonical forms of every element of length at most radius, ShortLex
// sorted.
std::vector<GroupElement> elements_of_ball(const CommutationGraph& g,
                                           int radius) {
  std::vector<GroupElement> layer{GroupElement::identity(g)};
  std::vector<GroupElement> all = layer;
  std::set<std::vector<std::pair<int, int>>> seen{key_of(layer.front())};
  for (int r = 1; r <= radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : layer)
      for (int v = 0; v < g.size(); ++v)
        for (int sign : {1, -1}) {
          GroupElement y =
              x * GroupElement::from_letters(g, {Letter{v, sign}});
          if (static_cast<int>(y.length()) != r) continue;
          if (seen.insert(key_of(y)).second) next.push_back(y);
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), word_less);
  return all;
}

}  // namespace

std::vector<ParabolicSubgroup> cpad_chain(const QuasiparabolicSubgroup& c,
                                          const QuasiparabolicSubgroup& d) {
  if (&c.graph() != &d.graph()) throw DomainError("cpad_chain: mixed graphs");
  const CommutationGraph& g = c.graph();
  check_canonical_centraliser(c, "cpad_chain");
  check_canonical_centraliser(d, "cpad_chain");
  if (!contains_subgroup(c, d) || subgroup_equal(c, d))
    throw DomainError("cpad_chain: not a strict chain");
  if (block_difference(d, c) == 0)
    throw DomainError("cpad_chain: no block difference");

  std::vector<int> ts;
  for (const auto& v : d.blocks()) {
    bool shared = false;
    for (const auto& u : c.blocks())
      if (u == v) {
        shared = true;
        break;
      }
    if (!shared) ts.push_back(v.support().indices().front());
  }

  GroupElement one = GroupElement::identity(g);
  std::vector<VertexSet> ys;
  VertexSet raw = d.z_set();
  for (int t : ts) {
    raw = raw.with(t);
    ys.push_back(g.closure(raw));
  }

  std::vector<ParabolicSubgroup> out;
  out.push_back(parabolic_part(c));
  for (std::size_t i = ys.size(); i-- > 0;)
    out.push_back(make_parabolic(g, ys[i], one));
  out.push_back(parabolic_part(d));

  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (!out[i + 1].y.subset_of(out[i].y) || out[i + 1].y == out[i].y)
      throw std::logic_error("cpad_chain: padding chain is not strict");
  return out;
}

std::vector<ParabolicSubgroup> parabolicize_chain(
    const CentraliserChain& chain) {
  if (chain.empty()) throw DomainError("parabolicize_chain: empty chain");
  const CommutationGraph& g = chain.front().graph();
  for (const auto& q : chain) {
    if (&q.graph() != &g) throw DomainError("parabolicize_chain: mixed graphs");
    check_canonical_centraliser(q, "parabolicize_chain");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!contains_subgroup(chain[i], chain[i + 1]) ||
        subgroup_equal(chain[i], chain[i + 1]))
      throw DomainError("parabolicize_chain: not a strictly descending chain");
  if (!chain.front().blocks().empty() || !chain.back().blocks().empty())
    throw DomainError("endpoints not parabolic");

  std::vector<ParabolicSubgroup> out;
  out.push_back(parabolic_part(chain.front()));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const QuasiparabolicSubgroup& cur = chain[i];
    const QuasiparabolicSubgroup& nxt = chain[i + 1];
    if (block_difference(nxt, cur) > 0) {
      std::vector<ParabolicSubgroup> seg = cpad_chain(cur, nxt);
      if (seg.front().y != out.back().y)
        throw std::logic_error("parabolicize_chain: segment junction mismatch");
      out.insert(out.end(), seg.begin() + 1, seg.end());
    } else if (parabolic_difference(cur, nxt) > 0) {
      out.push_back(parabolic_part(nxt));
    } else if (parabolic_part(nxt).y != out.back().y) {
      throw std::logic_error(
          "parabolicize_chain: parabolic parts differ on a neutral step");
    }
  }

  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (!out[i + 1].y.subset_of(out[i].y) || out[i + 1].y == out[i].y)
      throw std::logic_error("parabolicize_chain: output chain is not strict");
  if (out.size() < chain.size())
    throw std::logic_error("parabolicize_chain: output shorter than input");
  return out;
}

bool verify_chain(const CentraliserChain& chain) {
  if (chain.empty()) return false;
  const CommutationGraph& g = chain.front().graph();
  for (const auto& q : chain) {
    if (&q.graph() != &g) return false;
    if (!is_centraliser(q)) return false;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!contains_subgroup(chain[i], chain[i + 1])) return false;
    if (subgroup_equal(chain[i], chain[i + 1])) return false;
  }
  return true;
}

std::size_t centraliser_lattice_height(const CommutationGraph& g) {
  return static_cast<std::size_t>(lattice_height(enumerate_closed_sets(g)).height);
}

CentraliserChain witness_chain(const CommutationGraph& g) {
  HeightResult hr = lattice_height(enumerate_closed_sets(g));
  GroupElement one = GroupElement::identity(g);
  CentraliserChain out;
  for (VertexSet s : hr.witness) out.push_back(standardize(g, {}, s, one));
  return out;
}

ChainSearchResult search_longest_chain(const CommutationGraph& g, int radius,
                                       std::size_t samples,
                                       std::uint64_t seed) {
  std::vector<GroupElement> words = elements_of_ball(g, radius);
  if (!words.empty() && words.front().is_identity())
    words.erase(words.begin());

  ChainSearchResult res;
  res.chains_tried = samples;
  res.best_chain.push_back(whole_group(g));
  if (words.empty()) return res;

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    CentraliserChain chain{whole_group(g)};
    int misses = 0;
    while (misses < 24) {
      const GroupElement& w = words[rng() % words.size()];
      QuasiparabolicSubgroup next =
          intersect_quasiparabolic(chain.back(), centraliser_of_element(w));
      if (subgroup_equal(next, chain.back())) {
        ++misses;
        continue;
      }
      chain.push_back(std::move(next));
      misses = 0;
    }
    if (chain.size() - 1 > res.best_length) {
      res.best_length = chain.size() - 1;
      res.best_chain = std::move(chain);
    }
  }
  return res;
}

}  // namespace pcg
