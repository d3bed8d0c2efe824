#pragma once

#include <utility>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/word.hpp"

namespace pcg::oracle {

// Brute-force reference implementations for desk-scale inputs. Everything
// works on raw letter sequences through exhaustive rewriting (commuting
// adjacent swaps and inverse cancellations), sharing only the Letter and
// graph types with the engine. Limits: at most 5 vertices, input words of
// length at most 6, radius at most 4; beyond them a DomainError is raised.

// Lexicographically least geodesic representative of the word.
std::vector<Letter> brute_normal_form(const CommutationGraph& g,
                                      const std::vector<Letter>& w);

bool brute_equal(const CommutationGraph& g, const std::vector<Letter>& u,
                 const std::vector<Letter>& w);

// All distinct elements of length at most radius, as normal forms in
// ShortLex order.
std::vector<std::vector<Letter>> ball(const CommutationGraph& g, int radius);

// Elements of the ball commuting with every one of the given words.
std::vector<std::vector<Letter>> brute_centraliser(
    const CommutationGraph& g, const std::vector<std::vector<Letter>>& gens,
    int radius);

// Closed sets by scanning all subsets, sorted by (size, set-lex).
std::vector<VertexSet> brute_closed_sets(const CommutationGraph& g);

// (r, n) with r^n = w and n maximal, found by scanning the ball for bases.
// The radius must be large enough to contain the root.
std::pair<std::vector<Letter>, long long> brute_root(
    const CommutationGraph& g, const std::vector<Letter>& w, int radius);

// Geodesic divisors of w on one side: prefixes (suffixes) of geodesic
// representatives, as normal forms in ShortLex order.
std::vector<std::vector<Letter>> brute_divisors(const CommutationGraph& g,
                                                const std::vector<Letter>& w,
                                                Side side);

}  // namespace pcg::oracle
