#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

// One generator occurrence: vertex index and sign (+1 or -1).
struct Letter {
  int vertex;
  int sign;

  Letter inverse() const { return {vertex, -sign}; }
  friend bool operator==(Letter a, Letter b) {
    return a.vertex == b.vertex && a.sign == b.sign;
  }
  friend bool operator!=(Letter a, Letter b) { return !(a == b); }
  // vertex order first, positive before negative; keeps containers of
  // letter sequences in the same order letter_less induces
  friend bool operator<(Letter a, Letter b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.sign > b.sign;
  }
};

// Letter order used by the ShortLex normal form: vertex index ascending,
// positive before negative on the same vertex.
inline bool letter_less(Letter a, Letter b) {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  return a.sign > b.sign;
}

enum class Side { Left, Right };

// A group element held in ShortLex normal form. All operations preserve the
// invariant, so two elements are equal iff their words are equal.
class GroupElement {
 public:
  GroupElement() : graph_(nullptr) {}

  static GroupElement identity(const CommutationGraph& g) {
    return GroupElement(&g, {});
  }
  // Reduces and normalises the given spelling.
  static GroupElement from_letters(const CommutationGraph& g,
                                   std::vector<Letter> letters);

  const CommutationGraph& graph() const { return *graph_; }
  const std::vector<Letter>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  VertexSet support() const;

  GroupElement inverse() const;
  GroupElement pow(long long n) const;
  // c^{-1} * (*this) * c
  GroupElement conjugated_by(const GroupElement& c) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }

  // ShortLex: length first, then letter_less lexicographically.
  friend bool shortlex_less(const GroupElement& a, const GroupElement& b);

 private:
  GroupElement(const CommutationGraph* g, std::vector<Letter> w)
      : graph_(g), word_(std::move(w)) {}

  const CommutationGraph* graph_;
  std::vector<Letter> word_;

  friend GroupElement from_geodesic_unchecked(const CommutationGraph&,
                                              std::vector<Letter>);
};

bool shortlex_less(const GroupElement& a, const GroupElement& b);

namespace detail {
// Reduce a spelling to a geodesic by cancelling pairs, without normalising.
std::vector<Letter> reduce_word(const CommutationGraph& g,
                                std::vector<Letter> w);
// ShortLex-normalise a word already known to be geodesic.
std::vector<Letter> normalise_geodesic(const CommutationGraph& g,
                                       std::vector<Letter> w);
}  // namespace detail

// Wraps a word already known to be geodesic (skips cancellation).
GroupElement from_geodesic_unchecked(const CommutationGraph& g,
                                     std::vector<Letter> w);

// Letters x^e with w = x^e * w' and lg(w') = lg(w) - 1.
std::vector<Letter> first_letters(const GroupElement& w);
// Letters x^e with w = w' * x^e and lg(w') = lg(w) - 1.
std::vector<Letter> last_letters(const GroupElement& w);

// Whether lg(u^{-1} w) = lg(w) - lg(u) (Side::Left), or the mirror.
bool divides(const GroupElement& u, const GroupElement& w, Side side);

// All left (or right) divisors of w, grouped by nothing, deduplicated.
std::vector<GroupElement> divisors(const GroupElement& w, Side side);

// Left divisors of w of exactly the given length, in ShortLex order.
std::vector<GroupElement> left_divisors_of_length(const GroupElement& w,
                                                  int length);

struct DivisorSplit {
  GroupElement divisor;  // gd_Y(w) on the chosen side
  GroupElement rest;     // w = divisor * rest (Left) or rest * divisor (Right)
};

// Greatest divisor of w supported in Y, on the given side.
DivisorSplit greatest_divisor(const GroupElement& w, VertexSet y, Side side);

struct CyclicReduction {
  GroupElement conjugator;  // u
  GroupElement core;        // v, cyclically minimal
};

// w = u^{-1} v u with lg(w) = 2 lg(u) + lg(v) and v cyclically minimal.
CyclicReduction cyclic_reduce(const GroupElement& w);

bool is_cyclically_minimal(const GroupElement& w);

// All elements obtained from a cyclically minimal w by cyclic permutation.
// Throws DomainError if w is not cyclically minimal.
std::vector<GroupElement> cyclic_shifts(const GroupElement& w);

struct BlockDecomposition {
  GroupElement conjugator;           // u from cyclic_reduce
  std::vector<GroupElement> blocks;  // cyclically minimal, connected supports
};

// Splits the cyclically minimal core of w along the non-commutation
// components of its support. Blocks are ordered by least vertex.
BlockDecomposition block_decomposition(const GroupElement& w);

struct Root {
  GroupElement base;  // r with r^exponent = w and exponent maximal
  int exponent;
};

// The unique primitive root. Throws DomainError on the identity.
Root root(const GroupElement& w);

}  // namespace pcg
