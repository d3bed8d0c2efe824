#pragma once

#include <string>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/subgroup.hpp"
#include "pcg/word.hpp"

namespace pcg {

// Graph files: '#' starts a comment, one "vertices:" line names the
// generators (declaration order is the ShortLex order), "edges:" lines
// list tokens like a-b. Duplicate vertices or edges, unknown endpoints and
// self loops raise ParseError with the line number.
CommutationGraph parse_graph(const std::string& text);
CommutationGraph load_graph(const std::string& path);

// Word grammar: whitespace separated tokens "name", "name^-1" or "name^k"
// with k a nonzero integer, plus "1" for the identity.
std::vector<Letter> parse_raw_word(const CommutationGraph& g,
                                   const std::string& text);
GroupElement parse_word(const CommutationGraph& g, const std::string& text);

std::string format_word(const GroupElement& w);
std::string format_raw_word(const CommutationGraph& g,
                            const std::vector<Letter>& w);
std::string format_vertex_set(const CommutationGraph& g, VertexSet s);

// Text form, for example Q{blocks=[a c]; Z={b}; conj=1}.
std::string format_subgroup(const QuasiparabolicSubgroup& q);

// JSON schema {"blocks":["a c"],"Z":["b"],"conj":"1"}. Parsing rejects
// unknown fields and normalises through standardize. Chains are arrays of
// subgroup objects.
std::string subgroup_to_json(const QuasiparabolicSubgroup& q);
QuasiparabolicSubgroup subgroup_from_json(const CommutationGraph& g,
                                          const std::string& text);
std::string chain_to_json(const std::vector<QuasiparabolicSubgroup>& chain);
std::vector<QuasiparabolicSubgroup> chain_from_json(const CommutationGraph& g,
                                                    const std::string& text);

}  // namespace pcg
