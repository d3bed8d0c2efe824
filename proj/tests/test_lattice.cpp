#include <doctest.h>

#include <vector>

#include "pcg/io.hpp"
#include "pcg/lattice.hpp"
#include "support.hpp"

using namespace pcg;
using support::c4;
using support::k3;
using support::p3;
using support::p4;
using support::w;

namespace {

QuasiparabolicSubgroup parabolic(const CommutationGraph& g, VertexSet y) {
  return standardize(g, {}, y, GroupElement::identity(g));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("centraliser lattice height") {
  CHECK(centraliser_lattice_height(p3()) == 2);
  CHECK(centraliser_lattice_height(c4()) == 4);
  CHECK(centraliser_lattice_height(p4()) == 4);
  CHECK(centraliser_lattice_height(k3()) == 0);
}

TEST_CASE("witness chain") {
  CommutationGraph g = p3();
  CentraliserChain wc = witness_chain(g);
  REQUIRE(wc.size() == 3);
  CHECK(wc[0].z_set() == g.full_set());
  CHECK(wc[1].z_set() == g.make_set({"a", "b"}));
  CHECK(wc[2].z_set() == g.make_set({"b"}));
  for (const auto& q : wc) CHECK(q.blocks().empty());
  CHECK(verify_chain(wc));

  CommutationGraph h = k3();
  CentraliserChain wk = witness_chain(h);
  REQUIRE(wk.size() == 1);
  CHECK(wk[0].z_set() == h.full_set());
  CHECK(verify_chain(wk));

  CHECK(verify_chain(witness_chain(c4())));
  CHECK(witness_chain(c4()).size() == 5);
  CHECK(verify_chain(witness_chain(p4())));
}

TEST_CASE("verify_chain rejects bad chains") {
  CommutationGraph g = p3();
  QuasiparabolicSubgroup whole = whole_group(g);
  QuasiparabolicSubgroup cac = centraliser_of_element(w(g, "a c"));
  CHECK(verify_chain({whole, cac}));
  CHECK(!verify_chain({}));
  CHECK(!verify_chain({whole, whole}));                  // not strict
  CHECK(!verify_chain({cac, whole}));                    // ascending
  CHECK(!verify_chain({whole, parabolic(g, g.make_set({"a"}))}));
}

TEST_CASE("cpad on the square graph") {
  CommutationGraph g = c4();
  QuasiparabolicSubgroup whole = whole_group(g);
  QuasiparabolicSubgroup cac = centraliser_of_element(w(g, "a c"));
  QuasiparabolicSubgroup cfull = centraliser_of_element(w(g, "a b c d"));

  std::vector<ParabolicSubgroup> seg = cpad_chain(whole, cac);
  REQUIRE(seg.size() == 3);
  CHECK(seg[0].y == g.full_set());
  CHECK(seg[1].y == g.make_set({"a", "b", "d"}));
  CHECK(seg[2].y == g.make_set({"b", "d"}));

  std::vector<ParabolicSubgroup> seg2 = cpad_chain(cac, cfull);
  REQUIRE(seg2.size() == 3);
  CHECK(seg2[0].y == g.make_set({"b", "d"}));
  CHECK(seg2[1].y == g.make_set({"b"}));
  CHECK(seg2[2].y == VertexSet{});

  // two new blocks at once pad twice, accumulating from Z_D
  std::vector<ParabolicSubgroup> seg3 = cpad_chain(whole, cfull);
  REQUIRE(seg3.size() == 4);
  CHECK(seg3[0].y == g.full_set());
  CHECK(seg3[1].y == g.make_set({"a", "b"}));
  CHECK(seg3[2].y == g.make_set({"a"}));
  CHECK(seg3[3].y == VertexSet{});
}

TEST_CASE("cpad preconditions") {
  CommutationGraph g = c4();
  QuasiparabolicSubgroup whole = whole_group(g);
  QuasiparabolicSubgroup cac = centraliser_of_element(w(g, "a c"));
  CHECK_THROWS_WITH_AS(cpad_chain(cac, whole), "cpad_chain: not a strict chain",
                       DomainError);
  CHECK_THROWS_WITH_AS(cpad_chain(whole, whole),
                       "cpad_chain: not a strict chain", DomainError);
  CHECK_THROWS_WITH_AS(cpad_chain(whole, parabolic(g, g.make_set({"a", "b"}))),
                       "cpad_chain: no block difference", DomainError);
  QuasiparabolicSubgroup conj =
      standardize(g, {w(g, "a c")}, g.make_set({"b", "d"}), w(g, "a"));
  CHECK_THROWS_WITH_AS(cpad_chain(whole, conj),
                       "cpad_chain: entries must be canonical", DomainError);
}

TEST_CASE("parabolicize the worked square-graph chain") {
  CommutationGraph g = c4();
  CentraliserChain chain = {whole_group(g),
                            centraliser_of_element(w(g, "a c")),
                            centraliser_of_element(w(g, "a b c d")),
                            parabolic(g, VertexSet{})};
  REQUIRE(verify_chain(chain));
  std::vector<ParabolicSubgroup> out = parabolicize_chain(chain);
  REQUIRE(out.size() == 5);
  CHECK(out[0].y == g.full_set());
  CHECK(out[1].y == g.make_set({"a", "b", "d"}));
  CHECK(out[2].y == g.make_set({"b", "d"}));
  CHECK(out[3].y == g.make_set({"b"}));
  CHECK(out[4].y == VertexSet{});
  for (const auto& p : out) CHECK(p.conj.is_identity());
}

TEST_CASE("parabolicize keeps parabolic chains") {
  CommutationGraph g = p3();
  CentraliserChain chain = {whole_group(g),
                            parabolic(g, g.make_set({"a", "b"})),
                            parabolic(g, g.make_set({"b"}))};
  std::vector<ParabolicSubgroup> out = parabolicize_chain(chain);
  REQUIRE(out.size() == 3);
  CHECK(out[0].y == g.full_set());
  CHECK(out[1].y == g.make_set({"a", "b"}));
  CHECK(out[2].y == g.make_set({"b"}));
}

TEST_CASE("parabolicize collapses block-dropping steps") {
  CommutationGraph g = p3();
  CentraliserChain chain = {whole_group(g),
                            centraliser_of_element(w(g, "a c")),
                            parabolic(g, g.make_set({"b"}))};
  REQUIRE(verify_chain(chain));
  std::vector<ParabolicSubgroup> out = parabolicize_chain(chain);
  REQUIRE(out.size() == 3);
  CHECK(out[0].y == g.full_set());
  CHECK(out[1].y == g.make_set({"a", "b"}));
  CHECK(out[2].y == g.make_set({"b"}));
}

TEST_CASE("parabolicize preconditions") {
  CommutationGraph g = c4();
  QuasiparabolicSubgroup whole = whole_group(g);
  QuasiparabolicSubgroup cac = centraliser_of_element(w(g, "a c"));
  CHECK_THROWS_WITH_AS(parabolicize_chain({}), "parabolicize_chain: empty chain",
                       DomainError);
  CHECK_THROWS_WITH_AS(parabolicize_chain({whole, whole}),
                       "parabolicize_chain: not a strictly descending chain",
                       DomainError);
  CHECK_THROWS_WITH_AS(parabolicize_chain({whole, cac}),
                       "endpoints not parabolic", DomainError);
  CHECK_THROWS_WITH_AS(
      parabolicize_chain({cac, parabolic(g, g.make_set({"b"}))}),
      "endpoints not parabolic", DomainError);
}

TEST_CASE("randomized chain search") {
  CommutationGraph g = p3();
  ChainSearchResult rp = search_longest_chain(g, 2, 300, 1);
  CHECK(rp.chains_tried == 300);
  CHECK(rp.best_length == 2);
  CHECK(rp.best_chain.size() == 3);
  CHECK(verify_chain(rp.best_chain));
  CHECK(subgroup_equal(rp.best_chain.front(), whole_group(g)));

  CommutationGraph k = k3();
  ChainSearchResult rk = search_longest_chain(k, 2, 50, 1);
  CHECK(rk.best_length == 0);

  // deterministic for a fixed seed
  ChainSearchResult r1 = search_longest_chain(g, 2, 100, 7);
  ChainSearchResult r2 = search_longest_chain(g, 2, 100, 7);
  CHECK(r1.best_length == r2.best_length);
  REQUIRE(r1.best_chain.size() == r2.best_chain.size());
  for (std::size_t i = 0; i < r1.best_chain.size(); ++i)
    CHECK(subgroup_equal(r1.best_chain[i], r2.best_chain[i]));
}

}  // TEST_SUITE
