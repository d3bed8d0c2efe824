#include <doctest.h>

#include <string>
#include <vector>

#include "pcg/io.hpp"
#include "pcg/subgroup.hpp"
#include "support.hpp"

using namespace pcg;
using support::p3;
using support::w;

TEST_SUITE("io") {

TEST_CASE("parse graph") {
  CommutationGraph g = parse_graph(
      "# a path\n"
      "\n"
      "vertices: a b c   # three of them\n"
      "edges: a-b b-c\n");
  CHECK(g.size() == 3);
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 2));

  // edges are optional
  CHECK(parse_graph("vertices: x y\n").size() == 2);
}

TEST_CASE("parse graph errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a\nvertices: b\n"),
                       "line 2: duplicate vertices line", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("edges: a-b\n"),
                       "line 1: edges before vertices", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a 1\n"),
                       "line 1: bad vertex name '1'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a a\n"),
                       "line 1: duplicate vertex 'a'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices:\n"),
                       "line 1: empty vertex list", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a b\nedges: ab\n"),
                       "line 2: bad edge 'ab'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a b\nedges: a-c\n"),
                       "line 2: unknown endpoint 'c'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a b\nedges: a-a\n"),
                       "line 2: self loop 'a-a'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a b\nedges: a-b b-a\n"),
                       "line 2: duplicate edge 'b-a'", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("vertices: a\nwhat\n"),
                       "line 2: unrecognised line", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("# nothing\n"), "missing vertices line",
                       ParseError);
}

TEST_CASE("load graph") {
  CommutationGraph g = load_graph(std::string(PCGK_GRAPHS_DIR) + "/p3.txt");
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK_THROWS_WITH_AS(load_graph("/nonexistent/g.txt"),
                       "cannot open /nonexistent/g.txt", ParseError);
}

TEST_CASE("parse word") {
  CommutationGraph g = p3();
  CHECK(format_word(parse_word(g, "a c b")) == "a b c");
  CHECK(format_word(parse_word(g, "a^2 b^-3")) == "a a b^-1 b^-1 b^-1");
  CHECK(format_word(parse_word(g, "1")) == "1");
  CHECK(format_word(parse_word(g, "  b   1 a  ")) == "a b");
  CHECK(format_word(parse_word(g, "")) == "1");
  CHECK(parse_raw_word(g, "a a^-1").size() == 2);  // raw keeps the pair

  CHECK_THROWS_WITH_AS(parse_word(g, "q"), "unknown vertex 'q'", ParseError);
  CHECK_THROWS_WITH_AS(parse_word(g, "a^0"), "zero exponent in 'a^0'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_word(g, "a^x"), "bad exponent in 'a^x'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_word(g, "a^"), "bad exponent in 'a^'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_word(g, "a^4097"),
                       "exponent too large in 'a^4097'", ParseError);
  CHECK(parse_word(g, "a^4096").length() == 4096);
}

TEST_CASE("format word") {
  CommutationGraph g = p3();
  CHECK(format_word(GroupElement::identity(g)) == "1");
  CHECK(format_word(w(g, "b b")) == "b b");  // no exponent collapsing
  CHECK(format_word(w(g, "a^-1")) == "a^-1");
  CHECK(format_raw_word(g, {}) == "1");
  CHECK(format_raw_word(g, {Letter{2, -1}, Letter{0, 1}}) == "c^-1 a");
}

TEST_CASE("format vertex set") {
  CommutationGraph g = p3();
  CHECK(format_vertex_set(g, g.make_set({"a", "b"})) == "{a,b}");
  CHECK(format_vertex_set(g, g.make_set({"b", "a"})) == "{a,b}");
  CHECK(format_vertex_set(g, VertexSet{}) == "{}");
}

TEST_CASE("format subgroup") {
  CommutationGraph g = p3();
  CHECK(format_subgroup(centraliser_of_element(w(g, "a c"))) ==
        "Q{blocks=[a c]; Z={b}; conj=1}");
  CHECK(format_subgroup(as_quasiparabolic(make_parabolic(
            g, g.full_set(), GroupElement::identity(g)))) ==
        "Q{blocks=[]; Z={a,b,c}; conj=1}");
}

TEST_CASE("subgroup json") {
  CommutationGraph g = p3();
  QuasiparabolicSubgroup q = centraliser_of_element(w(g, "a c"));
  CHECK(subgroup_to_json(q) == R"({"blocks":["a c"],"Z":["b"],"conj":"1"})");

  QuasiparabolicSubgroup back = subgroup_from_json(g, subgroup_to_json(q));
  CHECK(back.blocks() == q.blocks());
  CHECK(back.z_set() == q.z_set());
  CHECK(back.conj() == q.conj());

  // a conjugated one round-trips too
  QuasiparabolicSubgroup qc =
      standardize(g, {w(g, "a c")}, g.make_set({"b"}), w(g, "a"));
  QuasiparabolicSubgroup back2 = subgroup_from_json(g, subgroup_to_json(qc));
  CHECK(back2.conj() == w(g, "a"));
  CHECK(subgroup_equal(back2, qc));

  // input is normalised: inverse block spelling and removable conjugator
  QuasiparabolicSubgroup norm = subgroup_from_json(
      g, R"({"blocks":["c^-1 a^-1"],"Z":["b"],"conj":"b"})");
  CHECK(format_subgroup(norm) == "Q{blocks=[a c]; Z={b}; conj=1}");
}

TEST_CASE("subgroup json errors") {
  CommutationGraph g = p3();
  CHECK_THROWS_WITH_AS(subgroup_from_json(g, "[1]"),
                       "subgroup json must be an object", ParseError);
  CHECK_THROWS_WITH_AS(
      subgroup_from_json(g, R"({"blocks":[],"Z":[],"conj":"1","x":0})"),
      "unknown field 'x'", ParseError);
  CHECK_THROWS_WITH_AS(subgroup_from_json(g, R"({"blocks":[],"Z":[]})"),
                       "subgroup json needs blocks, Z and conj", ParseError);
  CHECK_THROWS_WITH_AS(
      subgroup_from_json(g, R"({"blocks":"a","Z":[],"conj":"1"})"),
      "subgroup json has wrong field types", ParseError);
  CHECK_THROWS_WITH_AS(
      subgroup_from_json(g, R"({"blocks":[3],"Z":[],"conj":"1"})"),
      "subgroup json has wrong field types", ParseError);
  CHECK_THROWS_WITH_AS(
      subgroup_from_json(g, R"({"blocks":[],"Z":["q"],"conj":"1"})"),
      "unknown vertex 'q'", ParseError);
  CHECK_THROWS_AS(subgroup_from_json(g, "not json"), ParseError);
  // malformed text reports the json parser's complaint
  try {
    subgroup_from_json(g, "{");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("bad json: ", 0) == 0);
  }
}

TEST_CASE("chain json") {
  CommutationGraph g = p3();
  std::vector<QuasiparabolicSubgroup> chain = {
      as_quasiparabolic(make_parabolic(g, g.full_set(),
                                       GroupElement::identity(g))),
      centraliser_of_element(w(g, "a c")),
  };
  std::string text = chain_to_json(chain);
  CHECK(text ==
        R"([{"blocks":[],"Z":["a","b","c"],"conj":"1"},)"
        R"({"blocks":["a c"],"Z":["b"],"conj":"1"}])");
  std::vector<QuasiparabolicSubgroup> back = chain_from_json(g, text);
  REQUIRE(back.size() == 2);
  CHECK(subgroup_equal(back[0], chain[0]));
  CHECK(subgroup_equal(back[1], chain[1]));

  CHECK(chain_from_json(g, "[]").empty());
  CHECK_THROWS_WITH_AS(chain_from_json(g, "{}"), "chain json must be an array",
                       ParseError);
}

}  // TEST_SUITE
