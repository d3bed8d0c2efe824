#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary through the shell, capturing stdout only.
RunResult run(const std::string& args) {
  std::string cmd = std::string(PCGK_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

std::string p3_args() {
  return std::string("-g ") + PCGK_GRAPHS_DIR + "/p3.txt ";
}

std::string c4_args() {
  return std::string("-g ") + PCGK_GRAPHS_DIR + "/c4.txt ";
}

const char* kCentAC = R"('{"blocks":["a c"],"Z":["b"],"conj":"1"}' )";
const char* kCentCA = R"('{"blocks":["a^-1 c^-1"],"Z":["b"],"conj":"1"}' )";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("word commands") {
  RunResult r = run(p3_args() + "nf 'b a^-1 c a'");
  CHECK(r.status == 0);
  CHECK(r.out == "a^-1 b c a\n");

  CHECK(run(p3_args() + "nf --json 'a c b'").out == "{\"word\":\"a b c\"}\n");

  r = run(p3_args() + "eq 'a b' 'b a'");
  CHECK(r.status == 0);
  CHECK(r.out == "true\n");
  r = run(p3_args() + "eq 'a c' 'c a'");
  CHECK(r.status == 0);  // a false answer is still a success
  CHECK(r.out == "false\n");
  CHECK(run(p3_args() + "eq --json 'a b' 'b a'").out ==
        "{\"value\":true}\n");

  CHECK(run(p3_args() + "len 'a b a'").out == "3\n");
  CHECK(run(p3_args() + "len 'c b b^-1 c^-1 a'").out == "1\n");
  CHECK(run(p3_args() + "alpha 'c a'").out == "{a,c}\n");
  CHECK(run(p3_args() + "alpha --json 'c a'").out ==
        "{\"set\":[\"a\",\"c\"]}\n");
}

TEST_CASE("divisor commands") {
  CHECK(run(p3_args() + "gd 'a b c' --set a,b").out ==
        "divisor: a b\nrest: c\n");
  CHECK(run(p3_args() + "gd 'a b c' --set b,c --side r").out ==
        "divisor: b c\nrest: a\n");
  CHECK(run(p3_args() + "divides a 'a c'").out == "true\n");
  CHECK(run(p3_args() + "divides c 'a c'").out == "false\n");
  CHECK(run(p3_args() + "divides c 'a c' --side r").out == "true\n");
}

TEST_CASE("conjugation commands") {
  CHECK(run(p3_args() + "cyclred 'b a^-1 c a'").out == "u: a\nv: b c\n");
  CHECK(run(p3_args() + "shifts 'a c'").out == "a c\nc a\n");
  CHECK(run(p3_args() + "blocks 'a a b b b'").out ==
        "u: 1\nblock: a a\nblock: b b b\n");
  CHECK(run(p3_args() + "root 'a b a b'").out == "root: a b\npower: 2\n");
  CHECK(run(p3_args() + "conjdec 'a c' a").out ==
        "head: 1\nrotor: a\ncommuter: 1\ntail1: 1\ntail2: 1\ncore: c a\n");
}

TEST_CASE("centraliser commands") {
  RunResult r = run(p3_args() + "cent 'a c'");
  CHECK(r.status == 0);
  CHECK(r.out == "Q{blocks=[a c]; Z={b}; conj=1}\n");
  CHECK(run(p3_args() + "cent --json 'a c'").out ==
        R"({"blocks":["a c"],"Z":["b"],"conj":"1"})" "\n");

  CHECK(run(p3_args() + "centset").out == "Q{blocks=[]; Z={a,b,c}; conj=1}\n");
  CHECK(run(p3_args() + "centset 'a c' b").out ==
        "Q{blocks=[a c]; Z={b}; conj=1}\n");
  CHECK(run(p3_args() + "centset a c").out == "Q{blocks=[]; Z={b}; conj=1}\n");
}

TEST_CASE("subgroup commands") {
  CHECK(run(p3_args() + "meet " + kCentAC + kCentCA).out ==
        "Q{blocks=[]; Z={b}; conj=1}\n");
  CHECK(run(p3_args() +
            R"(join '{"blocks":[],"Z":["a","b"],"conj":"1"}' )"
            R"('{"blocks":[],"Z":["b","c"],"conj":"1"}')")
            .out == "Q{blocks=[]; Z={a,b,c}; conj=1}\n");

  CHECK(run(p3_args() + "member " + kCentAC + "'b b'").out == "true\n");
  CHECK(run(p3_args() + "member " + kCentAC + "'c a'").out == "false\n");

  CHECK(run(p3_args() + "subeq " + kCentAC +
            R"('{"blocks":["c^-1 a^-1"],"Z":["b"],"conj":"1"}')")
            .out == "true\n");
  CHECK(run(p3_args() + "subeq " + kCentAC + kCentCA).out == "false\n");

  CHECK(run(p3_args() + "rank " + kCentAC).out == "(1,1)\n");
  CHECK(run(p3_args() + "rank --json " + kCentAC).out ==
        "{\"Z\":1,\"k\":1}\n");

  CHECK(run(p3_args() + "is-centraliser " + kCentAC).out == "true\n");
  CHECK(run(p3_args() +
            R"(is-centraliser '{"blocks":["a c"],"Z":[],"conj":"1"}')")
            .out == "false\n");

  RunResult pres = run(p3_args() + "present " + kCentAC);
  CHECK(pres.status == 0);
  CHECK(pres.out == "b\na c\n");
}

TEST_CASE("lattice commands") {
  CHECK(run(p3_args() + "closed-sets").out == "{b}\n{a,b}\n{b,c}\n{a,b,c}\n");
  CHECK(run(p3_args() + "height").out == "2\n");
  CHECK(run(p3_args() + "height --json").out == "{\"value\":2}\n");
  CHECK(run(c4_args() + "height").out == "4\n");
  CHECK(run(p3_args() + "witness-chain").out ==
        "Q{blocks=[]; Z={a,b,c}; conj=1}\n"
        "Q{blocks=[]; Z={a,b}; conj=1}\n"
        "Q{blocks=[]; Z={b}; conj=1}\n");
  CHECK(run(p3_args() + "cheight --radius 2 --max-chains 300 --seed 1").out ==
        "2\n");
}

TEST_CASE("chain commands") {
  const std::string chain =
      R"('[{"blocks":[],"Z":["a","b","c","d"],"conj":"1"},)"
      R"({"blocks":["a c"],"Z":["b","d"],"conj":"1"},)"
      R"({"blocks":["a c","b d"],"Z":[],"conj":"1"},)"
      R"({"blocks":[],"Z":[],"conj":"1"}]')";
  CHECK(run(c4_args() + "verify-chain " + chain).out == "true\n");
  RunResult r = run(c4_args() + "parabolicize " + chain);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "Q{blocks=[]; Z={a,b,c,d}; conj=1}\n"
        "Q{blocks=[]; Z={a,b,d}; conj=1}\n"
        "Q{blocks=[]; Z={b,d}; conj=1}\n"
        "Q{blocks=[]; Z={b}; conj=1}\n"
        "Q{blocks=[]; Z={}; conj=1}\n");

  // duplicate entries are not strictly descending
  CHECK(run(p3_args() +
            R"(verify-chain '[{"blocks":[],"Z":["a","b","c"],"conj":"1"},)"
            R"({"blocks":[],"Z":["a","b","c"],"conj":"1"}]')")
            .out == "false\n");
}

TEST_CASE("oracle commands") {
  CHECK(run(p3_args() + "oracle ball 1").out ==
        "1\na\na^-1\nb\nb^-1\nc\nc^-1\n");
  CHECK(run(p3_args() + "oracle eq 'a b' 'b a'").out == "true\n");
  CHECK(run(p3_args() + "oracle root 'a b a b'").out ==
        "root: a b\npower: 2\n");
  CHECK(run(p3_args() + "oracle divisors 'a c'").out == "1\na\na c\n");
  CHECK(run(p3_args() + "oracle divisors 'a c' --side r").out ==
        "1\nc\na c\n");
  CHECK(run(p3_args() + "oracle closed-sets").out ==
        run(p3_args() + "closed-sets").out);
  CHECK(run(p3_args() + "oracle cent 1 a").out == "1\na\na^-1\nb\nb^-1\n");
}

TEST_CASE("exit codes") {
  CHECK(run("nf a").status == 2);                         // graph missing
  CHECK(run(p3_args() + "frobnicate").status == 2);       // unknown command
  CHECK(run(p3_args() + "oracle wat").status == 2);       // unknown oracle op
  CHECK(run(p3_args() + "oracle").status == 2);           // missing oracle op
  CHECK(run(p3_args() + "root 1").status == 1);           // domain error
  CHECK(run(p3_args() + "nf q").status == 1);             // parse error
  CHECK(run("-g /nonexistent/g.txt nf a").status == 1);   // bad graph file
  CHECK(run(p3_args() + "join " + kCentAC + kCentCA).status == 1);
  CHECK(run(p3_args() + "--help").status == 0);
}

}  // TEST_SUITE
