#include "pcg/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "pcg/errors.hpp"

namespace pcg {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

bool valid_name(const std::string& n) {
  if (n.empty() || n == "1") return false;
  for (char c : n)
    if (c == '-' || c == '^' || c == '#' || c == ',' || c == '{' ||
        c == '}' || std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

long long parse_exponent(const std::string& tok, const std::string& exp) {
  if (exp.empty()) throw ParseError("bad exponent in '" + tok + "'");
  std::size_t pos = 0;
  long long k = 0;
  try {
    k = std::stoll(exp, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad exponent in '" + tok + "'");
  }
  if (pos != exp.size()) throw ParseError("bad exponent in '" + tok + "'");
  if (k == 0) throw ParseError("zero exponent in '" + tok + "'");
  if (k > 4096 || k < -4096)
    throw ParseError("exponent too large in '" + tok + "'");
  return k;
}

nlohmann::ordered_json subgroup_json_object(const QuasiparabolicSubgroup& q) {
  nlohmann::ordered_json j;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : q.blocks()) j["blocks"].push_back(format_word(b));
  j["Z"] = nlohmann::ordered_json::array();
  for (int v : q.z_set().indices()) j["Z"].push_back(q.graph().name(v));
  j["conj"] = format_word(q.conj());
  return j;
}

QuasiparabolicSubgroup subgroup_from_json_value(const CommutationGraph& g,
                                                const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("subgroup json must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "blocks" && it.key() != "Z" && it.key() != "conj")
      throw ParseError("unknown field '" + it.key() + "'");
  if (!j.contains("blocks") || !j.contains("Z") || !j.contains("conj"))
    throw ParseError("subgroup json needs blocks, Z and conj");
  if (!j["blocks"].is_array() || !j["Z"].is_array() || !j["conj"].is_string())
    throw ParseError("subgroup json has wrong field types");

  std::vector<GroupElement> blocks;
  for (const auto& e : j["blocks"]) {
    if (!e.is_string()) throw ParseError("subgroup json has wrong field types");
    blocks.push_back(parse_word(g, e.get<std::string>()));
  }
  VertexSet z;
  for (const auto& e : j["Z"]) {
    if (!e.is_string()) throw ParseError("subgroup json has wrong field types");
    auto idx = g.index_of(e.get<std::string>());
    if (!idx) throw ParseError("unknown vertex '" + e.get<std::string>() + "'");
    z = z.with(*idx);
  }
  GroupElement conj = parse_word(g, j["conj"].get<std::string>());
  return standardize(g, std::move(blocks), z, conj);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
}

}  // namespace

CommutationGraph parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen_edges;
  bool have_vertices = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("vertices:", 0) == 0) {
      if (have_vertices) fail(lineno, "duplicate vertices line");
      have_vertices = true;
      for (const std::string& tok : split_ws(line.substr(9))) {
        if (!valid_name(tok)) fail(lineno, "bad vertex name '" + tok + "'");
        if (index.count(tok)) fail(lineno, "duplicate vertex '" + tok + "'");
        index[tok] = static_cast<int>(names.size());
        names.push_back(tok);
      }
      if (names.empty()) fail(lineno, "empty vertex list");
    } else if (line.rfind("edges:", 0) == 0) {
      if (!have_vertices) fail(lineno, "edges before vertices");
      for (const std::string& tok : split_ws(line.substr(6))) {
        std::size_t dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size() ||
            tok.find('-', dash + 1) != std::string::npos)
          fail(lineno, "bad edge '" + tok + "'");
        std::string u = tok.substr(0, dash), v = tok.substr(dash + 1);
        auto iu = index.find(u);
        if (iu == index.end()) fail(lineno, "unknown endpoint '" + u + "'");
        auto iv = index.find(v);
        if (iv == index.end()) fail(lineno, "unknown endpoint '" + v + "'");
        if (iu->second == iv->second) fail(lineno, "self loop '" + tok + "'");
        std::pair<int, int> e = iu->second < iv->second
                                    ? std::make_pair(iu->second, iv->second)
                                    : std::make_pair(iv->second, iu->second);
        if (!seen_edges.insert(e).second)
          fail(lineno, "duplicate edge '" + tok + "'");
        edges.push_back(e);
      }
    } else {
      fail(lineno, "unrecognised line");
    }
  }
  if (!have_vertices) throw ParseError("missing vertices line");
  return CommutationGraph(std::move(names), std::move(edges));
}

CommutationGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<Letter> parse_raw_word(const CommutationGraph& g,
                                   const std::string& text) {
  std::vector<Letter> out;
  for (const std::string& tok : split_ws(text)) {
    if (tok == "1") continue;
    std::string base = tok;
    long long k = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      k = parse_exponent(tok, tok.substr(caret + 1));
    }
    auto idx = g.index_of(base);
    if (!idx) throw ParseError("unknown vertex '" + base + "'");
    int sign = k > 0 ? 1 : -1;
    for (long long i = 0; i < (k > 0 ? k : -k); ++i)
      out.push_back(Letter{*idx, sign});
  }
  return out;
}

GroupElement parse_word(const CommutationGraph& g, const std::string& text) {
  return GroupElement::from_letters(g, parse_raw_word(g, text));
}

std::string format_raw_word(const CommutationGraph& g,
                            const std::vector<Letter>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i].vertex);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string format_word(const GroupElement& w) {
  return format_raw_word(w.graph(), w.word());
}

std::string format_vertex_set(const CommutationGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.indices()) {
    if (!first) out += ',';
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::string format_subgroup(const QuasiparabolicSubgroup& q) {
  std::string out = "Q{blocks=[";
  for (std::size_t i = 0; i < q.blocks().size(); ++i) {
    if (i) out += ", ";
    out += format_word(q.blocks()[i]);
  }
  out += "]; Z=" + format_vertex_set(q.graph(), q.z_set());
  out += "; conj=" + format_word(q.conj()) + "}";
  return out;
}

std::string subgroup_to_json(const QuasiparabolicSubgroup& q) {
  return subgroup_json_object(q).dump();
}

QuasiparabolicSubgroup subgroup_from_json(const CommutationGraph& g,
                                          const std::string& text) {
  return subgroup_from_json_value(g, parse_json(text));
}

std::string chain_to_json(const std::vector<QuasiparabolicSubgroup>& chain) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& q : chain) arr.push_back(subgroup_json_object(q));
  return arr.dump();
}

std::vector<QuasiparabolicSubgroup> chain_from_json(const CommutationGraph& g,
                                                    const std::string& text) {
  nlohmann::json j = parse_json(text);
  if (!j.is_array()) throw ParseError("chain json must be an array");
  std::vector<QuasiparabolicSubgroup> out;
  for (const auto& e : j) out.push_back(subgroup_from_json_value(g, e));
  return out;
}

}  // namespace pcg
