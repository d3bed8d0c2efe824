#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcg/conjugation.hpp"
#include "pcg/errors.hpp"
#include "pcg/graph.hpp"
#include "pcg/io.hpp"
#include "pcg/lattice.hpp"
#include "pcg/oracle.hpp"
#include "pcg/subgroup.hpp"
#include "pcg/word.hpp"

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

// Inline payload when the argument starts with the opener, otherwise the
// content of the file it names.
std::string read_payload(const std::string& arg, char opener) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i])))
    ++i;
  if (i < arg.size() && arg[i] == opener) return arg;
  std::ifstream in(arg);
  if (!in) throw pcg::ParseError("cannot open " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

pcg::QuasiparabolicSubgroup subgroup_arg(const pcg::CommutationGraph& g,
                                         const std::string& arg) {
  return pcg::subgroup_from_json(g, read_payload(arg, '{'));
}

std::vector<pcg::QuasiparabolicSubgroup> chain_arg(
    const pcg::CommutationGraph& g, const std::string& arg) {
  return pcg::chain_from_json(g, read_payload(arg, '['));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

pcg::Side side_of(const std::string& s) {
  return s == "r" ? pcg::Side::Right : pcg::Side::Left;
}

ordered_json set_json(const pcg::CommutationGraph& g, pcg::VertexSet s) {
  ordered_json a = ordered_json::array();
  for (int v : s.indices()) a.push_back(g.name(v));
  return a;
}

ordered_json words_json(const std::vector<pcg::GroupElement>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(pcg::format_word(w));
  return a;
}

ordered_json raw_words_json(const pcg::CommutationGraph& g,
                            const std::vector<std::vector<pcg::Letter>>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(pcg::format_raw_word(g, w));
  return a;
}

void print_bool(std::ostream& out, bool json, bool v) {
  if (json)
    out << ordered_json{{"value", v}}.dump() << "\n";
  else
    out << (v ? "true" : "false") << "\n";
}

void print_subgroup(std::ostream& out, bool json,
                    const pcg::QuasiparabolicSubgroup& q) {
  if (json)
    out << pcg::subgroup_to_json(q) << "\n";
  else
    out << pcg::format_subgroup(q) << "\n";
}

void print_quasiparabolic_chain(std::ostream& out, bool json,
                                const pcg::CentraliserChain& chain) {
  if (json) {
    out << pcg::chain_to_json(chain) << "\n";
  } else {
    for (const auto& q : chain) out << pcg::format_subgroup(q) << "\n";
  }
}

void print_parabolic_chain(std::ostream& out, bool json,
                           const std::vector<pcg::ParabolicSubgroup>& chain) {
  pcg::CentraliserChain qs;
  for (const auto& p : chain) qs.push_back(pcg::as_quasiparabolic(p));
  print_quasiparabolic_chain(out, json, qs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch calculator for partially commutative groups"};
  app.require_subcommand(1);

  std::string graph_path;
  bool json = false;
  std::uint64_t seed = 0;
  int radius = 2;
  std::size_t max_chains = 10000;
  app.add_option("-g,--graph", graph_path, "commutation graph file")
      ->required();
  app.add_flag("--json", json, "machine readable output");
  app.add_option("--seed", seed, "seed for the randomized chain search");
  app.add_option("--radius", radius, "ball radius for the chain search");
  app.add_option("--max-chains", max_chains,
                 "samples for the randomized chain search");

  std::string a1, a2;
  std::vector<std::string> rest;
  std::string side_s = "l", set_csv;

  auto* c_nf = app.add_subcommand("nf", "normal form of a word");
  c_nf->add_option("word", a1)->required();
  auto* c_eq = app.add_subcommand("eq", "whether two words are equal");
  c_eq->add_option("left", a1)->required();
  c_eq->add_option("right", a2)->required();
  auto* c_len = app.add_subcommand("len", "geodesic length");
  c_len->add_option("word", a1)->required();
  auto* c_alpha = app.add_subcommand("alpha", "support of a word");
  c_alpha->add_option("word", a1)->required();
  auto* c_gd = app.add_subcommand("gd", "greatest divisor in a subset");
  c_gd->add_option("word", a1)->required();
  c_gd->add_option("--side", side_s)->check(CLI::IsMember({"l", "r"}));
  c_gd->add_option("--set", set_csv, "comma separated vertices")->required();
  auto* c_div = app.add_subcommand("divides", "whether a word divides another");
  c_div->add_option("divisor", a1)->required();
  c_div->add_option("word", a2)->required();
  c_div->add_option("--side", side_s)->check(CLI::IsMember({"l", "r"}));
  auto* c_cr = app.add_subcommand("cyclred", "cyclic reduction w = u^-1 v u");
  c_cr->add_option("word", a1)->required();
  auto* c_sh = app.add_subcommand("shifts", "cyclic shifts");
  c_sh->add_option("word", a1)->required();
  auto* c_bl = app.add_subcommand("blocks", "block decomposition");
  c_bl->add_option("word", a1)->required();
  auto* c_rt = app.add_subcommand("root", "root and maximal exponent");
  c_rt->add_option("word", a1)->required();
  auto* c_cd = app.add_subcommand("conjdec", "conjugation decomposition");
  c_cd->add_option("word", a1)->required();
  c_cd->add_option("conjugator", a2)->required();
  auto* c_cent = app.add_subcommand("cent", "centraliser of an element");
  c_cent->add_option("word", a1)->required();
  auto* c_cents = app.add_subcommand("centset", "centraliser of a set");
  c_cents->add_option("words", rest);
  auto* c_meet = app.add_subcommand("meet", "intersection of two subgroups");
  c_meet->add_option("left", a1)->required();
  c_meet->add_option("right", a2)->required();
  auto* c_join = app.add_subcommand("join", "join of two parabolic subgroups");
  c_join->add_option("left", a1)->required();
  c_join->add_option("right", a2)->required();
  auto* c_mem = app.add_subcommand("member", "subgroup membership");
  c_mem->add_option("subgroup", a1)->required();
  c_mem->add_option("word", a2)->required();
  auto* c_sub = app.add_subcommand("subeq", "whether two subgroups are equal");
  c_sub->add_option("left", a1)->required();
  c_sub->add_option("right", a2)->required();
  auto* c_rank = app.add_subcommand("rank", "rank pair (|Z|, blocks)");
  c_rank->add_option("subgroup", a1)->required();
  auto* c_isc = app.add_subcommand("is-centraliser",
                                   "whether the subgroup is a centraliser");
  c_isc->add_option("subgroup", a1)->required();
  auto* c_pres = app.add_subcommand("present",
                                    "a set whose centraliser is the subgroup");
  c_pres->add_option("subgroup", a1)->required();
  auto* c_cs = app.add_subcommand("closed-sets", "closed sets of the graph");
  auto* c_h = app.add_subcommand("height", "height of the closed-set lattice");
  auto* c_ch = app.add_subcommand("cheight",
                                  "randomized search for long chains");
  auto* c_wc = app.add_subcommand("witness-chain",
                                  "parabolic chain attaining the height");
  auto* c_par = app.add_subcommand("parabolicize",
                                   "rewrite a centraliser chain as parabolic");
  c_par->add_option("chain", a1)->required();
  auto* c_vc = app.add_subcommand("verify-chain", "check a centraliser chain");
  c_vc->add_option("chain", a1)->required();
  auto* c_or = app.add_subcommand("oracle", "brute-force reference results");
  c_or->add_option("args", rest);
  c_or->add_option("--side", side_s)->check(CLI::IsMember({"l", "r"}));

  for (CLI::App* sub : {c_nf, c_eq, c_len, c_alpha, c_gd, c_div, c_cr, c_sh,
                        c_bl, c_rt, c_cd, c_cent, c_cents, c_meet, c_join,
                        c_mem, c_sub, c_rank, c_isc, c_pres, c_cs, c_h, c_ch,
                        c_wc, c_par, c_vc, c_or})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    pcg::CommutationGraph g = pcg::load_graph(graph_path);
    std::ostream& out = std::cout;

    if (c_nf->parsed()) {
      pcg::GroupElement w = pcg::parse_word(g, a1);
      if (json)
        out << ordered_json{{"word", pcg::format_word(w)}}.dump() << "\n";
      else
        out << pcg::format_word(w) << "\n";
    } else if (c_eq->parsed()) {
      print_bool(out, json, pcg::parse_word(g, a1) == pcg::parse_word(g, a2));
    } else if (c_len->parsed()) {
      std::size_t n = pcg::parse_word(g, a1).length();
      if (json)
        out << ordered_json{{"value", n}}.dump() << "\n";
      else
        out << n << "\n";
    } else if (c_alpha->parsed()) {
      pcg::VertexSet s = pcg::parse_word(g, a1).support();
      if (json)
        out << ordered_json{{"set", set_json(g, s)}}.dump() << "\n";
      else
        out << pcg::format_vertex_set(g, s) << "\n";
    } else if (c_gd->parsed()) {
      pcg::VertexSet y = g.make_set(split_csv(set_csv));
      pcg::DivisorSplit s =
          pcg::greatest_divisor(pcg::parse_word(g, a1), y, side_of(side_s));
      if (json)
        out << ordered_json{{"divisor", pcg::format_word(s.divisor)},
                            {"rest", pcg::format_word(s.rest)}}
                   .dump()
            << "\n";
      else
        out << "divisor: " << pcg::format_word(s.divisor) << "\n"
            << "rest: " << pcg::format_word(s.rest) << "\n";
    } else if (c_div->parsed()) {
      print_bool(out, json,
                 pcg::divides(pcg::parse_word(g, a1), pcg::parse_word(g, a2),
                              side_of(side_s)));
    } else if (c_cr->parsed()) {
      pcg::CyclicReduction cr = pcg::cyclic_reduce(pcg::parse_word(g, a1));
      if (json)
        out << ordered_json{{"u", pcg::format_word(cr.conjugator)},
                            {"v", pcg::format_word(cr.core)}}
                   .dump()
            << "\n";
      else
        out << "u: " << pcg::format_word(cr.conjugator) << "\n"
            << "v: " << pcg::format_word(cr.core) << "\n";
    } else if (c_sh->parsed()) {
      std::vector<pcg::GroupElement> shifts =
          pcg::cyclic_shifts(pcg::parse_word(g, a1));
      if (json)
        out << ordered_json{{"words", words_json(shifts)}}.dump() << "\n";
      else
        for (const auto& s : shifts) out << pcg::format_word(s) << "\n";
    } else if (c_bl->parsed()) {
      pcg::BlockDecomposition bd =
          pcg::block_decomposition(pcg::parse_word(g, a1));
      if (json)
        out << ordered_json{{"u", pcg::format_word(bd.conjugator)},
                            {"blocks", words_json(bd.blocks)}}
                   .dump()
            << "\n";
      else {
        out << "u: " << pcg::format_word(bd.conjugator) << "\n";
        for (const auto& b : bd.blocks)
          out << "block: " << pcg::format_word(b) << "\n";
      }
    } else if (c_rt->parsed()) {
      pcg::Root r = pcg::root(pcg::parse_word(g, a1));
      if (json)
        out << ordered_json{{"root", pcg::format_word(r.base)},
                            {"power", r.exponent}}
                   .dump()
            << "\n";
      else
        out << "root: " << pcg::format_word(r.base) << "\n"
            << "power: " << r.exponent << "\n";
    } else if (c_cd->parsed()) {
      pcg::ConjDecomposition cd = pcg::conjugate_decompose(
          pcg::parse_word(g, a1), pcg::parse_word(g, a2));
      if (json)
        out << ordered_json{{"head", pcg::format_word(cd.head)},
                            {"rotor", pcg::format_word(cd.rotor)},
                            {"commuter", pcg::format_word(cd.commuter)},
                            {"tail1", pcg::format_word(cd.tail1)},
                            {"tail2", pcg::format_word(cd.tail2)},
                            {"core", pcg::format_word(cd.core)}}
                   .dump()
            << "\n";
      else
        out << "head: " << pcg::format_word(cd.head) << "\n"
            << "rotor: " << pcg::format_word(cd.rotor) << "\n"
            << "commuter: " << pcg::format_word(cd.commuter) << "\n"
            << "tail1: " << pcg::format_word(cd.tail1) << "\n"
            << "tail2: " << pcg::format_word(cd.tail2) << "\n"
            << "core: " << pcg::format_word(cd.core) << "\n";
    } else if (c_cent->parsed()) {
      print_subgroup(out, json,
                     pcg::centraliser_of_element(pcg::parse_word(g, a1)));
    } else if (c_cents->parsed()) {
      std::vector<pcg::GroupElement> gens;
      for (const auto& s : rest) gens.push_back(pcg::parse_word(g, s));
      print_subgroup(out, json, pcg::centraliser_of_set(g, gens));
    } else if (c_meet->parsed()) {
      pcg::QuasiparabolicSubgroup q1 = subgroup_arg(g, a1);
      pcg::QuasiparabolicSubgroup q2 = subgroup_arg(g, a2);
      if (q1.blocks().empty() && q2.blocks().empty()) {
        pcg::ParabolicSubgroup p = pcg::intersect_parabolic(
            pcg::make_parabolic(g, q1.z_set(), q1.conj()),
            pcg::make_parabolic(g, q2.z_set(), q2.conj()));
        print_subgroup(out, json, pcg::as_quasiparabolic(p));
      } else {
        print_subgroup(out, json, pcg::intersect_quasiparabolic(q1, q2));
      }
    } else if (c_join->parsed()) {
      pcg::QuasiparabolicSubgroup q1 = subgroup_arg(g, a1);
      pcg::QuasiparabolicSubgroup q2 = subgroup_arg(g, a2);
      if (!q1.blocks().empty() || !q2.blocks().empty())
        throw pcg::DomainError("join requires parabolic subgroups");
      pcg::ParabolicSubgroup p = pcg::parabolic_join(
          pcg::make_parabolic(g, q1.z_set(), q1.conj()),
          pcg::make_parabolic(g, q2.z_set(), q2.conj()));
      print_subgroup(out, json, pcg::as_quasiparabolic(p));
    } else if (c_mem->parsed()) {
      print_bool(out, json,
                 pcg::contains(subgroup_arg(g, a1), pcg::parse_word(g, a2)));
    } else if (c_sub->parsed()) {
      print_bool(out, json,
                 pcg::subgroup_equal(subgroup_arg(g, a1), subgroup_arg(g, a2)));
    } else if (c_rank->parsed()) {
      pcg::Rank r = pcg::rank(subgroup_arg(g, a1));
      if (json)
        out << ordered_json{{"Z", r.z_size}, {"k", r.block_count}}.dump()
            << "\n";
      else
        out << "(" << r.z_size << "," << r.block_count << ")" << "\n";
    } else if (c_isc->parsed()) {
      print_bool(out, json, pcg::is_centraliser(subgroup_arg(g, a1)));
    } else if (c_pres->parsed()) {
      std::vector<pcg::GroupElement> s =
          pcg::present_as_centraliser(subgroup_arg(g, a1));
      if (json)
        out << ordered_json{{"words", words_json(s)}}.dump() << "\n";
      else
        for (const auto& w : s) out << pcg::format_word(w) << "\n";
    } else if (c_cs->parsed()) {
      pcg::ClosedSetLattice lat = pcg::enumerate_closed_sets(g);
      if (json) {
        ordered_json a = ordered_json::array();
        for (pcg::VertexSet s : lat.elements) a.push_back(set_json(g, s));
        out << ordered_json{{"sets", a}}.dump() << "\n";
      } else {
        for (pcg::VertexSet s : lat.elements)
          out << pcg::format_vertex_set(g, s) << "\n";
      }
    } else if (c_h->parsed()) {
      std::size_t h = pcg::centraliser_lattice_height(g);
      if (json)
        out << ordered_json{{"value", h}}.dump() << "\n";
      else
        out << h << "\n";
    } else if (c_ch->parsed()) {
      pcg::ChainSearchResult r =
          pcg::search_longest_chain(g, radius, max_chains, seed);
      if (json)
        out << ordered_json{{"best_length", r.best_length},
                            {"chains_tried", r.chains_tried}}
                   .dump()
            << "\n";
      else
        out << r.best_length << "\n";
    } else if (c_wc->parsed()) {
      print_quasiparabolic_chain(out, json, pcg::witness_chain(g));
    } else if (c_par->parsed()) {
      print_parabolic_chain(out, json,
                            pcg::parabolicize_chain(chain_arg(g, a1)));
    } else if (c_vc->parsed()) {
      print_bool(out, json, pcg::verify_chain(chain_arg(g, a1)));
    } else if (c_or->parsed()) {
      if (rest.empty()) throw UsageError("oracle needs an operation");
      const std::string& op = rest.front();
      if (op == "ball") {
        if (rest.size() != 2) throw UsageError("oracle ball <radius>");
        auto words = pcg::oracle::ball(g, parse_int(rest[1]));
        if (json)
          out << ordered_json{{"words", raw_words_json(g, words)}}.dump()
              << "\n";
        else
          for (const auto& w : words)
            out << pcg::format_raw_word(g, w) << "\n";
      } else if (op == "eq") {
        if (rest.size() != 3) throw UsageError("oracle eq <left> <right>");
        print_bool(out, json,
                   pcg::oracle::brute_equal(g, pcg::parse_raw_word(g, rest[1]),
                                            pcg::parse_raw_word(g, rest[2])));
      } else if (op == "cent") {
        if (rest.size() < 2) throw UsageError("oracle cent <radius> <words>...");
        std::vector<std::vector<pcg::Letter>> gens;
        for (std::size_t i = 2; i < rest.size(); ++i)
          gens.push_back(pcg::parse_raw_word(g, rest[i]));
        auto words = pcg::oracle::brute_centraliser(g, gens, parse_int(rest[1]));
        if (json)
          out << ordered_json{{"words", raw_words_json(g, words)}}.dump()
              << "\n";
        else
          for (const auto& w : words)
            out << pcg::format_raw_word(g, w) << "\n";
      } else if (op == "closed-sets") {
        if (rest.size() != 1) throw UsageError("oracle closed-sets");
        auto sets = pcg::oracle::brute_closed_sets(g);
        if (json) {
          ordered_json a = ordered_json::array();
          for (pcg::VertexSet s : sets) a.push_back(set_json(g, s));
          out << ordered_json{{"sets", a}}.dump() << "\n";
        } else {
          for (pcg::VertexSet s : sets)
            out << pcg::format_vertex_set(g, s) << "\n";
        }
      } else if (op == "root") {
        if (rest.size() != 2) throw UsageError("oracle root <word>");
        std::vector<pcg::Letter> w = pcg::parse_raw_word(g, rest[1]);
        int r = static_cast<int>(pcg::oracle::brute_normal_form(g, w).size());
        if (r > 4) r = 4;
        auto [base, n] = pcg::oracle::brute_root(g, w, r);
        if (json)
          out << ordered_json{{"root", pcg::format_raw_word(g, base)},
                              {"power", n}}
                     .dump()
              << "\n";
        else
          out << "root: " << pcg::format_raw_word(g, base) << "\n"
              << "power: " << n << "\n";
      } else if (op == "divisors") {
        if (rest.size() != 2) throw UsageError("oracle divisors <word>");
        auto words = pcg::oracle::brute_divisors(
            g, pcg::parse_raw_word(g, rest[1]), side_of(side_s));
        if (json)
          out << ordered_json{{"words", raw_words_json(g, words)}}.dump()
              << "\n";
        else
          for (const auto& w : words)
            out << pcg::format_raw_word(g, w) << "\n";
      } else {
        throw UsageError("unknown oracle operation '" + op + "'");
      }
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
