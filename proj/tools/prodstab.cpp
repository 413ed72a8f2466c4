// prodstab: decide stability of graphs and graph pairs under the direct
// product, compute Cartesian skeletons and two-fold automorphism groups,
// factorize under both products, and run the verification harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prodstab/aut.hpp"
#include "prodstab/enumerate.hpp"
#include "prodstab/errors.hpp"
#include "prodstab/factorization.hpp"
#include "prodstab/graph_io.hpp"
#include "prodstab/report.hpp"
#include "prodstab/skeleton.hpp"
#include "prodstab/tfa.hpp"
#include "prodstab/verify.hpp"

namespace {

using namespace prodstab;

constexpr int kExitPass = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

struct Output {
  std::string format = "text";
  bool witness = false;

  void emit(const Json& j, const std::string& text) const {
    if (format == "json")
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

std::string cases_text(const std::vector<VerificationCase>& cases) {
  std::ostringstream out;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : cases) {
    const char* tag = "PASS";
    if (c.outcome == VerificationCase::Outcome::fail) tag = "FAIL";
    if (c.outcome == VerificationCase::Outcome::skipped) tag = "SKIP";
    out << '[' << tag << "] " << c.claim_id << " :: " << c.instance;
    if (!c.reason.empty()) out << " (" << c.reason << ")";
    out << '\n';
    switch (c.outcome) {
      case VerificationCase::Outcome::pass: ++pass; break;
      case VerificationCase::Outcome::fail: ++fail; break;
      case VerificationCase::Outcome::skipped: ++skipped; break;
    }
  }
  out << pass << " passed, " << fail << " failed, " << skipped
      << " skipped\n";
  return out.str();
}

int finish_cases(const Output& out, const std::string& command,
                 std::vector<VerificationCase> cases) {
  sort_cases(cases);
  out.emit(report_json(command, cases, out.witness), cases_text(cases));
  return any_failed(cases) ? kExitFinding : kExitPass;
}

Json factors_json(const std::string& mode, const FactorizationResult& f) {
  Json arr = Json::array();
  for (const auto& [g, mult] : f.factors)
    arr.push_back(Json{{"order", g.order()},
                       {"edges", graph_to_json(g)["edges"]},
                       {"multiplicity", mult}});
  return Json{{"mode", mode}, {"factors", arr}, {"certified", f.certified}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph pair stability toolkit"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--witness", out.witness,
               "include permutation images in reports");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps");
  int max_order = -1;
  app.add_option("--max-order", max_order, "corpus order bound");

  std::string file_a, file_b, mode = "cartesian", claim, corpus;
  int nmax = -1, cycle_len = 0;

  auto* sk = app.add_subcommand("skeleton", "Cartesian skeleton of a graph");
  sk->add_option("file", file_a)->required();
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group");
  aut_cmd->add_option("file", file_a)->required();
  auto* tfa_cmd = app.add_subcommand("tfa", "two-fold automorphism group");
  tfa_cmd->add_option("file", file_a)->required();
  auto* stab = app.add_subcommand("stability", "single-graph stability");
  stab->add_option("file", file_a)->required();
  auto* pstab = app.add_subcommand("pair-stability", "graph pair stability");
  pstab->add_option("fileA", file_a)->required();
  pstab->add_option("fileB", file_b)->required();
  auto* factor = app.add_subcommand("factor", "factorization");
  factor->add_option("file", file_a)->required();
  factor->add_option("--mode", mode, "cartesian, direct or cycle")
      ->check(CLI::IsMember({"cartesian", "direct", "cycle"}));
  factor->add_option("--cycle-length", cycle_len,
                     "target cycle order for --mode=cycle");
  auto* verify = app.add_subcommand("verify", "run a verification claim");
  verify->add_option("--claim", claim, "claim id or 'all'")->required();
  verify->add_option("--nmax", nmax, "sweep bound for the claim");
  auto* search = app.add_subcommand("search", "conjecture falsification");
  search->add_option("--corpus", corpus, "cycles:N or pairs:N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*sk) {
      Graph g = load_graph(file_a);
      Graph b = boolean_square(g);
      Graph s = cartesian_skeleton(g);
      auto comps = skeleton_components(g);
      Json sizes = Json::array();
      for (auto& [verts, comp] : comps) sizes.push_back(verts.size());
      Json j{{"components", comps.size()},
             {"sizes", sizes},
             {"dispensableCount", b.edge_count() - s.edge_count()}};
      out.emit(Json{{"summary", j}, {"skeleton", graph_to_json(s)}},
               emit_edge_list(s) + j.dump() + "\n");
      return kExitPass;
    }
    if (*aut_cmd) {
      Graph g = load_graph(file_a);
      PermGroup a = automorphism_group(g);
      Json gens = Json::array();
      for (const auto& p : a.generators()) gens.push_back(perm_to_json(p));
      Json j{{"degree", a.degree()}, {"order", a.order()}};
      if (out.witness) j["generators"] = gens;
      out.emit(j, "|Aut| = " + std::to_string(a.order()) + "\n");
      return kExitPass;
    }
    if (*tfa_cmd) {
      Graph g = load_graph(file_a);
      TfaGroup t = tfa_group(g);
      auto witness = has_nondiagonal_tfa(g);
      Json j{{"order", t.order()},
             {"autOrder", automorphism_group(g).order()},
             {"allDiagonal", !witness.has_value()}};
      if (witness)
        j["nondiagonal"] = Json{{"alpha", perm_to_json(witness->alpha)},
                                {"beta", perm_to_json(witness->beta)}};
      out.emit(j, "|TFA| = " + std::to_string(t.order()) +
                      (witness ? " (non-diagonal pair exists)\n"
                               : " (all diagonal)\n"));
      return kExitPass;
    }
    if (*stab) {
      Graph g = load_graph(file_a);
      auto rep = is_stable_graph(g);
      out.emit(stability_to_json(rep, out.witness),
               std::string(rep.stable() ? "stable" : "unstable") + "\n");
      return kExitPass;
    }
    if (*pstab) {
      Graph g = load_graph(file_a);
      Graph h = load_graph(file_b);
      auto rep = is_stable_pair(g, h);
      Json j = stability_to_json(rep, out.witness);
      j["nontrivial"] = nontriviality_to_json(is_nontrivial_pair(g, h));
      out.emit(j, std::string(rep.stable() ? "stable" : "unstable") + "\n");
      return kExitPass;
    }
    if (*factor) {
      Graph g = load_graph(file_a);
      if (mode == "cartesian") {
        auto f = cartesian_prime_factorization(g);
        std::string text;
        for (auto& [fac, mult] : f.factors)
          text += emit_edge_list(fac) + "x" + std::to_string(mult) + "\n";
        out.emit(factors_json(mode, f), text);
        return kExitPass;
      }
      FactorizationResult f;
      std::optional<DirectDecomposition> dec;
      if (mode == "direct") {
        for (int d = 2; d < g.order() && !dec; ++d)
          if (g.order() % d == 0) dec = direct_factor_search(g, d);
      } else {
        if (cycle_len < 3)
          throw std::invalid_argument("--mode=cycle needs --cycle-length");
        dec = has_cycle_direct_factor(g, cycle_len);
      }
      if (dec) {
        f.factors.emplace_back(dec->left_factor, 1);
        f.factors.emplace_back(dec->right_factor, 1);
        f.certified = true;
      } else {
        f.factors.emplace_back(g, 1);
        f.certified = false;
      }
      std::string text = dec ? emit_edge_list(dec->left_factor) +
                                   emit_edge_list(dec->right_factor)
                             : "no decomposition\n";
      out.emit(factors_json(mode, f), text);
      return kExitPass;
    }

    VerifyOptions opt;
    opt.nmax = nmax;
    opt.max_order = max_order;
    opt.jobs = jobs;
    opt.element_cap = env_element_cap();
    if (*verify) {
      std::vector<VerificationCase> cases;
      if (claim == "all") {
        for (const auto& id : claim_ids())
          for (auto& c : run_claim(id, opt)) cases.push_back(std::move(c));
      } else {
        cases = run_claim(claim, opt);
      }
      std::string command = "verify --claim=" + claim;
      return finish_cases(out, command, std::move(cases));
    }
    if (*search) {
      auto spec = parse_corpus_spec(corpus);
      auto cases = search_conjecture(spec, opt);
      return finish_cases(out, "search --corpus=" + corpus, std::move(cases));
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap refusal: " << e.what() << '\n';
    return kExitCap;
  } catch (const GraphFormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
