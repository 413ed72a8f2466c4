#include "prodstab/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "prodstab/graph_io.hpp"

namespace prodstab {

VerificationCase VerificationCase::passed(std::string claim, std::string inst,
                                          Json witness) {
  return {std::move(claim), std::move(inst), Outcome::pass, "",
          std::move(witness)};
}

VerificationCase VerificationCase::failed(std::string claim, std::string inst,
                                          std::string reason, Json witness) {
  return {std::move(claim), std::move(inst), Outcome::fail, std::move(reason),
          std::move(witness)};
}

VerificationCase VerificationCase::skip(std::string claim, std::string inst,
                                        std::string reason) {
  return {std::move(claim), std::move(inst), Outcome::skipped,
          std::move(reason), Json{}};
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

Json perm_to_json(const Permutation& p) { return Json(p.images()); }

Permutation perm_from_json(const Json& j) {
  return Permutation(j.get<std::vector<int>>());
}

Json index_to_json(const ProductIndex& idx) {
  return Json{{"nLeft", idx.n_left},
              {"nRight", idx.n_right},
              {"encoding", "row-major"}};
}

Json case_to_json(const VerificationCase& c, bool include_witness) {
  Json j;
  j["claimId"] = c.claim_id;
  j["instance"] = c.instance;
  switch (c.outcome) {
    case VerificationCase::Outcome::pass: j["outcome"] = "pass"; break;
    case VerificationCase::Outcome::fail: j["outcome"] = "fail"; break;
    case VerificationCase::Outcome::skipped: j["outcome"] = "skipped"; break;
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  // failures always ship their witness; passes only on request
  if (!c.witness.is_null() &&
      (include_witness || c.outcome == VerificationCase::Outcome::fail))
    j["witness"] = c.witness;
  return j;
}

Json report_json(const std::string& command,
                 const std::vector<VerificationCase>& cases,
                 bool include_witness) {
  Json j;
  j["schemaVersion"] = 1;
  j["command"] = command;
  int pass = 0, fail = 0, skipped = 0;
  Json arr = Json::array();
  for (const auto& c : cases) {
    arr.push_back(case_to_json(c, include_witness));
    switch (c.outcome) {
      case VerificationCase::Outcome::pass: ++pass; break;
      case VerificationCase::Outcome::fail: ++fail; break;
      case VerificationCase::Outcome::skipped: ++skipped; break;
    }
  }
  j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  j["cases"] = std::move(arr);
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
  j["generatedAt"] = buf;
  return j;
}

Json stability_to_json(const StabilityReport& rep, bool include_witness) {
  Json j;
  j["verdict"] = rep.stable() ? "stable" : "unstable";
  switch (rep.method) {
    case DecisionMethod::mixer_scan: j["method"] = "mixer-scan"; break;
    case DecisionMethod::order_compare: j["method"] = "order-compare"; break;
    case DecisionMethod::tfa: j["method"] = "tfa"; break;
  }
  j["orders"] = Json{{"autProduct", rep.aut_product},
                     {"autLeft", rep.aut_left},
                     {"autRight", rep.aut_right}};
  j["index"] = index_to_json(rep.index);
  if (rep.mixer_witness && (include_witness || !rep.stable()))
    j["witness"] =
        Json{{"kind", "mixer"}, {"images", perm_to_json(*rep.mixer_witness)}};
  return j;
}

Json nontriviality_to_json(const NontrivialityReport& rep) {
  Json j;
  j["nontrivial"] = rep.nontrivial;
  j["connected"] = Json::array({rep.left_connected, rep.right_connected});
  j["twinFree"] = Json::array({rep.left_twin_free, rep.right_twin_free});
  j["bipartite"] = Json::array({rep.left_bipartite, rep.right_bipartite});
  j["coprime"] = rep.coprime;
  if (!rep.reasons.empty()) j["reasons"] = rep.reasons;
  return j;
}

std::string graph_token(const Graph& g) {
  if (!g.has_any_loop() && g.order() <= 62) return emit_graph6(g);
  std::string s = "el:" + std::to_string(g.order());
  for (auto [u, v] : g.edges())
    s += ";" + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

void sort_cases(std::vector<VerificationCase>& cases) {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const VerificationCase& a, const VerificationCase& b) {
                     if (a.claim_id != b.claim_id)
                       return a.claim_id < b.claim_id;
                     return a.instance < b.instance;
                   });
}

bool any_failed(const std::vector<VerificationCase>& cases) {
  for (const auto& c : cases)
    if (c.outcome == VerificationCase::Outcome::fail) return true;
  return false;
}

}  // namespace prodstab
