#ifndef PRODSTAB_REPORT_HPP
#define PRODSTAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "prodstab/graph.hpp"
#include "prodstab/perm.hpp"
#include "prodstab/products.hpp"
#include "prodstab/tfa.hpp"

namespace prodstab {

using Json = nlohmann::ordered_json;

// One checked statement instance. Failures always carry enough witness data
// to re-run the single check from the serialized form alone.
struct VerificationCase {
  std::string claim_id;
  std::string instance;
  enum class Outcome { pass, fail, skipped } outcome = Outcome::pass;
  std::string reason;  // skipped: violated hypothesis; fail: short note
  Json witness;        // evidence, machine-checkable on fail

  static VerificationCase passed(std::string claim, std::string inst,
                                 Json witness = {});
  static VerificationCase failed(std::string claim, std::string inst,
                                 std::string reason, Json witness);
  static VerificationCase skip(std::string claim, std::string inst,
                               std::string reason);
};

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json perm_to_json(const Permutation& p);
Permutation perm_from_json(const Json& j);
Json index_to_json(const ProductIndex& idx);

Json case_to_json(const VerificationCase& c, bool include_witness);

// Deterministic apart from the generatedAt field.
Json report_json(const std::string& command,
                 const std::vector<VerificationCase>& cases,
                 bool include_witness);

Json stability_to_json(const StabilityReport& rep, bool include_witness);
Json nontriviality_to_json(const NontrivialityReport& rep);

// Compact deterministic instance key: graph6 when loopless, otherwise an
// inline edge list.
std::string graph_token(const Graph& g);

void sort_cases(std::vector<VerificationCase>& cases);
bool any_failed(const std::vector<VerificationCase>& cases);

}  // namespace prodstab

#endif
