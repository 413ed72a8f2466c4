#ifndef PRODSTAB_VERIFY_HPP
#define PRODSTAB_VERIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "prodstab/graph.hpp"
#include "prodstab/report.hpp"
#include "prodstab/tfa.hpp"

namespace prodstab {

// Knobs shared by the harness entry points. element_cap bounds every group
// element enumeration the harness performs and can be raised through
// PRODSTAB_MAX_GROUP_ELEMENTS.
struct VerifyOptions {
  int nmax = -1;       // claim-specific sweep bound (-1: default)
  int max_order = -1;  // corpus order bound (-1: default)
  int jobs = 1;
  unsigned long long element_cap = 1'000'000;
};

unsigned long long env_element_cap();

// Connected corpus used by the order-law and decider sweeps: loopless
// graphs up to min(max_order, 7) plus loopy graphs up to min(max_order, 5)
// when with_loops is set.
std::vector<Graph> connected_corpus(int max_order, bool with_loops);

// One harness entry per verified statement family. Each returns its cases
// unsorted; run_claim sorts and callers aggregate.
std::vector<VerificationCase> verify_skeleton_cycles(int n_max);
std::vector<VerificationCase> verify_tfa_stabilizer(int max_order);
std::vector<VerificationCase> verify_counting_identities(
    const Graph& g, const Graph& h, const std::string& instance,
    const VerifyOptions& opt);
std::vector<VerificationCase> verify_theorem_odd_cycles(
    int n, int corpus_max_order, const VerifyOptions& opt);
std::vector<VerificationCase> verify_theorem_even_cycles(
    int n, int corpus_max_order, const VerifyOptions& opt);
std::vector<VerificationCase> verify_explicit_tau(int n);
std::vector<VerificationCase> verify_lemma_2_4(const Graph& g, const Graph& h,
                                               const std::string& instance,
                                               const VerifyOptions& opt);
std::vector<VerificationCase> verify_mixer_equivalence(
    const Graph& g, const Graph& h, const std::string& instance,
    const VerifyOptions& opt);
std::vector<VerificationCase> verify_order_laws(const VerifyOptions& opt);
std::vector<VerificationCase> verify_skeleton_product_law(
    const VerifyOptions& opt);
std::vector<VerificationCase> verify_decider_agreement(
    const VerifyOptions& opt);
std::vector<VerificationCase> verify_factorization_claims(
    const VerifyOptions& opt);
std::vector<VerificationCase> verify_part_fixing_family(
    const VerifyOptions& opt);

// Conjecture falsification sweeps. Violations come back as fail cases with
// fully serialized witnesses; they are findings, not crashes.
struct CorpusSpec {
  enum class Kind { cycles, pairs } kind = Kind::cycles;
  int bound = 10;  // cycles: max cycle length; pairs: max graph order
};
CorpusSpec parse_corpus_spec(const std::string& text);  // "cycles:10", "pairs:6"
std::vector<VerificationCase> search_conjecture(const CorpusSpec& corpus,
                                                const VerifyOptions& opt);

// Claim registry for the CLI: id -> runner.
std::vector<std::string> claim_ids();
std::vector<VerificationCase> run_claim(const std::string& id,
                                        const VerifyOptions& opt);

}  // namespace prodstab

#endif
