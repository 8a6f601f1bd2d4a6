#ifndef RIGIKIT_CERTIFY_HPP
#define RIGIKIT_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigikit/graph.hpp"
#include "rigikit/packing.hpp"

namespace rigikit {

enum class Status {
    GloballyRigid,
    NotGloballyRigid,
    ProbablyGloballyRigid,
    ProbablyNot,
    Unknown,
};

enum class Rule {
    CompleteSmall,
    HendricksonFail,
    D2Characterization,
    EdgeDeletion,
    VertexRemovalLemma,
    VertexRedundant,
    Combination,
    KChain,
    BodyBar,
    BodyHinge,
    StressRank,
};

std::string status_name(Status s);
std::string rule_name(Rule r);
// Human-readable name of the theorem each rule invokes; embedded in reports.
std::string theorem_name(Rule r);

// One re-checkable inference. The payload is self-contained: it embeds the
// graph the rule applies to and every witness the rule consumed, so the
// independent checker needs no engine state.
struct CertificateStep {
    Rule rule;
    nlohmann::json payload;
};

struct Verdict {
    Status status = Status::Unknown;
    int dim = 0;
    std::vector<CertificateStep> steps;
    std::uint64_t seed = 0;
    std::string error_bound;
};

struct EngineOptions {
    int depth = 8;             // recursion budget for the removal-lemma search
    int trials = 3;            // stress-test repetitions
    bool stress_fallback = true;
};

nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json multigraph_to_json(const Multigraph& h);

struct HendricksonReport {
    bool pass = false;
    std::string condition;                    // violated condition when failing
    int connectivity = -1;
    std::vector<int> separator;               // when connectivity fails
    std::optional<EdgePair> failing_edge;     // when redundancy fails
};

// Necessity: complete with n <= d+1, or (d+1)-connected and redundantly
// rigid. Redundancy is pebble-exact in d = 2 and randomized otherwise.
HendricksonReport hendrickson_check(const SimpleGraph& g, int d,
                                    std::uint64_t seed);

// Exact d = 2 decision: complete on <= 3 vertices, or 3-connected and
// redundantly rigid. Every sub-check is combinatorial.
Verdict global_rigidity_2d(const SimpleGraph& g);

// Reduction of a certified d = 2 graph to K4 through removable edges and
// degree-3 vertex replacements; each step is re-verified as it is emitted.
std::vector<CertificateStep> deconstruction_certificate_2d(const SimpleGraph& g);

struct LemmaCheck {
    bool applicable = false;
    std::string reason;
    std::vector<CertificateStep> replacement_steps; // exact chain when applicable
};

// Vertex removal lemma at v: degree > d, G-v rigid, and the completed
// replacement certified globally rigid by exact rules.
LemmaCheck vertex_removal_lemma_check(const SimpleGraph& g, int d, int v,
                                      std::uint64_t seed,
                                      const EngineOptions& opts = {});

// The decision pipeline. Exact-first: GloballyRigid only from exact theorem
// chains, NotGloballyRigid only from Hendrickson / the d=2 characterization,
// Probably* only from the randomized stress test.
Verdict global_rigidity_nd(const SimpleGraph& g, int d,
                           const EngineOptions& opts, std::uint64_t seed);

// Direct certificate from the vertex-redundancy theorem, when it applies.
std::optional<Verdict> vertex_redundant_certificate(const SimpleGraph& g, int d,
                                                    std::uint64_t seed);

struct CombineInput {
    SimpleGraph g1, g2;       // both on the union id space [0, n)
    std::vector<int> v1, v2;  // vertex sets of the two pieces
    std::vector<EdgePair> h_edges; // H on X = V1 cap V2
    RootedMinorWitness witness;    // over V(G2): vertex -> root in X
};

// Combination theorem for G1 cup G2: |X| >= d+1, G1 rigid, (H,X) a rooted
// minor of (G2,X), and one of the two global-rigidity branches certified.
// Probably* sub-verdicts downgrade the result to ProbablyGloballyRigid.
Verdict combine_check(const CombineInput& input, int d,
                      const EngineOptions& opts, std::uint64_t seed);

// k-chain engine: verifies the proof obligations directly (connectivity,
// rigidity of G-v, global rigidity of the completed replacement) instead of
// trusting the vertex-count threshold; falls back to the general pipeline.
Verdict kchain_global_check(const std::vector<int>& sizes, int d,
                            const EngineOptions& opts, std::uint64_t seed);

// Body-bar / body-hinge verdicts on the layout graph G_H, carrying the tree
// packings (or partition witnesses) as payload.
Verdict body_bar_verdict(const Multigraph& h, int d, std::uint64_t seed);
Verdict body_hinge_verdict(const Multigraph& h, int d,
                           const EngineOptions& opts, std::uint64_t seed);

// Independent checker: re-derives every step of a verdict from its payload
// alone. `g` is the graph the verdict is about. Randomized re-checks draw
// fresh seeds derived from `recheck_seed`.
bool verify_certificate_chain(const SimpleGraph& g, const Verdict& v,
                              std::uint64_t recheck_seed = 0x7ec4);

// Re-checks a deconstruction chain: every step must be a valid edge deletion
// or degree-3 vertex replacement, ending at K4.
bool verify_deconstruction_2d(const SimpleGraph& g,
                              const std::vector<CertificateStep>& steps);

} // namespace rigikit

#endif
