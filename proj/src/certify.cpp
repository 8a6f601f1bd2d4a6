#include "rigikit/certify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rigikit/builders.hpp"
#include "rigikit/rigidity.hpp"
#include "rigikit/sparsity.hpp"

namespace rigikit {

namespace {

int binom2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::string sz_bound(int d, int n, int trials) {
    std::ostringstream os;
    os << "rank under-measure probability <= (" << d << "*" << n
       << "/(2^61-1))^" << trials << " per rank query";
    return os.str();
}

} // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::GloballyRigid: return "GloballyRigid";
        case Status::NotGloballyRigid: return "NotGloballyRigid";
        case Status::ProbablyGloballyRigid: return "ProbablyGloballyRigid";
        case Status::ProbablyNot: return "ProbablyNot";
        case Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::CompleteSmall: return "CompleteSmall";
        case Rule::HendricksonFail: return "HendricksonFail";
        case Rule::D2Characterization: return "D2Characterization";
        case Rule::EdgeDeletion: return "EdgeDeletion";
        case Rule::VertexRemovalLemma: return "VertexRemovalLemma";
        case Rule::VertexRedundant: return "VertexRedundant";
        case Rule::Combination: return "Combination";
        case Rule::KChain: return "KChain";
        case Rule::BodyBar: return "BodyBar";
        case Rule::BodyHinge: return "BodyHinge";
        case Rule::StressRank: return "StressRank";
    }
    return "?";
}

std::string theorem_name(Rule r) {
    switch (r) {
        case Rule::CompleteSmall:
            return "complete graphs on at most d+1 vertices are globally rigid";
        case Rule::HendricksonFail:
            return "Hendrickson necessity: (d+1)-connected and redundantly rigid";
        case Rule::D2Characterization:
            return "planar characterization: 3-connected and redundantly rigid";
        case Rule::EdgeDeletion:
            return "edge addition preserves global rigidity";
        case Rule::VertexRemovalLemma:
            return "vertex removal lemma (degree > d, rigid remainder, "
                   "globally rigid completed replacement)";
        case Rule::VertexRedundant:
            return "vertex-redundant rigidity implies global rigidity";
        case Rule::Combination:
            return "combination of two graphs over d+1 or more shared vertices";
        case Rule::KChain: return "k-chain global rigidity";
        case Rule::BodyBar:
            return "body-bar characterization by spanning-tree packings";
        case Rule::BodyHinge:
            return "body-hinge sufficiency by spanning-tree packings";
        case Rule::StressRank:
            return "randomized stress-matrix rank test (rank n-d-1)";
    }
    return "?";
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
    std::vector<EdgePair> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return SimpleGraph(j.at("n").get<int>(), std::move(edges));
}

nlohmann::json multigraph_to_json(const Multigraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : h.edges) edges.push_back({u, v});
    return {{"n", h.n}, {"edges", edges}, {"multi", true}};
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : v.steps)
        steps.push_back({{"rule", rule_name(s.rule)},
                         {"theorem", theorem_name(s.rule)},
                         {"payload", s.payload}});
    return {{"status", status_name(v.status)},
            {"dim", v.dim},
            {"steps", steps},
            {"seed", v.seed},
            {"error_bound", v.error_bound}};
}

namespace {

nlohmann::json packing_to_json(const PackingResult& r) {
    if (std::holds_alternative<TreePacking>(r)) {
        const auto& p = std::get<TreePacking>(r);
        return {{"feasible", true}, {"k", p.k}, {"assignment", p.assignment}};
    }
    const auto& w = std::get<PartitionWitness>(r);
    return {{"feasible", false},
            {"blocks", w.blocks},
            {"block_of", w.block_of},
            {"cross_edges", w.cross_edges},
            {"required", w.required}};
}

bool rigid_for_dim(const SimpleGraph& g, int d, std::uint64_t seed) {
    if (d == 2) return is_laman_rigid(g) || g.vertex_count() <= 1;
    return is_rigid(g, d, seed);
}

} // namespace

HendricksonReport hendrickson_check(const SimpleGraph& g, int d,
                                    std::uint64_t seed) {
    HendricksonReport report;
    int n = g.vertex_count();
    if (g.is_complete() && n <= d + 1) {
        report.pass = true;
        report.condition = "complete-small";
        return report;
    }
    if (n < 2) {
        report.condition = "connectivity";
        report.connectivity = 0;
        return report;
    }
    auto conn = vertex_connectivity(g);
    report.connectivity = conn.k;
    if (conn.k < d + 1 || n < d + 2) {
        report.condition = "connectivity";
        if (conn.witness) report.separator = conn.witness->separator;
        return report;
    }
    if (d == 2) {
        EdgePair failing;
        if (!is_redundantly_rigid_2d(g, &failing)) {
            report.condition = "redundancy";
            report.failing_edge = failing;
            return report;
        }
    } else {
        auto redundancy = is_redundantly_rigid(g, d, derive_seed(seed, 0x48));
        if (!redundancy.redundant) {
            report.condition = "redundancy";
            report.failing_edge = redundancy.failing_edge;
            return report;
        }
    }
    report.pass = true;
    return report;
}

namespace {

CertificateStep hendrickson_fail_step(const SimpleGraph& g,
                                      const HendricksonReport& r) {
    nlohmann::json payload{{"graph", graph_to_json(g)},
                           {"condition", r.condition},
                           {"connectivity", r.connectivity}};
    if (!r.separator.empty()) payload["separator"] = r.separator;
    if (r.failing_edge)
        payload["failing_edge"] = {r.failing_edge->first, r.failing_edge->second};
    return {Rule::HendricksonFail, std::move(payload)};
}

} // namespace

Verdict global_rigidity_2d(const SimpleGraph& g) {
    Verdict verdict;
    verdict.dim = 2;
    verdict.error_bound = "0 (all sub-checks combinatorial)";
    int n = g.vertex_count();
    if (g.is_complete() && n <= 3) {
        verdict.status = Status::GloballyRigid;
        verdict.steps.push_back(
            {Rule::CompleteSmall, {{"graph", graph_to_json(g)}, {"n", n}}});
        return verdict;
    }
    auto report = hendrickson_check(g, 2, 0);
    if (!report.pass) {
        verdict.status = Status::NotGloballyRigid;
        verdict.steps.push_back(hendrickson_fail_step(g, report));
        return verdict;
    }
    verdict.status = Status::GloballyRigid;
    verdict.steps.push_back({Rule::D2Characterization,
                             {{"graph", graph_to_json(g)},
                              {"connectivity", report.connectivity},
                              {"redundant", true}}});
    return verdict;
}

std::vector<CertificateStep> deconstruction_certificate_2d(
    const SimpleGraph& g) {
    if (g.vertex_count() < 4)
        throw std::invalid_argument("deconstruction: need at least 4 vertices");
    if (global_rigidity_2d(g).status != Status::GloballyRigid)
        throw std::invalid_argument(
            "deconstruction: graph is not globally rigid in the plane");
    std::vector<CertificateStep> steps;
    SimpleGraph cur = g;
    while (!(cur.vertex_count() == 4 && cur.is_complete())) {
        Reduction red = find_reduction(cur);
        if (red.kind == Reduction::Kind::Degree3Vertex) {
            int v = red.vertex;
            SimpleGraph remainder = cur.without_vertex(v);
            if (!is_laman_rigid(remainder))
                throw InvariantFault(
                    "deconstruction: remainder after a degree-3 vertex is "
                    "not rigid");
            SimpleGraph replacement = vertex_clique_replace(cur, v);
            if (vertex_connectivity(replacement).k < 3 ||
                !is_redundantly_rigid_2d(replacement))
                throw InvariantFault(
                    "deconstruction: completed replacement lost the "
                    "characterization");
            steps.push_back({Rule::VertexRemovalLemma,
                             {{"graph", graph_to_json(cur)},
                              {"vertex", v},
                              {"replacement", graph_to_json(replacement)}}});
            cur = replacement;
        } else {
            steps.push_back({Rule::EdgeDeletion,
                             {{"graph", graph_to_json(cur)},
                              {"edge", {red.edge.first, red.edge.second}}}});
            cur = cur.without_edge(red.edge.first, red.edge.second);
        }
    }
    return steps;
}

namespace {

std::string memo_key(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ':';
    for (auto [u, v] : g.edges()) os << u << ',' << v << ';';
    return os.str();
}

Verdict engine(const SimpleGraph& g, int d, const EngineOptions& opts,
               std::uint64_t seed, int depth,
               std::map<std::string, Verdict>& memo);

// Exact certificate for the replacement graph, or nullopt.
std::optional<std::vector<CertificateStep>> exact_subchain(
    const SimpleGraph& g, int d, const EngineOptions& opts, std::uint64_t seed,
    int depth, std::map<std::string, Verdict>& memo) {
    Verdict sub = engine(g, d, opts, seed, depth, memo);
    if (sub.status != Status::GloballyRigid) return std::nullopt;
    return sub.steps;
}

Verdict engine(const SimpleGraph& g, int d, const EngineOptions& opts,
               std::uint64_t seed, int depth,
               std::map<std::string, Verdict>& memo) {
    std::string key = memo_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.error_bound = sz_bound(d, g.vertex_count(), opts.trials);
    int n = g.vertex_count();

    if (g.is_complete() && n <= d + 1) {
        verdict.status = Status::GloballyRigid;
        verdict.error_bound = "0 (complete graph)";
        verdict.steps.push_back(
            {Rule::CompleteSmall, {{"graph", graph_to_json(g)}, {"n", n}}});
        memo[key] = verdict;
        return verdict;
    }

    // Necessity. Non-complete graphs on fewer than d+2 vertices cannot be
    // (d+1)-connected, so this also settles the degenerate small cases.
    auto hendrickson = hendrickson_check(g, d, derive_seed(seed, 1));
    if (!hendrickson.pass) {
        verdict.status = Status::NotGloballyRigid;
        if (d == 2) verdict.error_bound = "0 (all sub-checks combinatorial)";
        verdict.steps.push_back(hendrickson_fail_step(g, hendrickson));
        memo[key] = verdict;
        return verdict;
    }

    if (d == 2) {
        verdict.status = Status::GloballyRigid;
        verdict.error_bound = "0 (all sub-checks combinatorial)";
        verdict.steps.push_back({Rule::D2Characterization,
                                 {{"graph", graph_to_json(g)},
                                  {"connectivity", hendrickson.connectivity},
                                  {"redundant", true}}});
        memo[key] = verdict;
        return verdict;
    }

    // Sufficiency: vertex-redundant rigidity.
    if (auto vr = vertex_redundant_certificate(g, d, derive_seed(seed, 2))) {
        vr->seed = seed;
        memo[key] = *vr;
        return *vr;
    }

    // Bounded-depth search for a vertex satisfying the removal lemma, on a
    // replacement graph certified recursively by exact rules only.
    if (depth > 0) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        for (int v : order) {
            if (g.degree(v) <= d) continue;
            SimpleGraph remainder = g.without_vertex(v);
            if (!is_rigid(remainder, d, derive_seed(seed, 1000 + v))) continue;
            SimpleGraph replacement = vertex_clique_replace(g, v);
            EngineOptions sub_opts = opts; // exact rules only below this point
            sub_opts.stress_fallback = false;
            auto sub = exact_subchain(replacement, d, sub_opts,
                                      derive_seed(seed, 2000 + v), depth - 1,
                                      memo);
            if (!sub) continue;
            verdict.status = Status::GloballyRigid;
            nlohmann::json sub_steps = nlohmann::json::array();
            for (const auto& s : *sub)
                sub_steps.push_back({{"rule", rule_name(s.rule)},
                                     {"payload", s.payload}});
            verdict.steps.push_back({Rule::VertexRemovalLemma,
                                     {{"graph", graph_to_json(g)},
                                      {"vertex", v},
                                      {"replacement", graph_to_json(replacement)},
                                      {"sub_steps", sub_steps}}});
            memo[key] = verdict;
            return verdict;
        }
    }

    if (opts.stress_fallback) {
        auto ght =
            ght_global_rigidity_test(g, d, derive_seed(seed, 3), opts.trials);
        verdict.status = ght.outcome == GhtOutcome::ProbablyGloballyRigid
                             ? Status::ProbablyGloballyRigid
                             : Status::ProbablyNot;
        verdict.steps.push_back({Rule::StressRank,
                                 {{"graph", graph_to_json(g)},
                                  {"trial_ranks", ght.trial_ranks},
                                  {"needed", ght.needed},
                                  {"test_seed", derive_seed(seed, 3)},
                                  {"trials", opts.trials}}});
        memo[key] = verdict;
        return verdict;
    }

    verdict.status = Status::Unknown;
    memo[key] = verdict;
    return verdict;
}

} // namespace

Verdict global_rigidity_nd(const SimpleGraph& g, int d,
                           const EngineOptions& opts, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("global_rigidity_nd: d >= 1");
    std::map<std::string, Verdict> memo;
    return engine(g, d, opts, seed, opts.depth, memo);
}

std::optional<Verdict> vertex_redundant_certificate(const SimpleGraph& g,
                                                    int d,
                                                    std::uint64_t seed) {
    if (g.vertex_count() < 2) return std::nullopt;
    nlohmann::json checks = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        SimpleGraph rest = g.without_vertex(v);
        if (!is_rigid(rest, d, derive_seed(seed, v))) return std::nullopt;
        checks.push_back({{"vertex", v}, {"remainder_rigid", true}});
    }
    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.status = Status::GloballyRigid;
    verdict.error_bound = sz_bound(d, g.vertex_count(), 3);
    verdict.steps.push_back(
        {Rule::VertexRedundant,
         {{"graph", graph_to_json(g)}, {"checks", checks}}});
    return verdict;
}

LemmaCheck vertex_removal_lemma_check(const SimpleGraph& g, int d, int v,
                                      std::uint64_t seed,
                                      const EngineOptions& opts) {
    LemmaCheck result;
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex_removal_lemma_check: bad vertex");
    if (g.degree(v) <= d) {
        result.reason = "degree not larger than d";
        return result;
    }
    if (!is_rigid(g.without_vertex(v), d, derive_seed(seed, 11))) {
        result.reason = "G-v is not rigid";
        return result;
    }
    SimpleGraph replacement = vertex_clique_replace(g, v);
    Verdict sub = global_rigidity_nd(replacement, d, opts, derive_seed(seed, 12));
    if (sub.status != Status::GloballyRigid) {
        result.reason =
            "replacement not certified globally rigid by exact rules";
        return result;
    }
    result.applicable = true;
    result.replacement_steps = sub.steps;
    return result;
}

Verdict combine_check(const CombineInput& input, int d,
                      const EngineOptions& opts, std::uint64_t seed) {
    // Vertex sets and X.
    std::vector<int> v1 = input.v1, v2 = input.v2;
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    std::vector<int> x;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                          std::back_inserter(x));
    auto inside = [](const std::vector<int>& set, int v) {
        return std::binary_search(set.begin(), set.end(), v);
    };
    for (auto [a, b] : input.g1.edges())
        if (!inside(v1, a) || !inside(v1, b))
            throw std::invalid_argument("combine: G1 has an edge outside V1");
    for (auto [a, b] : input.g2.edges())
        if (!inside(v2, a) || !inside(v2, b))
            throw std::invalid_argument("combine: G2 has an edge outside V2");
    for (auto [a, b] : input.h_edges)
        if (!inside(x, a) || !inside(x, b))
            throw std::invalid_argument("combine: H has an edge outside X");

    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.error_bound = sz_bound(d, input.g1.vertex_count(), opts.trials);
    verdict.status = Status::Unknown;

    nlohmann::json payload{{"g1", graph_to_json(input.g1)},
                           {"g2", graph_to_json(input.g2)},
                           {"v1", v1},
                           {"v2", v2},
                           {"x", x}};
    {
        nlohmann::json he = nlohmann::json::array();
        for (auto [a, b] : input.h_edges) he.push_back({a, b});
        payload["h_edges"] = he;
        payload["witness"] = input.witness.root_of;
    }

    if (static_cast<int>(x.size()) < d + 1) {
        payload["failed"] = "|X| < d+1";
        verdict.steps.push_back({Rule::Combination, payload});
        return verdict;
    }

    // G1 rigid (on its own vertex set).
    SimpleGraph g1_local = input.g1.induced(v1);
    if (!rigid_for_dim(g1_local, d, derive_seed(seed, 21))) {
        payload["failed"] = "G1 not rigid";
        verdict.steps.push_back({Rule::Combination, payload});
        return verdict;
    }

    // Rooted minor of (G2, X): translate the witness to G2-local ids.
    std::vector<int> old2;
    SimpleGraph g2_local = input.g2.induced(v2, &old2);
    auto local2 = [&](int orig) {
        return static_cast<int>(
            std::lower_bound(old2.begin(), old2.end(), orig) - old2.begin());
    };
    RootedMinorWitness local_witness;
    local_witness.root_of.assign(g2_local.vertex_count(), -1);
    if (input.witness.root_of.size() != static_cast<size_t>(
                                            input.g2.vertex_count()))
        throw std::invalid_argument(
            "combine: witness must assign every vertex of G2's id space");
    for (int orig : old2) {
        int root = input.witness.root_of[orig];
        local_witness.root_of[local2(orig)] = root < 0 ? -1 : local2(root);
    }
    std::vector<int> roots_local;
    for (int r : x) roots_local.push_back(local2(r));
    std::vector<EdgePair> h_local;
    for (auto [a, b] : input.h_edges) h_local.emplace_back(local2(a), local2(b));
    if (!verify_rooted_minor(g2_local, roots_local, h_local, local_witness)) {
        payload["failed"] = "rooted minor witness rejected";
        verdict.steps.push_back({Rule::Combination, payload});
        return verdict;
    }

    // Global rigidity branches.
    auto with_edges = [](const SimpleGraph& g, const std::vector<EdgePair>& extra) {
        auto edges = g.edges();
        for (auto e : extra)
            if (!g.has_edge(e.first, e.second)) edges.push_back(e);
        return SimpleGraph(g.vertex_count(), edges);
    };
    std::vector<EdgePair> kx;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) kx.emplace_back(x[i], x[j]);

    auto sub_verdict = [&](const SimpleGraph& whole,
                           const std::vector<int>& verts, std::uint64_t salt) {
        return global_rigidity_nd(whole.induced(verts), d, opts,
                                  derive_seed(seed, salt));
    };

    struct Branch {
        std::string name;
        Verdict first, second;
    };
    std::vector<Branch> branches;
    branches.push_back({"g1h+g2kx",
                        sub_verdict(with_edges(input.g1, input.h_edges), v1, 31),
                        sub_verdict(with_edges(input.g2, kx), v2, 32)});
    branches.push_back({"g1kx+g2h",
                        sub_verdict(with_edges(input.g1, kx), v1, 33),
                        sub_verdict(with_edges(input.g2, input.h_edges), v2, 34)});

    auto acceptable = [](Status s) {
        return s == Status::GloballyRigid || s == Status::ProbablyGloballyRigid;
    };
    for (const auto& branch : branches) {
        if (!acceptable(branch.first.status) || !acceptable(branch.second.status))
            continue;
        bool exact = branch.first.status == Status::GloballyRigid &&
                     branch.second.status == Status::GloballyRigid;
        payload["branch"] = branch.name;
        payload["sub1"] = verdict_to_json(branch.first);
        payload["sub2"] = verdict_to_json(branch.second);
        verdict.status =
            exact ? Status::GloballyRigid : Status::ProbablyGloballyRigid;
        verdict.steps.push_back({Rule::Combination, payload});
        return verdict;
    }
    payload["failed"] = "neither global-rigidity branch certified";
    verdict.steps.push_back({Rule::Combination, payload});
    return verdict;
}

Verdict kchain_global_check(const std::vector<int>& sizes, int d,
                            const EngineOptions& opts, std::uint64_t seed) {
    SimpleGraph chain = k_chain(sizes);
    auto parts = k_chain_parts(sizes);
    auto fallback = [&]() {
        return global_rigidity_nd(chain, d, opts, derive_seed(seed, 40));
    };
    if (chain.vertex_count() < 2) return fallback();
    auto conn = vertex_connectivity(chain);
    if (conn.k < d + 1) return fallback();

    // Proof plan: delete a vertex of the smaller outer part; the remainder
    // must stay rigid, and the completed replacement globally rigid.
    const auto& part = sizes.front() <= sizes.back() ? parts.front() : parts.back();
    int v = part.front();
    SimpleGraph remainder = chain.without_vertex(v);
    if (!rigid_for_dim(remainder, d, derive_seed(seed, 41))) return fallback();
    SimpleGraph replacement = vertex_clique_replace(chain, v);
    Verdict sub = global_rigidity_nd(replacement, d, opts, derive_seed(seed, 42));
    if (sub.status != Status::GloballyRigid) return fallback();

    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.status = Status::GloballyRigid;
    verdict.error_bound = sz_bound(d, chain.vertex_count(), opts.trials);
    verdict.steps.push_back({Rule::KChain,
                             {{"sizes", sizes},
                              {"graph", graph_to_json(chain)},
                              {"connectivity", conn.k},
                              {"vertex", v},
                              {"replacement", graph_to_json(replacement)},
                              {"sub", verdict_to_json(sub)}}});
    return verdict;
}

Verdict body_bar_verdict(const Multigraph& h, int d, std::uint64_t seed) {
    auto layout = body_bar_graph(h, d);
    auto check = body_bar_global_check(h, d);
    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.error_bound = "0 (tree packings are exact certificates)";
    verdict.status = check.globally_rigid ? Status::GloballyRigid
                                          : Status::NotGloballyRigid;
    nlohmann::json per_edge = nlohmann::json::array();
    for (const auto& pe : check.per_edge)
        per_edge.push_back(
            {{"copy", pe.copy}, {"packing", packing_to_json(pe.certificate)}});
    verdict.steps.push_back({Rule::BodyBar,
                             {{"h", multigraph_to_json(h)},
                              {"d", d},
                              {"graph", graph_to_json(layout.graph)},
                              {"per_edge", per_edge}}});
    return verdict;
}

Verdict body_hinge_verdict(const Multigraph& h, int d,
                           const EngineOptions& opts, std::uint64_t seed) {
    auto layout = body_hinge_graph(h, d);
    auto check = body_hinge_global_check(h, d);
    if (!check.globally_rigid)
        return global_rigidity_nd(layout.graph, d, opts, derive_seed(seed, 50));
    Verdict verdict;
    verdict.dim = d;
    verdict.seed = seed;
    verdict.error_bound = "0 (tree packings are exact certificates)";
    verdict.status = Status::GloballyRigid;
    nlohmann::json per_edge = nlohmann::json::array();
    for (const auto& pe : check.per_edge)
        per_edge.push_back({{"copy", pe.copy},
                            {"parent_of", pe.parent_of},
                            {"packing", packing_to_json(pe.certificate)}});
    verdict.steps.push_back({Rule::BodyHinge,
                             {{"h", multigraph_to_json(h)},
                              {"d", d},
                              {"graph", graph_to_json(layout.graph)},
                              {"per_edge", per_edge}}});
    return verdict;
}

// ---------------------------------------------------------------------------
// Independent checker

namespace {

Multigraph multigraph_from_json(const nlohmann::json& j) {
    std::vector<EdgePair> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Multigraph(j.at("n").get<int>(), std::move(edges));
}

bool check_steps(const SimpleGraph& start, int d,
                 const std::vector<CertificateStep>& steps, Status claimed,
                 std::uint64_t seed);

std::vector<CertificateStep> steps_from_json(const nlohmann::json& arr) {
    std::vector<CertificateStep> steps;
    for (const auto& s : arr) {
        std::string rn = s.at("rule").get<std::string>();
        Rule rule = Rule::CompleteSmall;
        bool found = false;
        for (Rule r :
             {Rule::CompleteSmall, Rule::HendricksonFail, Rule::D2Characterization,
              Rule::EdgeDeletion, Rule::VertexRemovalLemma, Rule::VertexRedundant,
              Rule::Combination, Rule::KChain, Rule::BodyBar, Rule::BodyHinge,
              Rule::StressRank}) {
            if (rule_name(r) == rn) {
                rule = r;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown rule in chain: " + rn);
        steps.push_back({rule, s.at("payload")});
    }
    return steps;
}

bool check_one(SimpleGraph& cur, int d, const CertificateStep& step,
               Status claimed, std::uint64_t seed) {
    const auto& p = step.payload;
    if (p.contains("graph") && step.rule != Rule::KChain) {
        // Each payload pins the graph it talks about; it must match the
        // position in the chain.
        if (!(graph_from_json(p.at("graph")) == cur)) return false;
    }
    switch (step.rule) {
        case Rule::CompleteSmall:
            return claimed == Status::GloballyRigid && cur.is_complete() &&
                   cur.vertex_count() <= d + 1;
        case Rule::HendricksonFail: {
            if (claimed != Status::NotGloballyRigid) return false;
            std::string condition = p.at("condition").get<std::string>();
            if (condition == "connectivity") {
                if (cur.vertex_count() < 2) return true;
                return vertex_connectivity(cur).k < d + 1 ||
                       cur.vertex_count() < d + 2;
            }
            if (condition == "redundancy") {
                auto fe = p.at("failing_edge");
                SimpleGraph minus =
                    cur.without_edge(fe.at(0).get<int>(), fe.at(1).get<int>());
                if (d == 2) return !is_laman_rigid(minus);
                return !is_rigid(minus, d, derive_seed(seed, 61));
            }
            return false;
        }
        case Rule::D2Characterization:
            return claimed == Status::GloballyRigid && d == 2 &&
                   vertex_connectivity(cur).k >= 3 &&
                   is_redundantly_rigid_2d(cur);
        case Rule::EdgeDeletion: {
            if (claimed != Status::GloballyRigid) return false;
            auto e = p.at("edge");
            SimpleGraph next =
                cur.without_edge(e.at(0).get<int>(), e.at(1).get<int>());
            if (vertex_connectivity(next).k < 3) return false;
            if (!is_redundantly_rigid_2d(next)) return false;
            cur = next;
            return true;
        }
        case Rule::VertexRemovalLemma: {
            if (claimed != Status::GloballyRigid) return false;
            int v = p.at("vertex").get<int>();
            if (cur.degree(v) <= d) return false;
            SimpleGraph remainder = cur.without_vertex(v);
            if (d == 2) {
                if (!is_laman_rigid(remainder)) return false;
            } else if (!is_rigid(remainder, d, derive_seed(seed, 62))) {
                return false;
            }
            SimpleGraph replacement = vertex_clique_replace(cur, v);
            if (!(replacement == graph_from_json(p.at("replacement"))))
                return false;
            if (p.contains("sub_steps")) {
                auto sub = steps_from_json(p.at("sub_steps"));
                return check_steps(replacement, d, sub, Status::GloballyRigid,
                                   derive_seed(seed, 63));
            }
            cur = replacement;
            return true;
        }
        case Rule::VertexRedundant: {
            if (claimed != Status::GloballyRigid) return false;
            for (int v = 0; v < cur.vertex_count(); ++v)
                if (!is_rigid(cur.without_vertex(v), d,
                              derive_seed(seed, 100 + v)))
                    return false;
            return true;
        }
        case Rule::StressRank: {
            std::uint64_t test_seed = p.at("test_seed").get<std::uint64_t>();
            int trials = p.value("trials", 3);
            auto report = ght_global_rigidity_test(cur, d, test_seed, trials);
            std::vector<int> recorded =
                p.at("trial_ranks").get<std::vector<int>>();
            if (report.trial_ranks != recorded ||
                report.needed != p.at("needed").get<int>())
                return false;
            bool pgr = report.outcome == GhtOutcome::ProbablyGloballyRigid;
            return claimed == (pgr ? Status::ProbablyGloballyRigid
                                   : Status::ProbablyNot);
        }
        case Rule::KChain: {
            if (claimed != Status::GloballyRigid) return false;
            auto sizes = p.at("sizes").get<std::vector<int>>();
            SimpleGraph chain = k_chain(sizes);
            if (!(chain == cur)) return false;
            if (vertex_connectivity(chain).k < d + 1) return false;
            int v = p.at("vertex").get<int>();
            SimpleGraph remainder = chain.without_vertex(v);
            if (d == 2) {
                if (!is_laman_rigid(remainder)) return false;
            } else if (!is_rigid(remainder, d, derive_seed(seed, 64))) {
                return false;
            }
            SimpleGraph replacement = vertex_clique_replace(chain, v);
            if (!(replacement == graph_from_json(p.at("replacement"))))
                return false;
            auto sub = p.at("sub");
            return check_steps(replacement, d,
                               steps_from_json(sub.at("steps")),
                               Status::GloballyRigid, derive_seed(seed, 65));
        }
        case Rule::Combination: {
            if (p.contains("failed")) return false;
            SimpleGraph g1 = graph_from_json(p.at("g1"));
            SimpleGraph g2 = graph_from_json(p.at("g2"));
            auto v1 = p.at("v1").get<std::vector<int>>();
            auto v2 = p.at("v2").get<std::vector<int>>();
            auto x = p.at("x").get<std::vector<int>>();
            if (static_cast<int>(x.size()) < d + 1) return false;
            {
                auto edges = g1.edges();
                for (auto e : g2.edges()) edges.push_back(e);
                if (!(SimpleGraph(g1.vertex_count(), edges) == cur))
                    return false;
            }
            SimpleGraph g1_local = g1.induced(v1);
            if (d == 2) {
                if (!is_laman_rigid(g1_local)) return false;
            } else if (!is_rigid(g1_local, d, derive_seed(seed, 66))) {
                return false;
            }
            std::vector<int> old2;
            SimpleGraph g2_local = g2.induced(v2, &old2);
            auto local2 = [&](int orig) {
                return static_cast<int>(std::lower_bound(old2.begin(),
                                                         old2.end(), orig) -
                                        old2.begin());
            };
            RootedMinorWitness w;
            auto raw = p.at("witness").get<std::vector<int>>();
            w.root_of.assign(g2_local.vertex_count(), -1);
            for (int orig : old2)
                w.root_of[local2(orig)] =
                    raw[orig] < 0 ? -1 : local2(raw[orig]);
            std::vector<int> roots_local;
            for (int r : x) roots_local.push_back(local2(r));
            std::vector<EdgePair> h_local;
            for (const auto& e : p.at("h_edges"))
                h_local.emplace_back(local2(e.at(0).get<int>()),
                                     local2(e.at(1).get<int>()));
            if (!verify_rooted_minor(g2_local, roots_local, h_local, w))
                return false;
            auto sub1 = p.at("sub1");
            auto sub2 = p.at("sub2");
            std::string branch = p.at("branch").get<std::string>();
            std::vector<EdgePair> h_edges;
            for (const auto& e : p.at("h_edges"))
                h_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            std::vector<EdgePair> kx;
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = i + 1; j < x.size(); ++j)
                    kx.emplace_back(x[i], x[j]);
            auto with_edges = [](const SimpleGraph& g,
                                 const std::vector<EdgePair>& extra) {
                auto edges = g.edges();
                for (auto e : extra)
                    if (!g.has_edge(e.first, e.second)) edges.push_back(e);
                return SimpleGraph(g.vertex_count(), edges);
            };
            SimpleGraph first_graph =
                branch == "g1h+g2kx" ? with_edges(g1, h_edges).induced(v1)
                                     : with_edges(g1, kx).induced(v1);
            SimpleGraph second_graph =
                branch == "g1h+g2kx" ? with_edges(g2, kx).induced(v2)
                                     : with_edges(g2, h_edges).induced(v2);
            Status s1 = Status::Unknown, s2 = Status::Unknown;
            for (Status s : {Status::GloballyRigid, Status::ProbablyGloballyRigid,
                             Status::NotGloballyRigid, Status::ProbablyNot,
                             Status::Unknown}) {
                if (status_name(s) == sub1.at("status").get<std::string>()) s1 = s;
                if (status_name(s) == sub2.at("status").get<std::string>()) s2 = s;
            }
            if (!check_steps(first_graph, d, steps_from_json(sub1.at("steps")),
                             s1, derive_seed(seed, 67)))
                return false;
            if (!check_steps(second_graph, d, steps_from_json(sub2.at("steps")),
                             s2, derive_seed(seed, 68)))
                return false;
            bool exact = s1 == Status::GloballyRigid &&
                         s2 == Status::GloballyRigid;
            return claimed == (exact ? Status::GloballyRigid
                                     : Status::ProbablyGloballyRigid);
        }
        case Rule::BodyBar: {
            Multigraph h = multigraph_from_json(p.at("h"));
            int dd = p.at("d").get<int>();
            if (dd != d) return false;
            auto layout = body_bar_graph(h, d);
            if (!(layout.graph == cur)) return false;
            std::set<EdgePair> classes;
            for (auto e : h.edges) classes.insert(e);
            size_t expected = classes.size();
            if (p.at("per_edge").size() != expected) return false;
            bool all_feasible = true;
            for (const auto& pe : p.at("per_edge"))
                all_feasible = all_feasible &&
                               pe.at("packing").at("feasible").get<bool>();
            if (claimed != (all_feasible ? Status::GloballyRigid
                                         : Status::NotGloballyRigid))
                return false;
            for (const auto& pe : p.at("per_edge")) {
                int copy = pe.at("copy").get<int>();
                Multigraph minus = h.without_copy(copy);
                const auto& packing = pe.at("packing");
                if (packing.at("feasible").get<bool>()) {
                    TreePacking tp;
                    tp.k = packing.at("k").get<int>();
                    tp.assignment =
                        packing.at("assignment").get<std::vector<int>>();
                    if (tp.k != binom2(d + 1)) return false;
                    if (!verify_tree_packing(minus, tp)) return false;
                } else {
                    PartitionWitness w;
                    w.block_of = packing.at("block_of").get<std::vector<int>>();
                    w.blocks = packing.at("blocks").get<int>();
                    w.cross_edges = packing.at("cross_edges").get<int>();
                    w.required = packing.at("required").get<int>();
                    if (!verify_partition_witness(minus, binom2(d + 1), w))
                        return false;
                }
            }
            return true;
        }
        case Rule::BodyHinge: {
            if (claimed != Status::GloballyRigid) return false;
            Multigraph h = multigraph_from_json(p.at("h"));
            int dd = p.at("d").get<int>();
            if (dd != d) return false;
            auto layout = body_hinge_graph(h, d);
            if (!(layout.graph == cur)) return false;
            int big = binom2(d + 1);
            std::set<EdgePair> classes;
            for (auto e : h.edges) classes.insert(e);
            if (p.at("per_edge").size() != classes.size()) return false;
            for (const auto& pe : p.at("per_edge")) {
                int copy = pe.at("copy").get<int>();
                std::vector<int> parent_of;
                Multigraph expanded = multiplicity_expand(
                    h, big - 1, std::make_pair(copy, std::max(0, big - 3)),
                    &parent_of);
                if (pe.at("parent_of").get<std::vector<int>>() != parent_of)
                    return false;
                const auto& packing = pe.at("packing");
                if (!packing.at("feasible").get<bool>()) return false;
                TreePacking tp;
                tp.k = packing.at("k").get<int>();
                tp.assignment = packing.at("assignment").get<std::vector<int>>();
                if (tp.k != big) return false;
                if (!verify_tree_packing(expanded, tp)) return false;
            }
            return true;
        }
    }
    return false;
}

bool is_deconstruction_step(const CertificateStep& s) {
    return s.rule == Rule::EdgeDeletion ||
           (s.rule == Rule::VertexRemovalLemma &&
            !s.payload.contains("sub_steps"));
}

bool check_steps(const SimpleGraph& start, int d,
                 const std::vector<CertificateStep>& steps, Status claimed,
                 std::uint64_t seed) {
    if (claimed == Status::Unknown) return true; // nothing is claimed
    if (steps.empty())
        return claimed == Status::GloballyRigid && start.vertex_count() == 4 &&
               start.is_complete() && d == 2;
    bool deconstruction = std::all_of(steps.begin(), steps.end(),
                                      is_deconstruction_step);
    if (deconstruction) {
        // Graph-transforming chain; must end at K4.
        if (claimed != Status::GloballyRigid || d != 2) return false;
        SimpleGraph cur = start;
        std::uint64_t salt = 0;
        for (const auto& step : steps)
            if (!check_one(cur, d, step, claimed, derive_seed(seed, salt++)))
                return false;
        return cur.vertex_count() == 4 && cur.is_complete();
    }
    if (steps.size() != 1) return false;
    SimpleGraph cur = start;
    return check_one(cur, d, steps[0], claimed, derive_seed(seed, 0));
}

} // namespace

bool verify_certificate_chain(const SimpleGraph& g, const Verdict& v,
                              std::uint64_t recheck_seed) {
    try {
        return check_steps(g, v.dim, v.steps, v.status, recheck_seed);
    } catch (const std::exception&) {
        return false;
    }
}

bool verify_deconstruction_2d(const SimpleGraph& g,
                              const std::vector<CertificateStep>& steps) {
    try {
        return check_steps(g, 2, steps, Status::GloballyRigid, 0x6dec);
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace rigikit
