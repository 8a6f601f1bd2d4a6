#include <doctest.h>

#include "rigikit/builders.hpp"
#include "rigikit/certify.hpp"
#include "rigikit/rigidity.hpp"

using namespace rigikit;

namespace {

constexpr std::uint64_t kSeed = 0xCE47;

SimpleGraph octahedron() {
    std::vector<EdgePair> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return SimpleGraph(6, edges);
}

SimpleGraph one_ext_k4() {
    return SimpleGraph(
        5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

SimpleGraph k4_minus() {
    return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

SimpleGraph complete_multipartite_2222() {
    std::vector<EdgePair> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return SimpleGraph(8, edges);
}

Multigraph parallel_edges(int copies) {
    std::vector<EdgePair> e(copies, {0, 1});
    return Multigraph(2, e);
}

} // namespace

TEST_CASE("hendrickson check") {
    auto fail1 = hendrickson_check(k4_minus(), 2, kSeed);
    CHECK(!fail1.pass);
    CHECK(fail1.condition == "redundancy");

    auto fail2 = hendrickson_check(SimpleGraph::complete_bipartite(3, 3), 2,
                                   kSeed);
    CHECK(!fail2.pass);
    CHECK(fail2.condition == "redundancy");

    auto pass = hendrickson_check(SimpleGraph::complete_bipartite(5, 5), 3,
                                  kSeed);
    CHECK(pass.pass); // necessity only: K_{5,5} is famously not globally rigid

    CHECK(hendrickson_check(SimpleGraph::complete(3), 2, kSeed).pass);
    auto conn = hendrickson_check(SimpleGraph::cycle(5), 2, kSeed);
    CHECK(!conn.pass);
    CHECK(conn.condition == "connectivity");
}

TEST_CASE("exact planar verdicts") {
    auto k3 = global_rigidity_2d(SimpleGraph::complete(3));
    CHECK(k3.status == Status::GloballyRigid);
    CHECK(k3.steps[0].rule == Rule::CompleteSmall);
    CHECK(verify_certificate_chain(SimpleGraph::complete(3), k3));

    auto k4 = global_rigidity_2d(SimpleGraph::complete(4));
    CHECK(k4.status == Status::GloballyRigid);
    CHECK(k4.steps[0].rule == Rule::D2Characterization);
    CHECK(verify_certificate_chain(SimpleGraph::complete(4), k4));

    auto missing = global_rigidity_2d(k4_minus());
    CHECK(missing.status == Status::NotGloballyRigid);
    CHECK(missing.steps[0].rule == Rule::HendricksonFail);
    CHECK(verify_certificate_chain(k4_minus(), missing));

    auto k2 = global_rigidity_2d(SimpleGraph(2, {{0, 1}}));
    CHECK(k2.status == Status::GloballyRigid);
}

TEST_CASE("deconstruction certificates") {
    CHECK(deconstruction_certificate_2d(SimpleGraph::complete(4)).empty());

    auto ext = one_ext_k4();
    auto steps = deconstruction_certificate_2d(ext);
    CHECK(steps.size() == 1);
    CHECK(steps[0].rule == Rule::VertexRemovalLemma);
    CHECK(verify_deconstruction_2d(ext, steps));

    auto oct_steps = deconstruction_certificate_2d(octahedron());
    CHECK(oct_steps.size() >= 1);
    CHECK(verify_deconstruction_2d(octahedron(), oct_steps));

    CHECK_THROWS_AS(deconstruction_certificate_2d(k4_minus()),
                    std::invalid_argument);

    // tampering is caught: drop the last step
    auto broken = oct_steps;
    broken.pop_back();
    CHECK(!verify_deconstruction_2d(octahedron(), broken));
}

TEST_CASE("vertex removal lemma check") {
    auto ext5 = one_extension(SimpleGraph::complete(5), 3, {0, 1}, {2, 3});
    auto l = vertex_removal_lemma_check(ext5, 3, 5, kSeed);
    CHECK(l.applicable);

    auto k55 = SimpleGraph::complete_bipartite(5, 5);
    auto l2 = vertex_removal_lemma_check(k55, 3, 0, kSeed);
    CHECK(!l2.applicable);
    CHECK(l2.reason == "G-v is not rigid");

    auto l3 = vertex_removal_lemma_check(SimpleGraph::complete(4), 2, 0, kSeed);
    CHECK(l3.applicable);
}

TEST_CASE("engine verdicts") {
    EngineOptions opts;

    auto oct = global_rigidity_nd(octahedron(), 2, opts, kSeed);
    CHECK(oct.status == Status::GloballyRigid);
    CHECK(oct.steps[0].rule == Rule::D2Characterization);
    CHECK(verify_certificate_chain(octahedron(), oct));

    auto multi = global_rigidity_nd(complete_multipartite_2222(), 3, opts, kSeed);
    CHECK(multi.status == Status::GloballyRigid);
    CHECK(multi.steps[0].rule == Rule::VertexRedundant);
    CHECK(verify_certificate_chain(complete_multipartite_2222(), multi));

    auto k55 = global_rigidity_nd(SimpleGraph::complete_bipartite(5, 5), 3,
                                  opts, kSeed);
    CHECK(k55.status == Status::ProbablyNot);
    CHECK(k55.steps[0].rule == Rule::StressRank);
    CHECK(verify_certificate_chain(SimpleGraph::complete_bipartite(5, 5), k55));

    auto k5 = global_rigidity_nd(SimpleGraph::complete(5), 3, opts, kSeed);
    CHECK(k5.status == Status::GloballyRigid);
    CHECK(verify_certificate_chain(SimpleGraph::complete(5), k5));

    // two isolated vertices: not complete, so necessity fails at any d
    auto lonely = global_rigidity_nd(SimpleGraph(2, {}), 3, opts, kSeed);
    CHECK(lonely.status == Status::NotGloballyRigid);

    // adding an edge to a certified graph never flips to NotGloballyRigid
    auto base = complete_multipartite_2222();
    auto with_extra = base.with_edge(0, 1);
    auto extra_verdict = global_rigidity_nd(with_extra, 3, opts, kSeed);
    CHECK(extra_verdict.status != Status::NotGloballyRigid);
}

TEST_CASE("certificates survive only faithful payloads") {
    EngineOptions opts;
    auto verdict = global_rigidity_nd(complete_multipartite_2222(), 3, opts,
                                      kSeed);
    REQUIRE(verdict.status == Status::GloballyRigid);
    // claim the same chain for a different graph
    CHECK(!verify_certificate_chain(SimpleGraph::complete_bipartite(5, 5),
                                    verdict));
    // flip the claimed status
    auto tampered = verdict;
    tampered.status = Status::NotGloballyRigid;
    CHECK(!verify_certificate_chain(complete_multipartite_2222(), tampered));
}

TEST_CASE("vertex redundant certificate helper") {
    auto cert = vertex_redundant_certificate(octahedron(), 2, kSeed);
    REQUIRE(cert);
    CHECK(cert->status == Status::GloballyRigid);
    CHECK(cert->steps[0].rule == Rule::VertexRedundant);
    CHECK(verify_certificate_chain(octahedron(), *cert));

    CHECK(!vertex_redundant_certificate(SimpleGraph::complete_bipartite(5, 5),
                                        3, kSeed));
}

TEST_CASE("combination theorem") {
    // two K5s sharing four vertices {1,2,3,4}; H is one pair inside X
    std::vector<int> v1{0, 1, 2, 3, 4}, v2{1, 2, 3, 4, 5};
    std::vector<EdgePair> e1, e2;
    for (size_t i = 0; i < v1.size(); ++i)
        for (size_t j = i + 1; j < v1.size(); ++j) {
            e1.emplace_back(v1[i], v1[j]);
            e2.emplace_back(v2[i], v2[j]);
        }
    CombineInput input;
    input.g1 = SimpleGraph(6, e1);
    input.g2 = SimpleGraph(6, e2);
    input.v1 = v1;
    input.v2 = v2;
    input.h_edges = {{1, 2}};
    input.witness.root_of = {-1, 1, 2, 3, 4, 1}; // vertex 5 joins block of 1
    EngineOptions opts;
    auto verdict = combine_check(input, 3, opts, kSeed);
    CHECK(verdict.status == Status::GloballyRigid);
    // the union is K6 minus the edge {0,5}
    auto edges = input.g1.edges();
    for (auto e : input.g2.edges()) edges.push_back(e);
    SimpleGraph uni(6, edges);
    CHECK(uni.edge_count() == 14);
    CHECK(verify_certificate_chain(uni, verdict));

    // destroy the witness: vertex 5's block loses its crossing edge for H
    CombineInput bad = input;
    bad.g2 = SimpleGraph(6, {{1, 5}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 5},
                             {2, 5}, {2, 3}, {2, 4}});
    // remove the direct 1-2 edge and make U_1 = {1}, U_2 = {2} disconnected
    // from each other: no G2-edge between the blocks
    bad.witness.root_of = {-1, 1, 2, 3, 4, 3};
    auto bad_verdict = combine_check(bad, 3, opts, kSeed);
    CHECK(bad_verdict.status == Status::Unknown);
}

TEST_CASE("k-chain verdicts") {
    EngineOptions opts;

    auto k33 = kchain_global_check({3, 3}, 2, opts, kSeed);
    CHECK(k33.status == Status::NotGloballyRigid); // Laman-tight

    auto k55 = kchain_global_check({5, 5}, 3, opts, kSeed);
    CHECK(k55.status == Status::ProbablyNot);

    auto k66 = kchain_global_check({6, 6}, 3, opts, kSeed);
    bool ok66 = k66.status == Status::GloballyRigid ||
                k66.status == Status::ProbablyGloballyRigid;
    CHECK(ok66);
    if (k66.status == Status::GloballyRigid)
        CHECK(verify_certificate_chain(k_chain({6, 6}), k66));

    auto chain4 = kchain_global_check({4, 4, 4, 4}, 2, opts, kSeed);
    CHECK(chain4.status == Status::GloballyRigid);
}

TEST_CASE("body-bar and body-hinge verdicts") {
    auto bar = body_bar_verdict(parallel_edges(7), 3, kSeed);
    CHECK(bar.status == Status::GloballyRigid);
    auto bar_layout = body_bar_graph(parallel_edges(7), 3);
    CHECK(verify_certificate_chain(bar_layout.graph, bar));

    auto bar_no = body_bar_verdict(parallel_edges(6), 3, kSeed);
    CHECK(bar_no.status == Status::NotGloballyRigid);
    auto bar_no_layout = body_bar_graph(parallel_edges(6), 3);
    CHECK(verify_certificate_chain(bar_no_layout.graph, bar_no));

    EngineOptions opts;
    auto hinge = body_hinge_verdict(parallel_edges(2), 3, opts, kSeed);
    CHECK(hinge.status == Status::GloballyRigid);
    auto hinge_layout = body_hinge_graph(parallel_edges(2), 3);
    CHECK(verify_certificate_chain(hinge_layout.graph, hinge));
}

TEST_CASE("report serialization carries theorem names and seeds") {
    auto verdict = global_rigidity_2d(SimpleGraph::complete(4));
    verdict.seed = kSeed;
    auto j = verdict_to_json(verdict);
    CHECK(j["status"] == "GloballyRigid");
    CHECK(j["seed"] == kSeed);
    CHECK(j["steps"].size() == 1);
    CHECK(j["steps"][0].contains("theorem"));
    CHECK(j["steps"][0]["rule"] == "D2Characterization");
}
