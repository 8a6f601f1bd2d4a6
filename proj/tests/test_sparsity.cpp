#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "rigikit/rng.hpp"
#include "rigikit/sparsity.hpp"

using namespace rigikit;

namespace {

SimpleGraph one_ext_k4() {
    // K4 with edge (0,1) replaced by a new degree-3 vertex on {0,1,2}
    return SimpleGraph(
        5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

SimpleGraph octahedron() {
    std::vector<EdgePair> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    return SimpleGraph(6, edges);
}

SimpleGraph two_k4_shared_vertex() {
    std::vector<EdgePair> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    int ids[4] = {0, 4, 5, 6};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(ids[i], ids[j]);
    return SimpleGraph(7, edges);
}

SimpleGraph k4_2sum_k4() {
    std::vector<EdgePair> edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                   {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}};
    return SimpleGraph(6, edges); // glue edge {0,1} deleted on both sides
}

// Oracle: the common-circuit components by explicit circuit enumeration.
std::vector<std::vector<int>> m_components_oracle(const SimpleGraph& g) {
    auto circuits = enumerate_circuits_bruteforce(g);
    int m = g.edge_count();
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : circuits)
        for (size_t i = 1; i < c.size(); ++i) parent[find(c[0])] = find(c[i]);
    std::vector<std::vector<int>> classes(m);
    for (int i = 0; i < m; ++i) classes[find(i)].push_back(i);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

} // namespace

TEST_CASE("pebble rank") {
    CHECK(pebble_rank(SimpleGraph::complete(3)).rank == 3);
    CHECK(pebble_rank(SimpleGraph::complete(4)).rank == 5);
    CHECK(pebble_rank(SimpleGraph::cycle(4)).rank == 4);
    // independent subset really is independent and maximal
    auto pr = pebble_rank(SimpleGraph::complete(4));
    CHECK(pr.independent.size() == 5);
    CHECK(pebble_independent(SimpleGraph::complete(4), pr.independent));
}

TEST_CASE("pebble rank equals brute-force sparsity rank on all n<=5 graphs") {
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<EdgePair> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<EdgePair> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            SimpleGraph g(n, edges);
            // greedy with the brute-force independence oracle
            std::vector<EdgePair> chosen;
            for (auto e : edges) {
                chosen.push_back(e);
                if (!sparse23_bruteforce(n, chosen)) chosen.pop_back();
            }
            CHECK(pebble_rank(g).rank == static_cast<int>(chosen.size()));
        }
    }
}

TEST_CASE("laman rigidity") {
    CHECK(is_laman_rigid(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    CHECK(!is_laman_rigid(SimpleGraph::cycle(4)));
    CHECK(is_laman_rigid(SimpleGraph::complete_bipartite(3, 3)));
    CHECK(is_laman_rigid(SimpleGraph(2, {{0, 1}}))); // K2 by convention
    CHECK(!is_laman_rigid(SimpleGraph(2, {})));
}

TEST_CASE("redundant rigidity in the plane") {
    CHECK(is_redundantly_rigid_2d(SimpleGraph::complete(4)));
    EdgePair failing;
    CHECK(!is_redundantly_rigid_2d(
        SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), &failing));
    CHECK(!is_redundantly_rigid_2d(SimpleGraph::complete_bipartite(3, 3)));
}

TEST_CASE("planar rigidity circuits") {
    CHECK(is_circuit_r2(SimpleGraph::complete(4)));
    CHECK(!is_circuit_r2(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    CHECK(is_circuit_r2(one_ext_k4()));
    CHECK(!is_circuit_r2(SimpleGraph::cycle(4)));
}

TEST_CASE("m-components") {
    auto k4 = SimpleGraph::complete(4);
    CHECK(m_components(k4).size() == 1);
    CHECK(is_m_connected(k4));

    auto shared = two_k4_shared_vertex();
    auto classes = m_components(shared);
    CHECK(classes.size() == 2);
    for (const auto& c : classes) CHECK(c.size() == 6);

    // a tree: every edge is its own class
    SimpleGraph tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(m_components(tree).size() == 4);
    CHECK(!is_m_connected(tree));

    CHECK(!is_m_connected(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    CHECK(is_m_connected(k4_2sum_k4()));
    CHECK(!is_m_connected(SimpleGraph(3, {})));
}

TEST_CASE("m-components agree with the circuit-enumeration oracle") {
    std::vector<SimpleGraph> suite = {
        SimpleGraph::complete(4),
        SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
        two_k4_shared_vertex(),
        k4_2sum_k4(),
        one_ext_k4(),
        SimpleGraph::complete_bipartite(3, 3),
        SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        SimpleGraph::cycle(6),
    };
    for (const auto& g : suite) CHECK(m_components(g) == m_components_oracle(g));
}

TEST_CASE("ear decomposition") {
    auto k4 = SimpleGraph::complete(4);
    auto dec = ear_decomposition(k4);
    CHECK(dec.circuits.size() == 1);
    CHECK(dec.circuits[0].size() == 6);
    CHECK(verify_ear_decomposition(k4, dec));

    auto glued = k4_2sum_k4();
    auto dec2 = ear_decomposition(glued);
    CHECK(dec2.circuits.size() == 2);
    CHECK(verify_ear_decomposition(glued, dec2));

    // adding an edge on covered vertices allows (and forces) a final 1-ear
    auto plus = one_ext_k4().with_edge(0, 1);
    auto dec3 = ear_decomposition(plus);
    CHECK(verify_ear_decomposition(plus, dec3));
    std::set<int> covered_vertices;
    std::vector<bool> covered_edges(plus.edge_count(), false);
    for (size_t i = 0; i + 1 < dec3.circuits.size(); ++i)
        for (int e : dec3.circuits[i]) {
            covered_edges[e] = true;
            covered_vertices.insert(plus.edges()[e].first);
            covered_vertices.insert(plus.edges()[e].second);
        }
    const auto& last = dec3.circuits.back();
    std::set<int> last_new_vertices;
    for (int e : last) {
        if (covered_edges[e]) continue;
        last_new_vertices.insert(plus.edges()[e].first);
        last_new_vertices.insert(plus.edges()[e].second);
    }
    bool vertices_inside = std::all_of(
        last_new_vertices.begin(), last_new_vertices.end(),
        [&](int v) { return covered_vertices.count(v) > 0; });
    if (vertices_inside) {
        int fresh = 0;
        for (int e : last) fresh += !covered_edges[e];
        CHECK(fresh == 1);
    }

    CHECK_THROWS_AS(ear_decomposition(SimpleGraph::cycle(4)),
                    std::invalid_argument);
}

TEST_CASE("ear decompositions verify on random M-connected graphs") {
    SplitMix64 rng(2024);
    int found = 0;
    while (found < 8) {
        int n = 5 + static_cast<int>(rng.below(4));
        std::vector<EdgePair> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < 55) edges.emplace_back(u, v);
        SimpleGraph g(n, edges);
        if (!is_m_connected(g)) continue;
        ++found;
        auto dec = ear_decomposition(g);
        CHECK(verify_ear_decomposition(g, dec));
    }
}

TEST_CASE("find_reduction") {
    // a degree-3 vertex is preferred, smallest id first
    auto plus = one_ext_k4().with_edge(0, 1);
    auto red = find_reduction(plus);
    CHECK(red.kind == Reduction::Kind::Degree3Vertex);
    CHECK(plus.degree(red.vertex) == 3);
    CHECK(red.vertex == 3); // vertices 3 and 4 have degree 3

    // octahedron: all degrees 4, so a removable edge must exist
    auto oct = octahedron();
    auto red2 = find_reduction(oct);
    CHECK(red2.kind == Reduction::Kind::RemovableEdge);
    auto minus = oct.without_edge(red2.edge.first, red2.edge.second);
    CHECK(vertex_connectivity(minus).k >= 3);
    CHECK(is_redundantly_rigid_2d(minus));

    CHECK_THROWS_AS(find_reduction(SimpleGraph::cycle(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_reduction(SimpleGraph::complete(4)),
                    std::invalid_argument);
}
