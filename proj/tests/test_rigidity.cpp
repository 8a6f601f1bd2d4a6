#include <doctest.h>

#include <algorithm>

#include "rigikit/rigidity.hpp"
#include "rigikit/sparsity.hpp"

using namespace rigikit;

namespace {

constexpr std::uint64_t kSeed = 0xA11CE;

RatFramework rat_framework(const SimpleGraph& g, int dim,
                           std::vector<std::vector<long long>> pts) {
    RatFramework f{g, dim, {}};
    for (const auto& p : pts) {
        f.config.emplace_back();
        for (long long c : p) f.config.back().emplace_back(c);
    }
    return f;
}

SimpleGraph octahedron() {
    std::vector<EdgePair> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return SimpleGraph(6, edges);
}

} // namespace

TEST_CASE("rigidity matrix layout") {
    auto f = rat_framework(SimpleGraph(2, {{0, 1}}), 2, {{0, 0}, {1, 0}});
    auto m = rigidity_matrix(f);
    CHECK(m.rows == 1);
    CHECK(m.cols == 4);
    auto dense = m.dense();
    // the single row is +-(1,0,-1,0) depending on edge orientation
    std::vector<Rat> row = dense[0];
    bool plus = row == std::vector<Rat>{1, 0, -1, 0};
    bool minus = row == std::vector<Rat>{-1, 0, 1, 0};
    CHECK((plus || minus));

    auto tri = rat_framework(SimpleGraph::complete(3), 2,
                             {{0, 0}, {1, 0}, {0, 1}});
    CHECK(rank(rigidity_matrix(tri)) == 3);
}

TEST_CASE("generic rank") {
    CHECK(generic_rank(SimpleGraph::complete(4), 2, kSeed) == 5);
    CHECK(generic_rank(SimpleGraph::cycle(4), 2, kSeed) == 4);
    auto k45 = SimpleGraph::complete_bipartite(4, 5);
    CHECK(k45.edge_count() == 20);
    CHECK(generic_rank(k45, 3, kSeed) == 20);
}

TEST_CASE("is_rigid") {
    CHECK(is_rigid(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2,
                   kSeed));
    CHECK(!is_rigid(SimpleGraph::cycle(4), 2, kSeed));
    CHECK(is_rigid(SimpleGraph::complete_bipartite(5, 5), 3, kSeed));
    CHECK(is_rigid(SimpleGraph::complete(2), 2, kSeed)); // complete convention
    CHECK(!is_rigid(SimpleGraph(3, {{0, 1}, {1, 2}}), 3, kSeed));
}

TEST_CASE("pebble game agrees with the algebraic rank for all n<=6 in d=2") {
    for (int n = 2; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<EdgePair> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            std::vector<EdgePair> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            SimpleGraph g(n, edges);
            REQUIRE(pebble_rank(g).rank ==
                    generic_rank(g, 2, derive_seed(kSeed, mask)));
        }
    }
}

TEST_CASE("edge and vertex redundancy") {
    CHECK(is_redundantly_rigid(SimpleGraph::complete(4), 2, kSeed).redundant);
    auto r = is_redundantly_rigid(
        SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2, kSeed);
    CHECK(!r.redundant);
    CHECK(r.failing_edge.has_value());
    CHECK(is_redundantly_rigid(SimpleGraph::complete_bipartite(5, 5), 3, kSeed)
              .redundant);

    CHECK(is_vertex_redundantly_rigid(SimpleGraph::complete(4), 2, kSeed)
              .redundant);
    CHECK(is_vertex_redundantly_rigid(octahedron(), 2, kSeed).redundant);
    auto vr =
        is_vertex_redundantly_rigid(SimpleGraph::complete_bipartite(5, 5), 3,
                                    kSeed);
    CHECK(!vr.redundant);
}

TEST_CASE("vertex redundancy implies edge redundancy at min degree d+1") {
    SplitMix64 rng(77);
    std::vector<SimpleGraph> corpus = {octahedron(), SimpleGraph::complete(5),
                                       SimpleGraph::complete(6)};
    for (int round = 0; round < 30; ++round) {
        int n = 5 + static_cast<int>(rng.below(3));
        std::vector<EdgePair> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < 70) edges.emplace_back(u, v);
        corpus.emplace_back(n, edges);
    }
    for (const auto& g : corpus) {
        int mindeg = g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v)
            mindeg = std::min(mindeg, g.degree(v));
        if (mindeg < 3) continue;
        if (is_vertex_redundantly_rigid(g, 2, kSeed).redundant)
            CHECK(is_redundantly_rigid(g, 2, kSeed).redundant);
    }
}

TEST_CASE("exact infinitesimal rigidity") {
    auto tri = rat_framework(SimpleGraph::complete(3), 2,
                             {{0, 0}, {1, 0}, {0, 1}});
    auto r = infinitesimal_rigidity_exact(tri);
    CHECK(r.rigid);
    CHECK(r.kernel_dim == 3);

    // unit square C4: the shear is a non-trivial motion
    auto square = rat_framework(SimpleGraph::cycle(4), 2,
                                {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto rs = infinitesimal_rigidity_exact(square);
    CHECK(!rs.rigid);
    CHECK(rs.kernel_dim == 4);
    REQUIRE(rs.witness);
    // the witness satisfies every first-order length constraint
    const auto& m = rs.witness->velocity;
    for (auto [u, v] : square.graph.edges()) {
        Rat dot = 0;
        for (int c = 0; c < 2; ++c)
            dot += (square.config[u][c] - square.config[v][c]) *
                   (m[u][c] - m[v][c]);
        CHECK(dot == 0);
    }

    // a single edge with distinct endpoints spans a line; its kernel is
    // exactly the restricted trivial motions, matching the rigidity of K2
    auto edge = rat_framework(SimpleGraph(2, {{0, 1}}), 2, {{0, 0}, {1, 0}});
    auto re = infinitesimal_rigidity_exact(edge);
    CHECK(re.kernel_dim == 3);
    CHECK(re.trivial_dim == 3);
    CHECK(re.rigid == is_rigid(edge.graph, 2, kSeed));

    // collinear triangle: degenerate but not coincident, flexes
    auto flat = rat_framework(SimpleGraph::complete(3), 2,
                              {{0, 0}, {1, 0}, {2, 0}});
    CHECK(!infinitesimal_rigidity_exact(flat).rigid);

    auto coincident = rat_framework(SimpleGraph(2, {{0, 1}}), 2, {{0, 0}, {0, 0}});
    CHECK_THROWS_AS(infinitesimal_rigidity_exact(coincident),
                    std::invalid_argument);
}

TEST_CASE("exact rigidity at random rational points matches generic rank") {
    SplitMix64 rng(31337);
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<EdgePair> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (int round = 0; round < 40; ++round) {
            std::uint64_t mask = rng.below(1ull << pairs);
            std::vector<EdgePair> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            SimpleGraph g(n, edges);
            if (g.edge_count() == 0) continue;
            for (int d = 2; d <= 3; ++d) {
                RatFramework f{g, d, {}};
                for (int v = 0; v < n; ++v) {
                    f.config.emplace_back();
                    for (int c = 0; c < d; ++c)
                        f.config.back().emplace_back(
                            Rat(static_cast<long long>(rng.below(2000001)) -
                                1000000) /
                            Rat(1000));
                }
                CHECK(infinitesimal_rigidity_exact(f).rigid ==
                      is_rigid(g, d, derive_seed(kSeed, mask)));
            }
        }
    }
}

TEST_CASE("equilibrium stress samples") {
    auto s = equilibrium_stress_sample(SimpleGraph::complete(4), 2, kSeed);
    CHECK(s.stress.size() == 6);
    for (const auto& w : s.stress) CHECK(!w.is_zero());

    CHECK_THROWS_AS(equilibrium_stress_sample(
                        SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                        2, kSeed),
                    std::domain_error);

    auto k5 = equilibrium_stress_sample(SimpleGraph::complete(5), 3, kSeed);
    CHECK(k5.stress.size() == 10);
    // stress matrix rank bounded by n-d-1
    CHECK(stress_matrix_rank(k5) <= 5 - 3 - 1);
}

TEST_CASE("stress matrix kernel contains the configuration") {
    auto s = equilibrium_stress_sample(SimpleGraph::complete(4), 2, kSeed);
    auto omega = stress_matrix(s);
    int n = 4;
    // omega * 1 = 0 and omega * (coordinate columns) = 0
    for (int r = 0; r < n; ++r) {
        Fp61 row_sum;
        for (int c = 0; c < n; ++c) row_sum += omega[r][c];
        CHECK(row_sum.is_zero());
        for (int axis = 0; axis < 2; ++axis) {
            Fp61 dot;
            for (int c = 0; c < n; ++c)
                dot += omega[r][c] * s.framework.config[c][axis];
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("ght stress-rank test") {
    auto k4 = ght_global_rigidity_test(SimpleGraph::complete(4), 2, kSeed);
    CHECK(k4.outcome == GhtOutcome::ProbablyGloballyRigid);
    CHECK(k4.needed == 1);
    CHECK(k4.best_rank == 1);

    auto k4e = ght_global_rigidity_test(
        SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2, kSeed);
    CHECK(k4e.outcome == GhtOutcome::ProbablyNot);
    CHECK(k4e.best_rank == 0);

    auto k55 = ght_global_rigidity_test(SimpleGraph::complete_bipartite(5, 5),
                                        3, kSeed);
    CHECK(k55.outcome == GhtOutcome::ProbablyNot);
    CHECK(k55.best_rank <= 5);

    auto flexible = ght_global_rigidity_test(SimpleGraph::cycle(4), 2, kSeed);
    CHECK(flexible.outcome == GhtOutcome::Inapplicable);
}
