#include <doctest.h>

#include <cmath>

#include "rigikit/oracle.hpp"
#include "rigikit/rng.hpp"

using namespace rigikit;

namespace {

constexpr std::uint64_t kSeed = 0x0AC1E;

FloatConfig triangle_config() { return {{0, 0}, {1, 0}, {0.3, 0.9}}; }

SimpleGraph k4_minus() {
    return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

} // namespace

TEST_CASE("fingerprints are congruence invariant") {
    FloatConfig cfg = {{0.1, 0.2}, {1.3, -0.4}, {-0.7, 0.9}, {0.5, 0.5}};
    auto fp = distance_fingerprint(cfg);
    // rotate by a random angle, translate, and reflect
    double theta = 1.234;
    FloatConfig moved;
    for (const auto& p : cfg) {
        double x = p[0] * std::cos(theta) - p[1] * std::sin(theta) + 3.7;
        double y = p[0] * std::sin(theta) + p[1] * std::cos(theta) - 1.1;
        moved.push_back({-x, y}); // reflection in the y-axis
    }
    auto fp2 = distance_fingerprint(moved);
    for (size_t i = 0; i < fp.size(); ++i)
        CHECK(std::abs(fp[i] - fp2[i]) < 1e-9);

    // pinning a moved configuration gives the same fingerprint
    auto pinned = pin_congruence(moved, 2);
    auto fp3 = distance_fingerprint(pinned);
    for (size_t i = 0; i < fp.size(); ++i)
        CHECK(std::abs(fp[i] - fp3[i]) < 1e-9);
}

TEST_CASE("triangle has one congruence class") {
    OracleOptions opts;
    opts.restarts = 60;
    auto report = enumerate_equivalent(SimpleGraph::complete(3), 2,
                                       triangle_config(), opts, kSeed);
    CHECK(!report.flexible);
    CHECK(report.classes.size() == 1);
    CHECK(report.converged > 0);
}

TEST_CASE("K4 minus an edge folds into exactly two classes") {
    OracleOptions opts;
    opts.restarts = 200;
    FloatConfig cfg = {{0.0, 0.0}, {1.1, 0.1}, {0.4, 0.8}, {0.6, -0.9}};
    auto report =
        enumerate_equivalent(k4_minus(), 2, cfg, opts, kSeed);
    CHECK(report.classes.size() == 2);
    // every class representative satisfies the edge equations
    for (const auto& cls : report.classes) {
        for (auto [u, v] : k4_minus().edges()) {
            double want = 0, got = 0;
            for (int c = 0; c < 2; ++c) {
                want += (cfg[u][c] - cfg[v][c]) * (cfg[u][c] - cfg[v][c]);
                got += (cls.representative[u][c] - cls.representative[v][c]) *
                       (cls.representative[u][c] - cls.representative[v][c]);
            }
            CHECK(std::abs(want - got) < 1e-7);
        }
    }
}

TEST_CASE("flexible graphs are flagged and skipped") {
    OracleOptions opts;
    FloatConfig square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto report =
        enumerate_equivalent(SimpleGraph::cycle(4), 2, square, opts, kSeed);
    CHECK(report.flexible);
    CHECK(report.classes.empty());
}

TEST_CASE("numeric probe") {
    OracleOptions opts;
    opts.restarts = 150;
    auto consistent =
        numeric_globally_rigid_probe(SimpleGraph::complete(4), 2, opts, kSeed);
    CHECK(consistent.consistent);

    auto folding = numeric_globally_rigid_probe(k4_minus(), 2, opts, kSeed);
    CHECK(!folding.consistent);
    REQUIRE(folding.witness_pair);

    // the 1-extension of K4 is globally rigid: single class expected
    SimpleGraph ext(
        5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    auto ext_probe = numeric_globally_rigid_probe(ext, 2, opts, kSeed);
    CHECK(ext_probe.consistent);

    CHECK_THROWS_AS(
        numeric_globally_rigid_probe(SimpleGraph::cycle(4), 2, opts, kSeed),
        std::invalid_argument);
}
