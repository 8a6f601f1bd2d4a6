#ifndef RIGIKIT_ORACLE_HPP
#define RIGIKIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

using FloatConfig = std::vector<std::vector<double>>; // n rows of d coords

// One congruence class of realizations: a pinned representative and its
// fingerprint (the sorted list of all pairwise distances, which is invariant
// under isometries including reflections).
struct RealizationClass {
    FloatConfig representative;
    std::vector<double> fingerprint;
    int hits = 0; // how many restarts landed here
};

struct EnumerationReport {
    std::vector<RealizationClass> classes;
    int restarts = 0;
    int converged = 0;
    double tol_residual = 1e-10;
    double tol_class = 1e-6;
    bool flexible = false; // set from the rank test; enumeration skipped
};

struct OracleOptions {
    int restarts = 200;
    double tol_residual = 1e-10;
    double tol_class = 1e-6;
};

// Solves the squared-length system from random starts by damped least
// squares, pins congruences and clusters by fingerprint. Reports a LOWER
// bound on the number of congruence classes (probabilistic completeness).
EnumerationReport enumerate_equivalent(const SimpleGraph& g, int dim,
                                       const FloatConfig& config,
                                       const OracleOptions& opts,
                                       std::uint64_t seed);

struct ProbeResult {
    bool consistent = false; // no second class found
    EnumerationReport report;
    std::optional<std::pair<FloatConfig, FloatConfig>> witness_pair;
};

// Tries to refute global rigidity numerically on a random rational-rounded
// generic-ish configuration of a rigid graph; a second congruence class is a
// concrete pair of equivalent non-congruent frameworks.
ProbeResult numeric_globally_rigid_probe(const SimpleGraph& g, int dim,
                                         const OracleOptions& opts,
                                         std::uint64_t seed);

// Translate/rotate/reflect a configuration into the canonical frame: vertex 0
// at the origin, the first independent directions aligned to the axes, the
// last aligned direction reflected into the positive half-space.
FloatConfig pin_congruence(const FloatConfig& config, int dim);

std::vector<double> distance_fingerprint(const FloatConfig& config);

} // namespace rigikit

#endif
