#ifndef RIGIKIT_RIGIDITY_HPP
#define RIGIKIT_RIGIDITY_HPP

#include <optional>
#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/linalg.hpp"

namespace rigikit {

// A realization of a graph: one point in F^d per vertex.
template <class F>
struct Framework {
    SimpleGraph graph;
    int dim = 0;
    std::vector<std::vector<F>> config; // n rows of d coordinates
};

using FpFramework = Framework<Fp61>;
using RatFramework = Framework<Rat>;

// |E| x d|V| matrix: the row of edge uv carries p_u - p_v in u's coordinate
// block and p_v - p_u in v's block (the Jacobian's factor 2 is dropped).
template <class F>
SparseMatrix<F> rigidity_matrix(const Framework<F>& f) {
    const auto& g = f.graph;
    SparseMatrix<F> m(g.edge_count(), f.dim * g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        for (int c = 0; c < f.dim; ++c) {
            F diff = f.config[u][c] - f.config[v][c];
            m.add(i, f.dim * u + c, diff);
            m.add(i, f.dim * v + c, -diff);
        }
    }
    return m;
}

// Number of trivial (rigid-motion) degrees of freedom: (d+1 choose 2) at full
// affine span, reduced by (d-k choose 2) when the points span only a k-flat.
int trivial_motion_dim(int dim, int affine_span_dim);

FpFramework random_framework(const SimpleGraph& g, int dim, std::uint64_t seed);

// Rank of the rigidity matrix at random prime-field configurations; the
// maximum over `trials` independent seeds (evaluation can only under-measure
// the generic rank).
int generic_rank(const SimpleGraph& g, int dim, std::uint64_t seed,
                 int trials = 3);

// Complete graphs are rigid in every dimension; otherwise requires n >= d+1
// and full generic rank d n - (d+1 choose 2).
bool is_rigid(const SimpleGraph& g, int dim, std::uint64_t seed);

struct EdgeRedundancy {
    bool redundant = false;
    std::optional<EdgePair> failing_edge;
};
EdgeRedundancy is_redundantly_rigid(const SimpleGraph& g, int dim,
                                    std::uint64_t seed);

struct VertexRedundancy {
    bool redundant = false;
    std::optional<int> failing_vertex;
};
VertexRedundancy is_vertex_redundantly_rigid(const SimpleGraph& g, int dim,
                                             std::uint64_t seed);

struct Motion {
    std::vector<std::vector<Rat>> velocity; // n rows of d coordinates
};

struct ExactRigidity {
    bool rigid = false;
    int kernel_dim = 0;
    int trivial_dim = 0;
    std::optional<Motion> witness; // a non-trivial motion when not rigid
};

// Exact infinitesimal rigidity over the rationals: kernel dimension of the
// rigidity matrix against the trivial-motion count at the configuration's
// affine span. Coincident configurations (span 0, n >= 2) are rejected.
ExactRigidity infinitesimal_rigidity_exact(const RatFramework& f);

struct StressSample {
    FpFramework framework;      // the configuration the stress lives on
    std::vector<Fp61> stress;   // one value per edge of framework.graph
};

// Random equilibrium stress: a sample from the cokernel of the rigidity
// matrix at a stored random configuration. Requires |E| > generic rank.
StressSample equilibrium_stress_sample(const SimpleGraph& g, int dim,
                                       std::uint64_t seed);

// n x n stress matrix of a sample: off-diagonal -w_uv, diagonal row sums.
std::vector<std::vector<Fp61>> stress_matrix(const StressSample& s);
int stress_matrix_rank(const StressSample& s);

enum class GhtOutcome { ProbablyGloballyRigid, ProbablyNot, Inapplicable };

struct GhtReport {
    GhtOutcome outcome = GhtOutcome::Inapplicable;
    int needed = 0;               // n - d - 1
    int best_rank = 0;            // max stress-matrix rank over trials
    std::vector<int> trial_ranks; // one entry per trial
};

// Randomized stress-matrix rank test: ProbablyGloballyRigid iff the maximal
// measured rank over `trials` samples reaches n-d-1. Inapplicable when the
// graph is not rigid. The error is one-sided: rank is never over-measured.
GhtReport ght_global_rigidity_test(const SimpleGraph& g, int dim,
                                   std::uint64_t seed, int trials = 3);

// Convenience prediction used by sweeps: complete graphs with n <= d+1 are
// globally rigid by definition; everything else goes through the stress test.
bool predicts_globally_rigid(const SimpleGraph& g, int dim, std::uint64_t seed,
                             int trials = 3);

} // namespace rigikit

#endif
