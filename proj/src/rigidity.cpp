#include "rigikit/rigidity.hpp"

#include <algorithm>

namespace rigikit {

namespace {

int binom2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }

} // namespace

int trivial_motion_dim(int dim, int affine_span_dim) {
    return binom2(dim + 1) - binom2(dim - affine_span_dim);
}

FpFramework random_framework(const SimpleGraph& g, int dim,
                             std::uint64_t seed) {
    SplitMix64 rng(seed);
    FpFramework f{g, dim, {}};
    f.config.assign(g.vertex_count(), std::vector<Fp61>(dim));
    for (auto& point : f.config)
        for (auto& coord : point) coord = Fp61::random(rng);
    return f;
}

int generic_rank(const SimpleGraph& g, int dim, std::uint64_t seed,
                 int trials) {
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        auto f = random_framework(g, dim, derive_seed(seed, t));
        best = std::max(best, rank(rigidity_matrix(f)));
    }
    return best;
}

bool is_rigid(const SimpleGraph& g, int dim, std::uint64_t seed) {
    int n = g.vertex_count();
    if (g.is_complete()) return true;
    if (n < dim + 1) return false; // non-complete on too few vertices
    int target = dim * n - binom2(dim + 1);
    if (g.edge_count() < target) return false;
    return generic_rank(g, dim, seed) == target;
}

EdgeRedundancy is_redundantly_rigid(const SimpleGraph& g, int dim,
                                    std::uint64_t seed) {
    for (auto e : g.edges()) {
        if (!is_rigid(g.without_edge(e.first, e.second), dim,
                      derive_seed(seed, g.edge_index(e.first, e.second))))
            return {false, e};
    }
    return {true, std::nullopt};
}

VertexRedundancy is_vertex_redundantly_rigid(const SimpleGraph& g, int dim,
                                             std::uint64_t seed) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument(
            "is_vertex_redundantly_rigid: need at least 2 vertices");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!is_rigid(g.without_vertex(v), dim, derive_seed(seed, v)))
            return {false, v};
    }
    return {true, std::nullopt};
}

ExactRigidity infinitesimal_rigidity_exact(const RatFramework& f) {
    int n = f.graph.vertex_count();
    int d = f.dim;
    if (static_cast<int>(f.config.size()) != n)
        throw std::invalid_argument("framework: configuration size mismatch");

    // Affine span dimension: rank of the difference matrix against vertex 0.
    int span = 0;
    if (n >= 2) {
        std::vector<std::vector<Int>> diff;
        for (int v = 1; v < n; ++v) {
            std::vector<Rat> row(d);
            Int scale = 1;
            for (int c = 0; c < d; ++c) {
                row[c] = f.config[v][c] - f.config[0][c];
                scale = boost::multiprecision::lcm(
                    scale, boost::multiprecision::denominator(row[c]));
            }
            std::vector<Int> irow(d);
            for (int c = 0; c < d; ++c)
                irow[c] = boost::multiprecision::numerator(row[c] * Rat(scale));
            diff.push_back(std::move(irow));
        }
        span = bareiss_rank(std::move(diff));
    }
    if (n >= 2 && span == 0)
        throw std::invalid_argument(
            "infinitesimal_rigidity_exact: all points coincide");

    auto r_matrix = rigidity_matrix(f);
    int r = rank(r_matrix);
    ExactRigidity result;
    result.kernel_dim = d * n - r;
    result.trivial_dim = trivial_motion_dim(d, span);
    result.rigid = result.kernel_dim == result.trivial_dim;
    if (result.rigid) return result;

    // Witness: a kernel vector outside the span of the trivial motions.
    auto kernel = nullspace_basis(r_matrix.dense(), r_matrix.cols);
    std::vector<std::vector<Rat>> trivial;
    for (int c = 0; c < d; ++c) { // translations
        std::vector<Rat> t(d * n, Rat(0));
        for (int v = 0; v < n; ++v) t[d * v + c] = 1;
        trivial.push_back(std::move(t));
    }
    for (int a = 0; a < d; ++a) { // rotations
        for (int b = a + 1; b < d; ++b) {
            std::vector<Rat> t(d * n, Rat(0));
            for (int v = 0; v < n; ++v) {
                t[d * v + b] = f.config[v][a];
                t[d * v + a] = -f.config[v][b];
            }
            trivial.push_back(std::move(t));
        }
    }
    auto stacked_rank = [&](const std::vector<std::vector<Rat>>& rows) {
        SparseMatrix<Rat> m(static_cast<int>(rows.size()), d * n);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (int j = 0; j < d * n; ++j) m.add(i, j, rows[i][j]);
        return rank(m);
    };
    int base = stacked_rank(trivial);
    for (const auto& k : kernel) {
        auto rows = trivial;
        rows.push_back(k);
        if (stacked_rank(rows) > base) {
            Motion motion;
            motion.velocity.assign(n, std::vector<Rat>(d));
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < d; ++c) motion.velocity[v][c] = k[d * v + c];
            result.witness = std::move(motion);
            break;
        }
    }
    if (!result.witness)
        throw InvariantFault(
            "infinitesimal_rigidity_exact: kernel exceeds trivial dimension "
            "but no non-trivial motion found");
    return result;
}

StressSample equilibrium_stress_sample(const SimpleGraph& g, int dim,
                                       std::uint64_t seed) {
    StressSample s;
    s.framework = random_framework(g, dim, derive_seed(seed, 0x5745ull));
    auto r_matrix = rigidity_matrix(s.framework);
    int r = rank(r_matrix);
    if (g.edge_count() <= r)
        throw std::domain_error(
            "equilibrium_stress_sample: edge set is independent, no stress");
    s.stress = nullspace_sample(r_matrix.transposed(),
                                derive_seed(seed, 0x5753ull));
    return s;
}

std::vector<std::vector<Fp61>> stress_matrix(const StressSample& s) {
    const auto& g = s.framework.graph;
    int n = g.vertex_count();
    std::vector<std::vector<Fp61>> omega(n, std::vector<Fp61>(n));
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        Fp61 w = s.stress[i];
        omega[u][v] = omega[u][v] - w;
        omega[v][u] = omega[v][u] - w;
        omega[u][u] += w;
        omega[v][v] += w;
    }
    return omega;
}

int stress_matrix_rank(const StressSample& s) {
    return dense_rank(stress_matrix(s));
}

GhtReport ght_global_rigidity_test(const SimpleGraph& g, int dim,
                                   std::uint64_t seed, int trials) {
    int n = g.vertex_count();
    if (n < dim + 2)
        throw std::invalid_argument(
            "ght_global_rigidity_test: needs n >= d+2 (smaller cases are "
            "decided by completeness)");
    GhtReport report;
    report.needed = n - dim - 1;
    if (!is_rigid(g, dim, derive_seed(seed, 0x4748ull))) {
        report.outcome = GhtOutcome::Inapplicable;
        return report;
    }
    for (int t = 0; t < trials; ++t) {
        int measured = 0;
        try {
            auto sample =
                equilibrium_stress_sample(g, dim, derive_seed(seed, 200 + t));
            measured = stress_matrix_rank(sample);
        } catch (const std::domain_error&) {
            measured = 0; // independent edge set: only the zero stress
        }
        if (measured > report.needed)
            throw InvariantFault(
                "stress matrix rank exceeded n-d-1; kernel must contain the "
                "all-ones and coordinate vectors");
        report.trial_ranks.push_back(measured);
        report.best_rank = std::max(report.best_rank, measured);
    }
    report.outcome = report.best_rank == report.needed
                         ? GhtOutcome::ProbablyGloballyRigid
                         : GhtOutcome::ProbablyNot;
    return report;
}

bool predicts_globally_rigid(const SimpleGraph& g, int dim,
                             std::uint64_t seed, int trials) {
    if (g.is_complete() && g.vertex_count() <= dim + 1) return true;
    if (g.vertex_count() < dim + 2) return false; // non-complete small
    auto report = ght_global_rigidity_test(g, dim, seed, trials);
    return report.outcome == GhtOutcome::ProbablyGloballyRigid;
}

} // namespace rigikit
