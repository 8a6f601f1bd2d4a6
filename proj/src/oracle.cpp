#include "rigikit/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "rigikit/rigidity.hpp"
#include "rigikit/rng.hpp"

namespace rigikit {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

Eigen::VectorXd flatten(const FloatConfig& c) {
    int n = static_cast<int>(c.size());
    int d = n ? static_cast<int>(c[0].size()) : 0;
    Eigen::VectorXd x(n * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) x[v * d + i] = c[v][i];
    return x;
}

FloatConfig unflatten(const Eigen::VectorXd& x, int n, int d) {
    FloatConfig c(n, std::vector<double>(d));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) c[v][i] = x[v * d + i];
    return c;
}

// Levenberg-Marquardt on r_e(q) = |q_u - q_v|^2 - target_e.
bool solve_lengths(const SimpleGraph& g, int dim,
                   const std::vector<double>& targets, Eigen::VectorXd& x,
                   double tol) {
    int m = g.edge_count();
    int nd = static_cast<int>(x.size());
    double lambda = 1e-3;
    auto residuals = [&](const Eigen::VectorXd& q) {
        Eigen::VectorXd r(m);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            double s = 0;
            for (int i = 0; i < dim; ++i) {
                double diff = q[u * dim + i] - q[v * dim + i];
                s += diff * diff;
            }
            r[e] = s - targets[e];
        }
        return r;
    };
    Eigen::VectorXd r = residuals(x);
    double err = r.cwiseAbs().maxCoeff();
    for (int iter = 0; iter < 300 && err > tol; ++iter) {
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, nd);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            for (int i = 0; i < dim; ++i) {
                double diff = 2 * (x[u * dim + i] - x[v * dim + i]);
                jac(e, u * dim + i) = diff;
                jac(e, v * dim + i) = -diff;
            }
        }
        Eigen::MatrixXd normal = jac.transpose() * jac;
        normal.diagonal().array() += lambda;
        Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * r);
        Eigen::VectorXd next = x + step;
        Eigen::VectorXd rn = residuals(next);
        double next_err = rn.cwiseAbs().maxCoeff();
        if (next_err < err) {
            x = next;
            r = rn;
            err = next_err;
            lambda = std::max(lambda * 0.5, 1e-12);
        } else {
            lambda *= 4;
            if (lambda > 1e12) break;
        }
    }
    return err <= tol;
}

} // namespace

FloatConfig pin_congruence(const FloatConfig& config, int dim) {
    int n = static_cast<int>(config.size());
    FloatConfig out(n, std::vector<double>(dim, 0.0));
    if (n == 0) return out;
    // Translate vertex 0 to the origin.
    Eigen::MatrixXd pts(dim, n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < dim; ++i) pts(i, v) = config[v][i] - config[0][i];
    // Orthonormal frame from the first independent point directions.
    Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(dim, dim);
    int found = 0;
    const double eps = 1e-9;
    for (int v = 1; v < n && found < dim; ++v) {
        Eigen::VectorXd cand = pts.col(v);
        for (int j = 0; j < found; ++j)
            cand -= frame.col(j).dot(pts.col(v)) * frame.col(j);
        double norm = cand.norm();
        if (norm > eps) frame.col(found++) = cand / norm;
    }
    // Complete a rank-deficient frame arbitrarily but deterministically.
    for (int axis = 0; axis < dim && found < dim; ++axis) {
        Eigen::VectorXd cand = Eigen::VectorXd::Zero(dim);
        cand[axis] = 1.0;
        for (int j = 0; j < found; ++j)
            cand -= frame.col(j).dot(Eigen::VectorXd::Unit(dim, axis)) *
                    frame.col(j);
        double norm = cand.norm();
        if (norm > eps) frame.col(found++) = cand / norm;
    }
    Eigen::MatrixXd rotated = frame.transpose() * pts;
    // Reflection canonicalization: the first vertex with a nonzero component
    // on the last axis is forced into the positive half-space.
    for (int v = 1; v < n; ++v) {
        double last = rotated(dim - 1, v);
        if (std::abs(last) > eps) {
            if (last < 0) rotated.row(dim - 1) *= -1.0;
            break;
        }
    }
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < dim; ++i) out[v][i] = rotated(i, v);
    return out;
}

std::vector<double> distance_fingerprint(const FloatConfig& config) {
    std::vector<double> fp;
    for (size_t u = 0; u < config.size(); ++u)
        for (size_t v = u + 1; v < config.size(); ++v)
            fp.push_back(std::sqrt(sq_dist(config[u], config[v])));
    std::sort(fp.begin(), fp.end());
    return fp;
}

EnumerationReport enumerate_equivalent(const SimpleGraph& g, int dim,
                                       const FloatConfig& config,
                                       const OracleOptions& opts,
                                       std::uint64_t seed) {
    int n = g.vertex_count();
    EnumerationReport report;
    report.restarts = opts.restarts;
    report.tol_residual = opts.tol_residual;
    report.tol_class = opts.tol_class;
    if (static_cast<int>(config.size()) != n)
        throw std::invalid_argument("enumerate_equivalent: bad configuration");

    if (!is_rigid(g, dim, derive_seed(seed, 0xF1e))) {
        report.flexible = true;
        return report;
    }

    std::vector<double> targets;
    for (auto [u, v] : g.edges()) targets.push_back(sq_dist(config[u], config[v]));

    // Coordinate scale for the random starting boxes.
    double scale = 1.0;
    for (const auto& p : config)
        for (double c : p) scale = std::max(scale, std::abs(c));

    auto add_class = [&](const FloatConfig& solution) {
        FloatConfig pinned = pin_congruence(solution, dim);
        auto fp = distance_fingerprint(pinned);
        for (auto& cls : report.classes) {
            double gap = 0;
            for (size_t i = 0; i < fp.size(); ++i)
                gap = std::max(gap, std::abs(fp[i] - cls.fingerprint[i]));
            if (gap < opts.tol_class) {
                cls.hits += 1;
                return;
            }
        }
        report.classes.push_back({pinned, fp, 1});
    };

    add_class(config); // the input itself is a solution
    SplitMix64 rng(derive_seed(seed, 0x0c1e));
    for (int restart = 0; restart < opts.restarts; ++restart) {
        Eigen::VectorXd x(n * dim);
        for (int i = 0; i < n * dim; ++i) {
            double u = static_cast<double>(rng.next() >> 11) /
                       static_cast<double>(1ull << 53);
            x[i] = (2 * u - 1) * 2 * scale;
        }
        if (!solve_lengths(g, dim, targets, x, opts.tol_residual)) continue;
        ++report.converged;
        add_class(unflatten(x, n, dim));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const RealizationClass& a, const RealizationClass& b) {
                  return a.fingerprint < b.fingerprint;
              });
    return report;
}

ProbeResult numeric_globally_rigid_probe(const SimpleGraph& g, int dim,
                                         const OracleOptions& opts,
                                         std::uint64_t seed) {
    if (!is_rigid(g, dim, derive_seed(seed, 0xBEEF)))
        throw std::invalid_argument("probe: graph is not rigid");
    // Random configuration with rational-rounded coordinates.
    SplitMix64 rng(derive_seed(seed, 0xC0FF));
    FloatConfig config(g.vertex_count(), std::vector<double>(dim));
    for (auto& p : config)
        for (auto& c : p)
            c = static_cast<double>(rng.below(2000001)) / 1000000.0 - 1.0;
    ProbeResult result;
    result.report = enumerate_equivalent(g, dim, config, opts, seed);
    result.consistent = result.report.classes.size() <= 1;
    if (!result.consistent)
        result.witness_pair = std::make_pair(
            result.report.classes[0].representative,
            result.report.classes[1].representative);
    return result;
}

} // namespace rigikit
