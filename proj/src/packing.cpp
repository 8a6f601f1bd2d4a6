#include "rigikit/packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace rigikit {

namespace {

int binom2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Mutable forest structure for the matroid-union augmentation.
class ForestFamily {
public:
    ForestFamily(const Multigraph& h, int k)
        : h_(h), k_(k), forest_of_(h.copy_count(), -1) {}

    // Path of copies connecting the endpoints of `copy` inside forest i;
    // empty when disconnected (the copy can be inserted directly).
    std::vector<int> forest_path(int i, int copy) const {
        auto [src, dst] = h_.edges[copy];
        // BFS over the forest's copies
        std::vector<int> via_copy(h_.n, -1), pred(h_.n, -1);
        std::queue<int> q;
        q.push(src);
        pred[src] = src;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == dst) break;
            for (int c = 0; c < h_.copy_count(); ++c) {
                if (forest_of_[c] != i) continue;
                auto [a, b] = h_.edges[c];
                int w = -1;
                if (a == v) w = b;
                if (b == v) w = a;
                if (w < 0 || pred[w] >= 0) continue;
                pred[w] = v;
                via_copy[w] = c;
                q.push(w);
            }
        }
        std::vector<int> path;
        if (pred[dst] < 0) return path;
        for (int v = dst; v != src; v = pred[v]) path.push_back(via_copy[v]);
        return path;
    }

    // Tries to place `copy`; augments along label chains. Returns false and
    // fills `labeled` with the closed search set when no placement exists.
    bool augment(int copy, std::vector<int>* labeled_out) {
        int m = h_.copy_count();
        std::vector<int> pred_copy(m, -1), pred_forest(m, -1);
        std::vector<char> labeled(m, 0);
        std::queue<int> q;
        q.push(copy);
        labeled[copy] = 1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int i = 0; i < k_; ++i) {
                if (i == forest_of_[f]) continue;
                auto path = forest_path(i, f);
                if (path.empty()) {
                    // Direct insertion: unwind the label chain. Each hop
                    // frees exactly the forest slot its predecessor needs.
                    int cur = f, target = i;
                    while (true) {
                        int vacated = forest_of_[cur];
                        forest_of_[cur] = target;
                        if (cur == copy) break;
                        target = vacated;
                        cur = pred_copy[cur];
                    }
                    return true;
                }
                for (int c : path) {
                    if (labeled[c]) continue;
                    labeled[c] = 1;
                    pred_copy[c] = f;
                    pred_forest[c] = i;
                    q.push(c);
                }
            }
        }
        if (labeled_out) {
            labeled_out->clear();
            for (int c = 0; c < m; ++c)
                if (labeled[c]) labeled_out->push_back(c);
        }
        return false;
    }

    const std::vector<int>& forest_of() const { return forest_of_; }
    int assigned() const {
        int s = 0;
        for (int f : forest_of_) s += f >= 0;
        return s;
    }

private:
    const Multigraph& h_;
    int k_;
    std::vector<int> forest_of_;
};

PartitionWitness witness_from_blocks(const Multigraph& h, int k,
                                     const std::vector<int>& raw_block_of) {
    PartitionWitness w;
    // densify block ids
    std::vector<int> remap(h.n, -1);
    w.block_of.assign(h.n, -1);
    int next = 0;
    for (int v = 0; v < h.n; ++v) {
        int b = raw_block_of[v];
        if (remap[b] < 0) remap[b] = next++;
        w.block_of[v] = remap[b];
    }
    w.blocks = next;
    for (auto [u, v] : h.edges) w.cross_edges += w.block_of[u] != w.block_of[v];
    w.required = k * (w.blocks - 1);
    return w;
}

PartitionWitness component_witness(const Multigraph& h, int k) {
    return witness_from_blocks(h, k, h.component_of());
}

} // namespace

PackingResult tree_packing(const Multigraph& h, int k) {
    if (k <= 0) throw std::invalid_argument("tree_packing: k must be positive");
    if (h.n == 0) throw std::invalid_argument("tree_packing: empty graph");
    if (!h.connected()) {
        if (h.n == 1) return TreePacking{k, {}};
        return component_witness(h, k);
    }
    ForestFamily family(h, k);
    int first_failed = -1;
    for (int c = 0; c < h.copy_count(); ++c) {
        if (!family.augment(c, nullptr) && first_failed < 0) first_failed = c;
    }
    if (family.assigned() == k * (h.n - 1)) {
        TreePacking p{k, family.forest_of()};
        if (!verify_tree_packing(h, p))
            throw InvariantFault("tree_packing: produced an invalid packing");
        return p;
    }
    // Infeasible. The labeled set of a failed augmentation is a minimizer of
    // the union-rank formula; the components it spans give the partition.
    std::vector<int> labeled;
    if (first_failed < 0) {
        // Everything placed but short of k spanning trees: every copy used,
        // so the all-singleton partition already violates the count.
        std::vector<int> singletons(h.n);
        std::iota(singletons.begin(), singletons.end(), 0);
        auto w = witness_from_blocks(h, k, singletons);
        if (!verify_partition_witness(h, k, w))
            throw InvariantFault("tree_packing: invalid singleton witness");
        return w;
    }
    family.augment(first_failed, &labeled);
    // Components of (V, labeled copies).
    std::vector<int> parent(h.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int c : labeled) parent[find(h.edges[c].first)] = find(h.edges[c].second);
    std::vector<int> block_of(h.n);
    for (int v = 0; v < h.n; ++v) block_of[v] = find(v);
    auto w = witness_from_blocks(h, k, block_of);
    if (!verify_partition_witness(h, k, w))
        throw InvariantFault("tree_packing: derived witness fails the count");
    return w;
}

bool packing_feasible(const PackingResult& r) {
    return std::holds_alternative<TreePacking>(r);
}

bool verify_tree_packing(const Multigraph& h, const TreePacking& p) {
    if (static_cast<int>(p.assignment.size()) != h.copy_count()) return false;
    for (int i = 0; i < p.k; ++i) {
        // Tree i: spanning, connected, acyclic.
        std::vector<int> parent(h.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int used = 0;
        for (int c = 0; c < h.copy_count(); ++c) {
            if (p.assignment[c] != i) continue;
            ++used;
            int a = find(h.edges[c].first), b = find(h.edges[c].second);
            if (a == b) return false; // cycle
            parent[a] = b;
        }
        if (used != h.n - 1) return false;
        for (int v = 1; v < h.n; ++v)
            if (find(v) != find(0)) return false;
    }
    for (int f : p.assignment)
        if (f < -1 || f >= p.k) return false;
    return true;
}

bool verify_partition_witness(const Multigraph& h, int k,
                              const PartitionWitness& w) {
    if (static_cast<int>(w.block_of.size()) != h.n) return false;
    if (w.blocks < 2 && h.n > 1) return false;
    int cross = 0;
    for (auto [u, v] : h.edges) cross += w.block_of[u] != w.block_of[v];
    return cross == w.cross_edges && cross < k * (w.blocks - 1);
}

bool tree_packing_feasible_bruteforce(const Multigraph& h, int k) {
    if (h.n > 10)
        throw std::invalid_argument("bruteforce packing: graph too large");
    // Enumerate set partitions via restricted growth strings.
    std::vector<int> rgs(h.n, 0), maxv(h.n, 0);
    for (;;) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks >= 2 || h.n == 1) {
            int cross = 0;
            for (auto [u, v] : h.edges) cross += rgs[u] != rgs[v];
            if (cross < k * (blocks - 1)) return false;
        }
        // next restricted growth string
        int i = h.n - 1;
        while (i >= 1 && rgs[i] == maxv[i - 1] + 1) --i;
        if (i == 0) break;
        rgs[i] += 1;
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < h.n; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
    return true;
}

Multigraph multiplicity_expand(const Multigraph& h, int base,
                               std::optional<std::pair<int, int>> special,
                               std::vector<int>* parent_of) {
    if (base < 0) throw std::invalid_argument("multiplicity_expand: base < 0");
    if (special) {
        if (special->first < 0 || special->first >= h.copy_count())
            throw std::invalid_argument(
                "multiplicity_expand: special copy not in graph");
        if (special->second < 0)
            throw std::invalid_argument("multiplicity_expand: negative multiplicity");
    }
    Multigraph out;
    out.n = h.n;
    if (parent_of) parent_of->clear();
    for (int c = 0; c < h.copy_count(); ++c) {
        int reps = (special && special->first == c) ? special->second : base;
        for (int r = 0; r < reps; ++r) {
            out.edges.push_back(h.edges[c]);
            if (parent_of) parent_of->push_back(c);
        }
    }
    return out;
}

BodyBarRigidCheck body_bar_rigid_check(const Multigraph& h, int d) {
    int k = binom2(d + 1);
    auto result = tree_packing(h, k);
    return {packing_feasible(result), std::move(result)};
}

namespace {

// Representative copy per parallel class (deleting any one copy of a class
// is equivalent).
std::vector<int> parallel_class_representatives(const Multigraph& h) {
    std::set<EdgePair> seen;
    std::vector<int> reps;
    for (int c = 0; c < h.copy_count(); ++c)
        if (seen.insert(h.edges[c]).second) reps.push_back(c);
    return reps;
}

} // namespace

BodyBarGlobalCheck body_bar_global_check(const Multigraph& h, int d) {
    int k = binom2(d + 1);
    BodyBarGlobalCheck out;
    out.globally_rigid = true;
    for (int rep : parallel_class_representatives(h)) {
        auto result = tree_packing(h.without_copy(rep), k);
        out.globally_rigid =
            out.globally_rigid && packing_feasible(result);
        out.per_edge.push_back({rep, std::move(result)});
    }
    return out;
}

BodyHingeRigidCheck body_hinge_rigid_check(const Multigraph& h, int d) {
    int big = binom2(d + 1);
    auto expanded = multiplicity_expand(h, big - 1);
    auto result = tree_packing(expanded, big);
    return {packing_feasible(result), std::move(result)};
}

BodyHingeGlobalCheck body_hinge_global_check(const Multigraph& h, int d) {
    int big = binom2(d + 1); // D
    BodyHingeGlobalCheck out;
    out.globally_rigid = true;
    for (int rep : parallel_class_representatives(h)) {
        HingeEdgeCertificate cert;
        cert.copy = rep;
        cert.expanded = multiplicity_expand(
            h, big - 1, std::make_pair(rep, std::max(0, big - 3)),
            &cert.parent_of);
        cert.certificate = tree_packing(cert.expanded, big);
        out.globally_rigid =
            out.globally_rigid && packing_feasible(cert.certificate);
        out.per_edge.push_back(std::move(cert));
    }
    return out;
}

} // namespace rigikit
