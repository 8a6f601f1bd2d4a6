#include "rigikit/builders.hpp"

#include <algorithm>
#include <set>

namespace rigikit {

namespace {

int binom2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }

void add_clique(std::vector<EdgePair>& edges, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            edges.emplace_back(verts[i], verts[j]);
}

void add_bipartite(std::vector<EdgePair>& edges, const std::vector<int>& a,
                   const std::vector<int>& b) {
    for (int u : a)
        for (int v : b) edges.emplace_back(u, v);
}

} // namespace

BodyBarLayout body_bar_graph(const Multigraph& h, int d) {
    if (d < 1) throw std::invalid_argument("body_bar_graph: d must be positive");
    BodyBarLayout layout;
    layout.body_of.assign(h.n, {});
    int next = 0;
    // Core vertices per body, then one bar end per incident copy, both in
    // deterministic order.
    std::vector<std::vector<int>> bar_end(h.copy_count(), std::vector<int>(2, -1));
    for (int v = 0; v < h.n; ++v) {
        for (int i = 0; i <= d; ++i) layout.body_of[v].push_back(next++);
        for (int c = 0; c < h.copy_count(); ++c) {
            auto [a, b] = h.edges[c];
            if (a != v && b != v) continue;
            int slot = (a == v) ? 0 : 1;
            bar_end[c][slot] = next;
            layout.body_of[v].push_back(next++);
        }
    }
    std::vector<EdgePair> edges;
    for (int v = 0; v < h.n; ++v) add_clique(edges, layout.body_of[v]);
    for (int c = 0; c < h.copy_count(); ++c) {
        layout.bar_of.emplace_back(bar_end[c][0], bar_end[c][1]);
        edges.emplace_back(bar_end[c][0], bar_end[c][1]);
    }
    layout.graph = SimpleGraph(next, std::move(edges));
    return layout;
}

BodyHingeLayout body_hinge_graph(const Multigraph& h, int d) {
    if (d < 2)
        throw std::invalid_argument("body_hinge_graph: hinges need d >= 2");
    BodyHingeLayout layout;
    layout.body_of.assign(h.n, {});
    int next = 0;
    for (int v = 0; v < h.n; ++v)
        for (int i = 0; i <= d; ++i) layout.body_of[v].push_back(next++);
    layout.hinge_of.assign(h.copy_count(), {});
    for (int c = 0; c < h.copy_count(); ++c)
        for (int i = 0; i < d - 1; ++i) layout.hinge_of[c].push_back(next++);
    std::vector<EdgePair> edges;
    for (int v = 0; v < h.n; ++v) add_clique(edges, layout.body_of[v]);
    for (int c = 0; c < h.copy_count(); ++c) {
        auto [a, b] = h.edges[c];
        add_bipartite(edges, layout.body_of[a], layout.hinge_of[c]);
        add_bipartite(edges, layout.body_of[b], layout.hinge_of[c]);
    }
    layout.graph = SimpleGraph(next, std::move(edges));
    return layout;
}

StandardHingeConfig standard_body_hinge_config(
    const Multigraph& h, int d, int edge_copy, const TreePacking& packing,
    const std::vector<int>& parent_of) {
    if (d < 2)
        throw std::invalid_argument("standard_body_hinge_config: d >= 2");
    auto layout = body_hinge_graph(h, d);
    int big = binom2(d + 1); // D: number of trees and of index pairs

    // Standard basis points; e_{d+1} is the origin.
    auto basis_point = [&](int i) { // i in 1..d+1
        std::vector<Rat> p(d, Rat(0));
        if (i <= d) p[i - 1] = 1;
        return p;
    };

    std::vector<std::vector<Rat>> config(layout.graph.vertex_count(),
                                         std::vector<Rat>(d, Rat(0)));
    for (int v = 0; v < h.n; ++v)
        for (int i = 0; i <= d; ++i)
            config[layout.body_of[v][i]] = basis_point(i + 1);

    int removed = -1;
    if (h.copy_count() > 0) {
        if (edge_copy < 0 || edge_copy >= h.copy_count())
            throw std::invalid_argument(
                "standard_body_hinge_config: bad edge copy");
        if (packing.k != big)
            throw std::invalid_argument(
                "standard_body_hinge_config: packing has wrong tree count");

        // Trees hit by each copy's expanded duplicates.
        std::vector<std::set<int>> trees_of_copy(h.copy_count());
        for (size_t i = 0; i < parent_of.size(); ++i) {
            int tree = packing.assignment[i];
            if (tree >= 0) trees_of_copy[parent_of[i]].insert(tree);
        }

        // Relabel trees to index pairs so that the three pairs among
        // {d-1, d, d+1} land on trees avoiding the distinguished copy.
        std::vector<int> avoid; // trees with no copy of edge_copy
        for (int t = 0; t < big; ++t)
            if (!trees_of_copy[edge_copy].count(t)) avoid.push_back(t);
        if (avoid.size() < 3)
            throw std::invalid_argument(
                "standard_body_hinge_config: packing cannot be relabeled; "
                "the distinguished copy meets all but " +
                std::to_string(avoid.size()) + " trees");
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= d + 1; ++i)
            for (int j = i + 1; j <= d + 1; ++j) pairs.emplace_back(i, j);
        std::vector<std::pair<int, int>> special{{d - 1, d}, {d - 1, d + 1},
                                                 {d, d + 1}};
        std::vector<std::pair<int, int>> pair_of_tree(big, {-1, -1});
        std::set<int> used_trees;
        std::set<std::pair<int, int>> used_pairs;
        for (int i = 0; i < 3; ++i) {
            pair_of_tree[avoid[i]] = special[i];
            used_trees.insert(avoid[i]);
            used_pairs.insert(special[i]);
        }
        size_t next_pair = 0;
        for (int t = 0; t < big; ++t) {
            if (used_trees.count(t)) continue;
            while (used_pairs.count(pairs[next_pair])) ++next_pair;
            pair_of_tree[t] = pairs[next_pair];
            used_pairs.insert(pairs[next_pair]);
        }

        // Hinge placements: for each copy f != e, the lexicographically first
        // pair (k,l) whose tree misses every duplicate of f; the hinge sits
        // on the d-1 remaining basis vectors.
        std::vector<int> tree_of_pair(
            static_cast<int>(pairs.size()), -1);
        auto pair_index = [&](std::pair<int, int> p) {
            return static_cast<int>(
                std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
        };
        for (int t = 0; t < big; ++t) tree_of_pair[pair_index(pair_of_tree[t])] = t;

        for (int c = 0; c < h.copy_count(); ++c) {
            if (c == edge_copy) {
                for (int i = 0; i < d - 1; ++i)
                    config[layout.hinge_of[c][i]] = basis_point(i + 1);
                continue;
            }
            int chosen = -1;
            for (size_t pi = 0; pi < pairs.size(); ++pi) {
                int t = tree_of_pair[pi];
                if (!trees_of_copy[c].count(t)) {
                    chosen = static_cast<int>(pi);
                    break;
                }
            }
            if (chosen < 0)
                throw InvariantFault(
                    "standard_body_hinge_config: a copy meets every tree, "
                    "contradicting its multiplicity bound");
            auto [k, l] = pairs[chosen];
            int slot = 0;
            for (int i = 1; i <= d + 1; ++i) {
                if (i == k || i == l) continue;
                config[layout.hinge_of[c][slot++]] = basis_point(i);
            }
        }
        removed = layout.hinge_of[edge_copy][d - 2]; // h_{e,d-1}
    }

    StandardHingeConfig out;
    out.removed_vertex = removed;
    if (removed < 0) {
        out.framework = RatFramework{layout.graph, d, std::move(config)};
        out.old_ids.resize(layout.graph.vertex_count());
        for (size_t i = 0; i < out.old_ids.size(); ++i)
            out.old_ids[i] = static_cast<int>(i);
        return out;
    }
    SimpleGraph reduced = layout.graph.without_vertex(removed, &out.old_ids);
    std::vector<std::vector<Rat>> reduced_config;
    for (int old_id : out.old_ids) reduced_config.push_back(config[old_id]);
    out.framework = RatFramework{std::move(reduced), d, std::move(reduced_config)};
    return out;
}

bool verify_standard_config_rigid(const StandardHingeConfig& c) {
    return infinitesimal_rigidity_exact(c.framework).rigid;
}

SimpleGraph zero_extension(const SimpleGraph& g, int d,
                           const std::vector<int>& nbrs) {
    if (static_cast<int>(nbrs.size()) != d)
        throw std::invalid_argument("zero_extension: need exactly d neighbors");
    std::set<int> uniq(nbrs.begin(), nbrs.end());
    if (static_cast<int>(uniq.size()) != d)
        throw std::invalid_argument("zero_extension: neighbors must be distinct");
    auto edges = g.edges();
    int nv = g.vertex_count();
    for (int u : nbrs) {
        if (u < 0 || u >= nv)
            throw std::invalid_argument("zero_extension: neighbor out of range");
        edges.emplace_back(u, nv);
    }
    return SimpleGraph(nv + 1, std::move(edges));
}

SimpleGraph one_extension(const SimpleGraph& g, int d, EdgePair e,
                          const std::vector<int>& extra) {
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("one_extension: edge not in graph");
    if (static_cast<int>(extra.size()) != d - 1)
        throw std::invalid_argument("one_extension: need d-1 extra vertices");
    std::set<int> uniq(extra.begin(), extra.end());
    uniq.insert(e.first);
    uniq.insert(e.second);
    if (static_cast<int>(uniq.size()) != d + 1)
        throw std::invalid_argument(
            "one_extension: attachment vertices must be distinct");
    SimpleGraph base = g.without_edge(e.first, e.second);
    auto edges = base.edges();
    int nv = g.vertex_count();
    for (int u : uniq) {
        if (u < 0 || u >= nv)
            throw std::invalid_argument("one_extension: vertex out of range");
        edges.emplace_back(u, nv);
    }
    return SimpleGraph(nv + 1, std::move(edges));
}

std::vector<std::vector<int>> k_chain_parts(const std::vector<int>& sizes) {
    if (sizes.size() < 2)
        throw std::invalid_argument("k_chain: need at least two parts");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("k_chain: part sizes must be >= 1");
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int s : sizes) {
        parts.emplace_back();
        for (int i = 0; i < s; ++i) parts.back().push_back(next++);
    }
    return parts;
}

SimpleGraph k_chain(const std::vector<int>& sizes) {
    auto parts = k_chain_parts(sizes);
    std::vector<EdgePair> edges;
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        add_bipartite(edges, parts[i], parts[i + 1]);
    int n = 0;
    for (int s : sizes) n += s;
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph vertex_clique_replace(const SimpleGraph& g, int v,
                                  std::vector<int>* old_ids) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex_clique_replace: bad vertex");
    auto nbrs = g.neighbors(v);
    std::vector<int> ids;
    SimpleGraph reduced = g.without_vertex(v, &ids);
    auto edges = reduced.edges();
    auto relabel = [&](int u) { return u > v ? u - 1 : u; };
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            edges.emplace_back(relabel(nbrs[i]), relabel(nbrs[j]));
    if (old_ids) *old_ids = ids;
    return SimpleGraph(reduced.vertex_count(), std::move(edges));
}

} // namespace rigikit
