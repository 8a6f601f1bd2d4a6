#include "rigikit/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace rigikit {

namespace {

std::vector<EdgePair> normalize_edges(int n, std::vector<EdgePair> edges,
                                      bool dedup) {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (dedup) edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace

SimpleGraph::SimpleGraph(int n, std::vector<EdgePair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    edges_ = normalize_edges(n, std::move(edges), true);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), EdgePair{u, v});
}

int SimpleGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), EdgePair{u, v});
    if (it == edges_.end() || *it != EdgePair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool SimpleGraph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

std::vector<std::vector<int>> SimpleGraph::components_without(
    const std::vector<int>& removed) const {
    std::vector<bool> blocked(n_, false);
    for (int v : removed) blocked[v] = true;
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> result;
    for (int s = 0; s < n_; ++s) {
        if (blocked[s] || comp[s] >= 0) continue;
        int id = static_cast<int>(result.size());
        result.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            result[id].push_back(v);
            for (int w : adj_[v]) {
                if (blocked[w] || comp[w] >= 0) continue;
                comp[w] = id;
                stack.push_back(w);
            }
        }
    }
    for (auto& c : result) std::sort(c.begin(), c.end());
    return result;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    return components_without({});
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
    auto e = edges_;
    e.emplace_back(u, v);
    return SimpleGraph(n_, std::move(e));
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto e = edges_;
    auto it = std::find(e.begin(), e.end(), EdgePair{u, v});
    if (it == e.end())
        throw std::invalid_argument("without_edge: edge not present");
    e.erase(it);
    return SimpleGraph(n_, std::move(e));
}

SimpleGraph SimpleGraph::without_vertex(int v,
                                        std::vector<int>* old_ids) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("without_vertex: bad vertex");
    std::vector<EdgePair> e;
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        e.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    if (old_ids) {
        old_ids->clear();
        for (int i = 0; i < n_; ++i)
            if (i != v) old_ids->push_back(i);
    }
    return SimpleGraph(n_ - 1, std::move(e));
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts,
                                 std::vector<int>* old_ids) const {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> local(n_, -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        local[sorted[i]] = i;
    std::vector<EdgePair> e;
    for (auto [a, b] : edges_)
        if (local[a] >= 0 && local[b] >= 0) e.emplace_back(local[a], local[b]);
    if (old_ids) *old_ids = sorted;
    return SimpleGraph(static_cast<int>(sorted.size()), std::move(e));
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<EdgePair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
    std::vector<EdgePair> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return SimpleGraph(a + b, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
    std::vector<EdgePair> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(e));
}

Multigraph::Multigraph(int n_, std::vector<EdgePair> edges_) : n(n_) {
    edges = normalize_edges(n_, std::move(edges_), false);
}

Multigraph Multigraph::without_copy(int copy) const {
    if (copy < 0 || copy >= copy_count())
        throw std::invalid_argument("without_copy: bad copy index");
    Multigraph h = *this;
    h.edges.erase(h.edges.begin() + copy);
    return h;
}

std::vector<int> Multigraph::component_of() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = find(v);
    return comp;
}

bool Multigraph::connected() const {
    if (n <= 1) return true;
    auto comp = component_of();
    for (int v = 1; v < n; ++v)
        if (comp[v] != comp[0]) return false;
    return true;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

// ---------------------------------------------------------------------------
// Vertex connectivity via max-flow on the split network: every vertex becomes
// an arc in->out of capacity 1; graph edges become arcs of effectively
// unbounded capacity in both directions.

namespace {

class SplitFlowNetwork {
public:
    SplitFlowNetwork(const SimpleGraph& g, int s, int t) : g_(g), n_(g.vertex_count()) {
        // node 2v = v_in, 2v+1 = v_out
        cap_.assign(4 * n_ * n_, 0); // dense capacity matrix, desk scale
        auto idx = [this](int a, int b) { return a * 2 * n_ + b; };
        for (int v = 0; v < n_; ++v)
            cap_[idx(2 * v, 2 * v + 1)] = (v == s || v == t) ? big_ : 1;
        for (auto [u, v] : g.edges()) {
            cap_[idx(2 * u + 1, 2 * v)] = big_;
            cap_[idx(2 * v + 1, 2 * u)] = big_;
        }
        s_ = 2 * s + 1;
        t_ = 2 * t;
    }

    int max_flow() {
        int total = 0;
        while (augment()) ++total;
        return total;
    }

    // Vertices whose in->out arc is saturated and crosses the cut.
    std::vector<int> min_cut_vertices() {
        std::vector<bool> reach(2 * n_, false);
        bfs_reachable(reach);
        std::vector<int> cut;
        for (int v = 0; v < n_; ++v)
            if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
        return cut;
    }

private:
    bool augment() {
        std::vector<int> pred(2 * n_, -1);
        std::queue<int> q;
        q.push(s_);
        pred[s_] = s_;
        while (!q.empty() && pred[t_] < 0) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < 2 * n_; ++b) {
                if (pred[b] >= 0 || cap_[a * 2 * n_ + b] <= 0) continue;
                pred[b] = a;
                q.push(b);
            }
        }
        if (pred[t_] < 0) return false;
        for (int b = t_; b != s_; b = pred[b]) {
            int a = pred[b];
            cap_[a * 2 * n_ + b] -= 1;
            cap_[b * 2 * n_ + a] += 1;
        }
        return true;
    }

    void bfs_reachable(std::vector<bool>& reach) {
        std::queue<int> q;
        q.push(s_);
        reach[s_] = true;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < 2 * n_; ++b)
                if (!reach[b] && cap_[a * 2 * n_ + b] > 0) {
                    reach[b] = true;
                    q.push(b);
                }
        }
    }

    const SimpleGraph& g_;
    int n_;
    int s_ = 0, t_ = 0;
    static constexpr int big_ = 1 << 20;
    std::vector<int> cap_;
};

} // namespace

int vertex_disjoint_paths(const SimpleGraph& g, int s, int t,
                          std::vector<int>* min_cut) {
    SplitFlowNetwork net(g, s, t);
    int flow = net.max_flow();
    if (min_cut) *min_cut = net.min_cut_vertices();
    return flow;
}

ConnectivityResult vertex_connectivity(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument(
            "vertex_connectivity: undefined on a single-vertex graph");
    if (g.is_complete()) return {n - 1, std::nullopt};

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_cut;
    int best_s = -1;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            std::vector<int> cut;
            int f = vertex_disjoint_paths(g, s, t, &cut);
            if (f < best) {
                best = f;
                best_cut = cut;
                best_s = s;
            }
        }
    }
    SeparationWitness w;
    w.separator = best_cut;
    auto comps = g.components_without(best_cut);
    // side = the component containing the source of the minimizing cut
    for (const auto& c : comps)
        if (std::find(c.begin(), c.end(), best_s) != c.end()) {
            w.side = c;
            break;
        }
    return {best, std::move(w)};
}

std::vector<Fragment> fragments(const SimpleGraph& g) {
    auto conn = vertex_connectivity(g);
    if (conn.k < 2) {
        std::string who = conn.witness && !conn.witness->separator.empty()
                              ? std::to_string(conn.witness->separator[0])
                              : std::string("-");
        throw std::invalid_argument("fragments: graph is not 2-connected (cut vertex " +
                                    who + ")");
    }
    int n = g.vertex_count();
    std::vector<Fragment> result;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto comps = g.components_without({a, b});
            if (comps.size() < 2) continue;
            for (const auto& c : comps)
                result.push_back(Fragment{{a, b}, c});
        }
    }
    std::sort(result.begin(), result.end(), [](const Fragment& x, const Fragment& y) {
        if (x.vertices != y.vertices) return x.vertices < y.vertices;
        return x.separator < y.separator;
    });
    return result;
}

SimpleGraph two_sum(const SimpleGraph& g1, const SimpleGraph& g2,
                    EdgePair a1b1, EdgePair a2b2) {
    if (!g1.has_edge(a1b1.first, a1b1.second))
        throw std::invalid_argument("two_sum: edge missing in first graph");
    if (!g2.has_edge(a2b2.first, a2b2.second))
        throw std::invalid_argument("two_sum: edge missing in second graph");
    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    // G2's a2 -> a1, b2 -> b1; remaining G2 vertices get fresh ids.
    std::vector<int> map2(n2, -1);
    map2[a2b2.first] = a1b1.first;
    map2[a2b2.second] = a1b1.second;
    int next = n1;
    for (int v = 0; v < n2; ++v)
        if (map2[v] < 0) map2[v] = next++;
    std::vector<EdgePair> edges;
    for (auto e : g1.edges())
        if (e != EdgePair{std::min(a1b1.first, a1b1.second),
                          std::max(a1b1.first, a1b1.second)})
            edges.push_back(e);
    EdgePair del2{std::min(a2b2.first, a2b2.second),
                  std::max(a2b2.first, a2b2.second)};
    for (auto e : g2.edges()) {
        if (e == del2) continue;
        edges.emplace_back(map2[e.first], map2[e.second]);
    }
    return SimpleGraph(n1 + n2 - 2, std::move(edges));
}

CleaveResult cleave(const SimpleGraph& g, int a, int b) {
    auto comps = g.components_without({a, b});
    if (comps.size() < 2)
        throw std::invalid_argument("cleave: {a,b} is not a 2-separator");
    // Canonical split: lexicographically smallest component on one side,
    // everything else on the other.
    std::vector<std::vector<int>> sorted = comps;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> side1 = sorted[0];
    std::vector<int> side2;
    for (size_t i = 1; i < sorted.size(); ++i)
        side2.insert(side2.end(), sorted[i].begin(), sorted[i].end());
    side1.push_back(a);
    side1.push_back(b);
    side2.push_back(a);
    side2.push_back(b);

    CleaveResult r;
    SimpleGraph h1 = g.induced(side1, &r.map1);
    SimpleGraph h2 = g.induced(side2, &r.map2);
    auto local = [](const std::vector<int>& ids, int orig) {
        return static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), orig) - ids.begin());
    };
    int a1 = local(r.map1, a), b1 = local(r.map1, b);
    int a2 = local(r.map2, a), b2 = local(r.map2, b);
    r.g1 = h1.has_edge(a1, b1) ? h1 : h1.with_edge(a1, b1);
    r.g2 = h2.has_edge(a2, b2) ? h2 : h2.with_edge(a2, b2);
    return r;
}

bool verify_rooted_minor(const SimpleGraph& g, const std::vector<int>& roots,
                         const std::vector<EdgePair>& h_edges,
                         const RootedMinorWitness& witness) {
    int n = g.vertex_count();
    if (static_cast<int>(witness.root_of.size()) != n)
        throw std::invalid_argument("rooted minor: partition does not cover V(G)");
    std::set<int> root_set(roots.begin(), roots.end());
    for (int v = 0; v < n; ++v) {
        if (witness.root_of[v] < 0)
            throw std::invalid_argument("rooted minor: vertex without a block");
        if (!root_set.count(witness.root_of[v])) return false;
    }
    // (i) each root lies in its own block
    for (int r : roots)
        if (witness.root_of[r] != r) return false;
    // (ii) each block induces a connected subgraph
    for (int r : roots) {
        std::vector<int> block;
        for (int v = 0; v < n; ++v)
            if (witness.root_of[v] == r) block.push_back(v);
        if (block.empty()) return false;
        if (!g.induced(block).connected()) return false;
    }
    // (iii) every H-edge has a crossing G-edge
    for (auto [x, y] : h_edges) {
        bool found = false;
        for (auto [u, v] : g.edges()) {
            int ru = witness.root_of[u], rv = witness.root_of[v];
            if ((ru == x && rv == y) || (ru == y && rv == x)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace rigikit
