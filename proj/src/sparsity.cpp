#include "rigikit/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rigikit {

PebbleGame::PebbleGame(int n)
    : n_(n), pebbles_(n, 2), out_(n), seen_(n, 0) {}

bool PebbleGame::collect_pebble(int root, int skip1, int skip2) {
    std::vector<int> parent(n_, -2);
    std::vector<int> stack{root};
    std::fill(seen_.begin(), seen_.end(), 0);
    seen_[root] = 1;
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v != skip1 && v != skip2 && pebbles_[v] > 0) {
            // Reverse the tree path root -> v; the pebble moves to root.
            int w = v;
            while (parent[w] >= 0) {
                int p = parent[w];
                auto& op = out_[p];
                op.erase(std::find(op.begin(), op.end(), w));
                out_[w].push_back(p);
                w = p;
            }
            pebbles_[v] -= 1;
            pebbles_[root] += 1;
            return true;
        }
        for (int w : out_[v]) {
            if (seen_[w]) continue;
            seen_[w] = 1;
            parent[w] = v;
            stack.push_back(w);
        }
    }
    return false;
}

bool PebbleGame::try_insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
        if (collect_pebble(u, u, v)) continue;
        if (collect_pebble(v, u, v)) continue;
        // Rejected: record the region the searches can reach.
        region_.clear();
        std::fill(seen_.begin(), seen_.end(), 0);
        std::vector<int> stack{u, v};
        seen_[u] = seen_[v] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            region_.push_back(a);
            for (int b : out_[a])
                if (!seen_[b]) {
                    seen_[b] = 1;
                    stack.push_back(b);
                }
        }
        std::sort(region_.begin(), region_.end());
        return false;
    }
    pebbles_[u] -= 1;
    out_[u].push_back(v);
    ++accepted_;
    return true;
}

SparsityRank pebble_rank(const SimpleGraph& g) {
    PebbleGame game(g.vertex_count());
    SparsityRank result;
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (game.try_insert(edges[i].first, edges[i].second))
            result.independent.push_back(i);
    result.rank = static_cast<int>(result.independent.size());
    return result;
}

int pebble_rank_subset(const SimpleGraph& g, const std::vector<int>& subset) {
    PebbleGame game(g.vertex_count());
    int rank = 0;
    for (int i : subset)
        if (game.try_insert(g.edges()[i].first, g.edges()[i].second)) ++rank;
    return rank;
}

bool pebble_independent(const SimpleGraph& g, const std::vector<int>& subset) {
    return pebble_rank_subset(g, subset) == static_cast<int>(subset.size());
}

bool is_laman_rigid(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    return pebble_rank(g).rank == 2 * n - 3;
}

bool is_redundantly_rigid_2d(const SimpleGraph& g, EdgePair* failing_edge) {
    for (auto e : g.edges()) {
        if (!is_laman_rigid(g.without_edge(e.first, e.second))) {
            if (failing_edge) *failing_edge = e;
            return false;
        }
    }
    return true;
}

bool is_circuit_r2(const SimpleGraph& g) {
    int m = g.edge_count();
    if (m != 2 * g.vertex_count() - 2) return false;
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    for (int skip = 0; skip < m; ++skip) {
        std::vector<int> rest;
        for (int i : all)
            if (i != skip) rest.push_back(i);
        if (!pebble_independent(g, rest)) return false;
    }
    return true;
}

namespace {

std::vector<int> set_union_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<int> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(r));
    return r;
}

std::vector<int> set_minus_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
    return r;
}

std::vector<int> without_element(const std::vector<int>& a, int e) {
    std::vector<int> r;
    for (int x : a)
        if (x != e) r.push_back(x);
    return r;
}

// A circuit crossing two disjoint edge sets D and A exists iff the rank of
// the union falls short of the rank sum (the restriction splits as a direct
// sum exactly when no circuit meets both parts).
bool crossing_exists(const SimpleGraph& g, const std::vector<int>& d,
                     const std::vector<int>& a) {
    if (d.empty() || a.empty()) return false;
    return pebble_rank_subset(g, set_union_sorted(d, a)) <
           pebble_rank_subset(g, d) + pebble_rank_subset(g, a);
}

// Shrinks A to an inclusion-minimal subset keeping a crossing circuit with D,
// then strips D down to the circuit itself.
std::vector<int> extract_crossing_circuit(const SimpleGraph& g,
                                          const std::vector<int>& d_in,
                                          const std::vector<int>& a_in) {
    std::vector<int> a = a_in;
    for (int e : a_in) {
        auto candidate = without_element(a, e);
        if (crossing_exists(g, d_in, candidate)) a = std::move(candidate);
    }
    std::vector<int> d = d_in;
    for (int e : d_in) {
        auto candidate = without_element(d, e);
        if (crossing_exists(g, candidate, a)) d = std::move(candidate);
    }
    return set_union_sorted(d, a);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<int>> m_components(const SimpleGraph& g) {
    int m = g.edge_count();
    if (m == 0) return {};
    auto base = pebble_rank(g);
    const std::vector<int>& basis = base.independent;
    std::vector<bool> in_basis(m, false);
    for (int i : basis) in_basis[i] = true;

    UnionFind uf(m);

    // Fundamental circuits of non-basis edges, recovered from the pebble
    // game's failure region and filtered by exchange tests.
    PebbleGame game(g.vertex_count());
    for (int i : basis) game.try_insert(g.edges()[i].first, g.edges()[i].second);
    for (int x = 0; x < m; ++x) {
        if (in_basis[x]) continue;
        bool accepted = game.try_insert(g.edges()[x].first, g.edges()[x].second);
        if (accepted)
            throw InvariantFault("m_components: non-basis edge accepted");
        const auto& region = game.failure_region();
        std::vector<bool> in_region(g.vertex_count(), false);
        for (int v : region) in_region[v] = true;
        for (int f : basis) {
            auto [a, b] = g.edges()[f];
            if (!in_region[a] || !in_region[b]) continue;
            // f is in the fundamental circuit of x iff basis - f + x stays
            // independent.
            std::vector<int> probe;
            for (int j : basis)
                if (j != f) probe.push_back(j);
            probe.push_back(x);
            std::sort(probe.begin(), probe.end());
            if (pebble_independent(g, probe)) uf.merge(x, f);
        }
    }

    // Completion: every class must be a separator of the matroid
    // (rank-additive against its complement); merge along crossing circuits
    // until that holds.
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    int full_rank = base.rank;
    for (;;) {
        std::vector<std::vector<int>> classes(m);
        for (int i = 0; i < m; ++i) classes[uf.find(i)].push_back(i);
        bool fixed = true;
        for (int root = 0; root < m && fixed; ++root) {
            const auto& cls = classes[root];
            if (cls.empty() || static_cast<int>(cls.size()) == m) continue;
            auto rest = set_minus_sorted(all, cls);
            if (pebble_rank_subset(g, cls) + pebble_rank_subset(g, rest) ==
                full_rank)
                continue;
            auto circuit = extract_crossing_circuit(g, cls, rest);
            for (size_t i = 1; i < circuit.size(); ++i)
                uf.merge(circuit[0], circuit[i]);
            fixed = false;
        }
        if (fixed) break;
    }

    std::vector<std::vector<int>> result(m);
    for (int i = 0; i < m; ++i) result[uf.find(i)].push_back(i);
    result.erase(std::remove_if(result.begin(), result.end(),
                                [](const auto& c) { return c.empty(); }),
                 result.end());
    std::sort(result.begin(), result.end());
    return result;
}

bool is_m_connected(const SimpleGraph& g) {
    if (g.edge_count() == 0) return false;
    return m_components(g).size() == 1;
}

namespace {

// Minimal dependent subset of a dependent edge set, by greedy removal.
std::vector<int> circuit_within(const SimpleGraph& g, std::vector<int> s) {
    for (int e : std::vector<int>(s)) {
        auto candidate = without_element(s, e);
        if (pebble_rank_subset(g, candidate) <
            static_cast<int>(candidate.size()))
            s = std::move(candidate);
    }
    return s;
}

} // namespace

EarDecomposition ear_decomposition(const SimpleGraph& g) {
    if (!is_m_connected(g))
        throw std::invalid_argument("ear_decomposition: graph is not M-connected");
    int m = g.edge_count();
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);

    EarDecomposition dec;
    std::vector<int> covered = circuit_within(g, all);
    dec.circuits.push_back(covered);
    while (static_cast<int>(covered.size()) < m) {
        auto rest = set_minus_sorted(all, covered);
        // Shrink the new part to inclusion-minimal while a crossing circuit
        // survives; every crossing circuit then has exactly this new part.
        std::vector<int> part = rest;
        for (int e : rest) {
            auto candidate = without_element(part, e);
            if (crossing_exists(g, covered, candidate)) part = std::move(candidate);
        }
        if (!crossing_exists(g, covered, part))
            throw InvariantFault("ear_decomposition: no extending circuit");
        std::vector<int> keep = covered;
        for (int e : covered) {
            auto candidate = without_element(keep, e);
            if (crossing_exists(g, candidate, part)) keep = std::move(candidate);
        }
        dec.circuits.push_back(set_union_sorted(keep, part));
        covered = set_union_sorted(covered, part);
    }
    return dec;
}

bool sparse23_bruteforce(int n, const std::vector<EdgePair>& edges) {
    if (n > 20)
        throw std::invalid_argument("sparse23_bruteforce: graph too large");
    std::vector<std::uint32_t> emask;
    emask.reserve(edges.size());
    for (auto [u, v] : edges) emask.push_back((1u << u) | (1u << v));
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        int k = std::popcount(w);
        if (k < 2) continue;
        int count = 0;
        for (auto em : emask) count += (em & w) == em;
        if (count > 2 * k - 3) return false;
    }
    return true;
}

namespace {

int rank_bruteforce(const SimpleGraph& g, const std::vector<int>& subset) {
    std::vector<EdgePair> chosen;
    for (int i : subset) {
        chosen.push_back(g.edges()[i]);
        if (!sparse23_bruteforce(g.vertex_count(), chosen)) chosen.pop_back();
    }
    return static_cast<int>(chosen.size());
}

bool is_circuit_bruteforce(const SimpleGraph& g, const std::vector<int>& c) {
    std::vector<EdgePair> pairs;
    std::uint32_t verts = 0;
    for (int i : c) {
        pairs.push_back(g.edges()[i]);
        verts |= (1u << pairs.back().first) | (1u << pairs.back().second);
    }
    int nv = std::popcount(verts);
    if (static_cast<int>(pairs.size()) != 2 * nv - 2) return false;
    for (size_t skip = 0; skip < pairs.size(); ++skip) {
        std::vector<EdgePair> rest;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (i != skip) rest.push_back(pairs[i]);
        if (!sparse23_bruteforce(g.vertex_count(), rest)) return false;
    }
    return true;
}

} // namespace

bool verify_ear_decomposition(const SimpleGraph& g, const EarDecomposition& d) {
    int m = g.edge_count();
    if (d.circuits.empty()) return m == 0;
    std::vector<int> covered;
    for (size_t i = 0; i < d.circuits.size(); ++i) {
        const auto& c = d.circuits[i];
        if (!is_circuit_bruteforce(g, c)) return false;
        if (i > 0) {
            std::vector<int> inter;
            std::set_intersection(c.begin(), c.end(), covered.begin(),
                                  covered.end(), std::back_inserter(inter));
            auto fresh = set_minus_sorted(c, covered);
            if (inter.empty() || fresh.empty()) return false;
            // Non-domination: no circuit meets the prefix and has a new part
            // strictly inside this ear's new part.
            for (int e : fresh) {
                auto a = without_element(fresh, e);
                if (a.empty()) continue;
                int ru = rank_bruteforce(g, set_union_sorted(covered, a));
                if (ru < rank_bruteforce(g, covered) + rank_bruteforce(g, a))
                    return false;
            }
        }
        covered = set_union_sorted(covered, c);
    }
    return static_cast<int>(covered.size()) == m;
}

std::vector<std::vector<int>> enumerate_circuits_bruteforce(
    const SimpleGraph& g) {
    int m = g.edge_count();
    if (m > 22)
        throw std::invalid_argument("enumerate_circuits_bruteforce: too many edges");
    std::vector<std::vector<int>> circuits;
    // Over vertex supports: a circuit on vertex set W has exactly 2|W|-2
    // edges covering W with all proper subsets sparse.
    int n = g.vertex_count();
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        int nv = std::popcount(w);
        if (nv < 4) continue;
        std::vector<int> pool;
        for (int i = 0; i < m; ++i) {
            auto [a, b] = g.edges()[i];
            if ((w >> a & 1) && (w >> b & 1)) pool.push_back(i);
        }
        int need = 2 * nv - 2;
        if (static_cast<int>(pool.size()) < need) continue;
        std::vector<int> pick(need);
        std::vector<int> idx(need);
        std::iota(idx.begin(), idx.end(), 0);
        // iterate over combinations of pool of size need
        for (;;) {
            for (int i = 0; i < need; ++i) pick[i] = pool[idx[i]];
            std::uint32_t support = 0;
            for (int i : pick) {
                auto [a, b] = g.edges()[i];
                support |= (1u << a) | (1u << b);
            }
            if (support == w && is_circuit_bruteforce(g, pick))
                circuits.push_back(pick);
            // next combination
            int pos = need - 1;
            while (pos >= 0 &&
                   idx[pos] == static_cast<int>(pool.size()) - need + pos)
                --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < need; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    std::sort(circuits.begin(), circuits.end());
    return circuits;
}

Reduction find_reduction(const SimpleGraph& g) {
    if (g.vertex_count() < 5)
        throw std::invalid_argument("find_reduction: need at least 5 vertices");
    if (vertex_connectivity(g).k < 3)
        throw std::invalid_argument("find_reduction: graph is not 3-connected");
    if (!is_redundantly_rigid_2d(g))
        throw std::invalid_argument("find_reduction: graph is not redundantly rigid");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3)
            return Reduction{Reduction::Kind::Degree3Vertex, v, {-1, -1}};
    for (auto e : g.edges()) {
        SimpleGraph h = g.without_edge(e.first, e.second);
        if (vertex_connectivity(h).k >= 3 && is_redundantly_rigid_2d(h))
            return Reduction{Reduction::Kind::RemovableEdge, -1, e};
    }
    throw InvariantFault(
        "find_reduction: exhaustive search failed on a valid input");
}

} // namespace rigikit
