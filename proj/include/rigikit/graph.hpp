#ifndef RIGIKIT_GRAPH_HPP
#define RIGIKIT_GRAPH_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigikit {

using VertexId = int;
using EdgePair = std::pair<int, int>;

// Thrown when an exhaustive search contradicts a theorem the engine relies
// on; the CLI maps it to exit code 3.
struct InvariantFault : std::logic_error {
    using std::logic_error::logic_error;
};

// Simple undirected graph on vertices 0..n-1. Edge list is normalized
// (u < v, sorted, unique); all operations are value-semantic and pure.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<EdgePair> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgePair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const; // -1 if absent
    bool is_complete() const;
    bool connected() const;
    std::vector<std::vector<int>> components() const;
    std::vector<std::vector<int>> components_without(
        const std::vector<int>& removed) const;

    SimpleGraph with_edge(int u, int v) const;
    SimpleGraph without_edge(int u, int v) const;
    // Removes v and relabels ids above v down by one. old_ids[i] gives the
    // original id of new vertex i.
    SimpleGraph without_vertex(int v, std::vector<int>* old_ids = nullptr) const;
    SimpleGraph induced(const std::vector<int>& verts,
                        std::vector<int>* old_ids = nullptr) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    static SimpleGraph complete(int n);
    static SimpleGraph complete_bipartite(int a, int b);
    static SimpleGraph cycle(int n);

private:
    int n_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::vector<int>> adj_;
};

// Multigraph: one edge-list entry per copy, so copies carry identity by
// index. Parallel edges allowed, self-loops not.
struct Multigraph {
    int n = 0;
    std::vector<EdgePair> edges;

    Multigraph() = default;
    Multigraph(int n_, std::vector<EdgePair> edges_);

    int copy_count() const { return static_cast<int>(edges.size()); }
    Multigraph without_copy(int copy) const;
    bool connected() const;
    std::vector<int> component_of() const; // vertex -> component id
    int degree(int v) const;
};

struct SeparationWitness {
    std::vector<int> separator; // removing these disconnects the graph
    std::vector<int> side;      // one component of G - separator
};

struct ConnectivityResult {
    int k = 0;
    std::optional<SeparationWitness> witness; // present iff k < n-1
};

// Vertex connectivity by max-flow with unit vertex capacities (vertex
// splitting); the witness is a minimum separator recovered from a min cut.
ConnectivityResult vertex_connectivity(const SimpleGraph& g);

// Max-flow value between two fixed non-adjacent vertices (internal helper,
// exposed for the cross-check tests).
int vertex_disjoint_paths(const SimpleGraph& g, int s, int t,
                          std::vector<int>* min_cut = nullptr);

struct Fragment {
    std::array<int, 2> separator;
    std::vector<int> vertices; // sorted
};

// All fragments of a 2-connected graph: X with |N(X)| = 2 and a nonempty
// remainder. Enumerates the O(n^2) separator pairs; canonical order is by
// lexicographically smallest fragment.
std::vector<Fragment> fragments(const SimpleGraph& g);

SimpleGraph two_sum(const SimpleGraph& g1, const SimpleGraph& g2,
                    EdgePair a1b1, EdgePair a2b2);

struct CleaveResult {
    SimpleGraph g1, g2;
    std::vector<int> map1, map2; // local id -> id in the original graph
};

CleaveResult cleave(const SimpleGraph& g, int a, int b);

struct RootedMinorWitness {
    std::vector<int> root_of; // vertex of G -> root in X
};

// Checks the three rooted-minor conditions: roots lie in their own blocks,
// blocks induce connected subgraphs, and every H-edge has a crossing G-edge.
bool verify_rooted_minor(const SimpleGraph& g, const std::vector<int>& roots,
                         const std::vector<EdgePair>& h_edges,
                         const RootedMinorWitness& witness);

} // namespace rigikit

#endif
