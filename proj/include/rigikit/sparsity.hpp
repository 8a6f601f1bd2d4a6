#ifndef RIGIKIT_SPARSITY_HPP
#define RIGIKIT_SPARSITY_HPP

#include <optional>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

// (2,3)-pebble game: exact independence oracle for the d=2 generic rigidity
// matroid. Accepted edges are oriented; pebbles(v) + outdeg(v) == 2 holds
// throughout.
class PebbleGame {
public:
    explicit PebbleGame(int n);

    // Accepts uv iff the current accepted set plus uv is (2,3)-sparse.
    bool try_insert(int u, int v);

    // After a failed try_insert: the vertex region the pebble search explored.
    // The accepted edges induced on it form a tight set whose union with the
    // rejected edge contains the fundamental circuit.
    const std::vector<int>& failure_region() const { return region_; }

    int accepted_count() const { return accepted_; }

private:
    bool collect_pebble(int root, int skip1, int skip2);

    int n_;
    int accepted_ = 0;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_; // orientation of accepted edges
    std::vector<int> region_;
    std::vector<char> seen_;
};

struct SparsityRank {
    int rank = 0;
    std::vector<int> independent; // indices into g.edges(): a max sparse subset
};

// Rank of E in the d=2 rigidity matroid (size of a maximum (2,3)-sparse
// subset), with the greedy independent set.
SparsityRank pebble_rank(const SimpleGraph& g);

// Rank of a subset of edge indices.
int pebble_rank_subset(const SimpleGraph& g, const std::vector<int>& subset);
bool pebble_independent(const SimpleGraph& g, const std::vector<int>& subset);

bool is_laman_rigid(const SimpleGraph& g);

// G - e Laman-rigid for every edge; on failure reports the first failing edge.
bool is_redundantly_rigid_2d(const SimpleGraph& g,
                             EdgePair* failing_edge = nullptr);

// |E| = 2|V|-2 with every proper subgraph (2,3)-sparse.
bool is_circuit_r2(const SimpleGraph& g);

// Connected components of the rigidity matroid: classes of the common-circuit
// relation. Bridges and coloops are singletons.
std::vector<std::vector<int>> m_components(const SimpleGraph& g);
bool is_m_connected(const SimpleGraph& g);

struct EarDecomposition {
    std::vector<std::vector<int>> circuits; // edge-index sets C_1..C_t
};

// Greedy ear decomposition of an M-connected graph: each attached circuit has
// an inclusion-minimal new part, which realizes the non-domination condition.
EarDecomposition ear_decomposition(const SimpleGraph& g);

// Independent verifier: re-checks that every C_i is a circuit (by the count
// characterization), the prefix conditions, non-domination, and union = E.
// Uses brute-force subgraph counting only, no pebble-game state.
bool verify_ear_decomposition(const SimpleGraph& g, const EarDecomposition& d);

struct Reduction {
    enum class Kind { Degree3Vertex, RemovableEdge };
    Kind kind;
    int vertex = -1;              // for Degree3Vertex
    EdgePair edge = {-1, -1};     // for RemovableEdge
};

// For a 3-connected redundantly rigid graph with n >= 5: a degree-3 vertex
// (smallest id), else a lex-smallest edge whose deletion keeps the graph
// 3-connected and redundantly rigid. Exhaustive failure cannot happen for
// valid inputs; it raises InvariantFault.
Reduction find_reduction(const SimpleGraph& g);

// Brute-force (2,3)-sparsity via vertex-subset enumeration; independent of
// the pebble game, used by verifiers and test oracles (small n only).
bool sparse23_bruteforce(int n, const std::vector<EdgePair>& edges);

// All circuits of the d=2 rigidity matroid, by exhaustive enumeration.
// Exponential; intended for n <= 7 test oracles.
std::vector<std::vector<int>> enumerate_circuits_bruteforce(const SimpleGraph& g);

} // namespace rigikit

#endif
