#ifndef RIGIKIT_BUILDERS_HPP
#define RIGIKIT_BUILDERS_HPP

#include <vector>

#include "rigikit/graph.hpp"
#include "rigikit/packing.hpp"
#include "rigikit/rigidity.hpp"

namespace rigikit {

// Body-bar graph of a multigraph H: each vertex v becomes a complete body on
// d+1+deg(v) vertices (d+1 core vertices plus one bar end per incident edge
// copy); each edge copy becomes a single bar between the two ends.
// Vertex naming is deterministic: bodies in H-vertex order, core vertices
// first, then bar ends in H-edge order.
struct BodyBarLayout {
    SimpleGraph graph;
    std::vector<std::vector<int>> body_of; // H-vertex -> body vertex ids
    std::vector<EdgePair> bar_of;          // H-copy -> the bar's endpoints
};

BodyBarLayout body_bar_graph(const Multigraph& h, int d);

// Body-hinge graph: bodies of d+1 vertices, a hinge of d-1 vertices per edge
// copy, each hinge completely joined to both incident bodies.
struct BodyHingeLayout {
    SimpleGraph graph;
    std::vector<std::vector<int>> body_of;  // H-vertex -> d+1 vertex ids
    std::vector<std::vector<int>> hinge_of; // H-copy -> d-1 vertex ids
};

BodyHingeLayout body_hinge_graph(const Multigraph& h, int d);

// Exact rational configuration realizing the hinge-count sufficiency proof:
// all bodies on the standard basis (origin for the last core vertex), each
// hinge on the basis vectors missed by a tree pair avoiding its copies, the
// distinguished hinge truncated to e_1..e_{d-2} with its last vertex removed.
// `packing` must pack (D-1)(H-e)+(D-3)e into D trees (parent_of maps the
// expanded copies back to H). The framework's graph is G_H minus the removed
// hinge vertex. For an edgeless H, pass edge_copy = -1.
struct StandardHingeConfig {
    RatFramework framework;
    std::vector<int> old_ids; // framework vertex -> vertex of G_H
    int removed_vertex = -1;  // vertex of G_H that was dropped
};

StandardHingeConfig standard_body_hinge_config(const Multigraph& h, int d,
                                               int edge_copy,
                                               const TreePacking& packing,
                                               const std::vector<int>& parent_of);

// The computational realization of the proof's conclusion: the standard
// configuration is infinitesimally rigid, certified by exact rank.
bool verify_standard_config_rigid(const StandardHingeConfig& c);

// New vertex joined to d existing vertices.
SimpleGraph zero_extension(const SimpleGraph& g, int d,
                           const std::vector<int>& nbrs);

// Delete uv, add a new vertex joined to u, v and d-1 further vertices.
SimpleGraph one_extension(const SimpleGraph& g, int d, EdgePair e,
                          const std::vector<int>& extra);

// Layered complete bipartite graph on parts of the given sizes; consecutive
// parts fully joined, nothing else. Part i occupies a consecutive id range.
SimpleGraph k_chain(const std::vector<int>& sizes);
std::vector<std::vector<int>> k_chain_parts(const std::vector<int>& sizes);

// G - v with the neighborhood of v completed. old_ids maps result vertices
// back to G (v removed, higher ids shifted down).
SimpleGraph vertex_clique_replace(const SimpleGraph& g, int v,
                                  std::vector<int>* old_ids = nullptr);

} // namespace rigikit

#endif
