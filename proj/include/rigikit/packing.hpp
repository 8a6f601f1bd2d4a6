#ifndef RIGIKIT_PACKING_HPP
#define RIGIKIT_PACKING_HPP

#include <optional>
#include <variant>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

struct TreePacking {
    int k = 0;
    std::vector<int> assignment; // edge copy -> tree index in [0,k)
};

// Dual certificate of infeasibility: a vertex partition with fewer than
// k(|P|-1) crossing edge copies (Nash-Williams / Tutte direction).
struct PartitionWitness {
    std::vector<int> block_of; // vertex -> block id (dense)
    int blocks = 0;
    int cross_edges = 0;
    int required = 0; // k(blocks-1)
};

using PackingResult = std::variant<TreePacking, PartitionWitness>;

// k edge-disjoint spanning trees by graphic matroid union with augmenting
// paths, or a violating partition when none exist.
PackingResult tree_packing(const Multigraph& h, int k);

bool packing_feasible(const PackingResult& r);
bool verify_tree_packing(const Multigraph& h, const TreePacking& p);
bool verify_partition_witness(const Multigraph& h, int k,
                              const PartitionWitness& w);

// Brute-force Nash-Williams check over all vertex partitions: feasible iff
// every partition P has at least k(|P|-1) crossing copies. Exponential in n;
// the exhaustive oracle for small multigraphs.
bool tree_packing_feasible_bruteforce(const Multigraph& h, int k);

// Every copy except `special.first` gets `base` parallel copies; the special
// copy gets `special.second`. parent_of (optional) maps each expanded copy to
// its originating copy index in h.
Multigraph multiplicity_expand(const Multigraph& h, int base,
                               std::optional<std::pair<int, int>> special =
                                   std::nullopt,
                               std::vector<int>* parent_of = nullptr);

struct BodyBarRigidCheck {
    bool rigid = false;
    PackingResult certificate;
};

// Tay count: (d+1 choose 2) edge-disjoint spanning trees in H.
BodyBarRigidCheck body_bar_rigid_check(const Multigraph& h, int d);

struct PerEdgeCertificate {
    int copy = -1; // representative copy index in h
    PackingResult certificate;
};

struct BodyBarGlobalCheck {
    bool globally_rigid = false;
    std::vector<PerEdgeCertificate> per_edge; // one entry per parallel class
};

// H - e packs (d+1 choose 2) spanning trees for every edge copy e; parallel
// copies are equivalent under single-copy deletion, so checks are
// deduplicated per parallel class.
BodyBarGlobalCheck body_bar_global_check(const Multigraph& h, int d);

struct BodyHingeRigidCheck {
    bool rigid = false;
    PackingResult certificate; // packing of (D-1)H into D trees
};

// Tay/Whiteley count: ((d+1 choose 2)-1) H contains (d+1 choose 2)
// edge-disjoint spanning trees.
BodyHingeRigidCheck body_hinge_rigid_check(const Multigraph& h, int d);

struct HingeEdgeCertificate {
    int copy = -1;               // representative copy index in h
    Multigraph expanded;         // (D-1)(H-e) + (D-3)e
    std::vector<int> parent_of;  // expanded copy -> copy index in h
    PackingResult certificate;
};

struct BodyHingeGlobalCheck {
    bool globally_rigid = false;
    std::vector<HingeEdgeCertificate> per_edge;
};

// For every edge copy e: (D-1)(H-e) + (D-3)e packs D spanning trees, with
// D = (d+1 choose 2). For d = 2 the deleted edge contributes no copies.
BodyHingeGlobalCheck body_hinge_global_check(const Multigraph& h, int d);

} // namespace rigikit

#endif
