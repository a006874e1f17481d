#ifndef DJC_LINKAGE_HPP
#define DJC_LINKAGE_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"
#include "djc/transversal.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace djc {

/// A directed path as its vertices and the arcs between them. A trivial
/// path has one vertex and no arcs.
struct DiPath {
    std::vector<VertexId> vertices;
    std::vector<ArcId> arcs;
};

/// Vertex-disjoint s1->t1 and s2->t2 paths in an acyclic digraph, or
/// nullopt if there are none. Throws std::invalid_argument on a cyclic
/// digraph and std::out_of_range on unknown terminals.
std::optional<std::pair<DiPath, DiPath>> two_disjoint_paths_dag(const Digraph& dag, VertexId s1,
                                                                VertexId t1, VertexId s2,
                                                                VertexId t2);

struct Intercyclicity {
    bool intercyclic = true;
    /// Two vertex-disjoint dicycles when not intercyclic.
    std::optional<std::pair<Dicycle, Dicycle>> disjoint_pair;
};

/// Decides whether d has two vertex-disjoint dicycles using the transversal
/// information. Throws std::invalid_argument when tau is AtLeastThree.
Intercyclicity is_intercyclic(const Digraph& d, const TauInfo& tau);

}  // namespace djc

#endif  // DJC_LINKAGE_HPP
