#ifndef DJC_CYCLES_HPP
#define DJC_CYCLES_HPP

#include "djc/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace djc {

/// Directed cycle given as arc ids in traversal order.
struct Dicycle {
    std::vector<ArcId> arcs;
};

/// Cycle of the underlying undirected graph, as arc ids in cyclic order.
struct UndirectedCycle {
    std::vector<ArcId> arcs;
};

/// A dicycle B and an undirected cycle C with V(B) and V(C) disjoint.
struct Certificate {
    Dicycle dicycle;
    UndirectedCycle cycle;
};

bool is_dicycle(const Digraph& d, const std::vector<ArcId>& arcs);
bool is_undirected_cycle(const Digraph& d, const std::vector<ArcId>& arcs);

/// Vertices of a dicycle in traversal order (tail of each arc).
std::vector<VertexId> dicycle_vertices(const Digraph& d, const std::vector<ArcId>& arcs);

/// Vertices of an undirected cycle in walk order, or nullopt if the arcs do
/// not form a closed walk.
std::optional<std::vector<VertexId>> cycle_vertices(const Digraph& d,
                                                    const std::vector<ArcId>& arcs);

/// Flags every endpoint of the given arcs.
VertexMask arc_vertex_mask(const Digraph& d, const std::vector<ArcId>& arcs);

/// True iff the certificate is valid for `d`. Throws std::out_of_range on
/// arc ids that do not exist in `d`.
bool verify_certificate(const Digraph& d, const Certificate& cert);

/// Like verify_certificate but explains the first failure (empty if valid).
std::string certificate_problem(const Digraph& d, const Certificate& cert);

/// Two lines: `dicycle: i1 ... ik` and `cycle: j1 ... jm`.
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace djc

#endif  // DJC_CYCLES_HPP
