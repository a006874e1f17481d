#ifndef DJC_DISPLAY_HPP
#define DJC_DISPLAY_HPP

#include "djc/digraph.hpp"

#include <optional>
#include <vector>

namespace djc {

/// Result of suppressing vertices of in- and out-degree 1.
struct Smoothed {
    Digraph graph;
    std::vector<VertexId> vertex_origin;
    /// Original arcs, in order, that each smoothed arc stands for.
    std::vector<std::vector<ArcId>> arc_paths;
};

/// Repeatedly replaces a loopless vertex with exactly one in-arc and one
/// out-arc by an arc joining its neighbours. A dicycle made entirely of
/// such vertices ends up as a single looped vertex.
Smoothed smooth_1_1(const Digraph& d);

/// The reduction of a digraph and its display.
struct Display {
    Digraph reduced;
    /// Original vertices and contracted arcs behind each reduced vertex.
    std::vector<std::vector<VertexId>> member_vertices;
    std::vector<std::vector<ArcId>> member_arcs;
    /// member_of[v] is the reduced vertex containing original vertex v.
    std::vector<VertexId> member_of;
    /// Original arc behind each reduced arc.
    std::vector<ArcId> arc_origin;
};

/// Contracts, in ascending arc-id order, any non-loop arc that is the only
/// out-arc of its tail or the only in-arc of its head, until none is left.
/// Requires `d` strongly connected with no vertex of in- and out-degree 1;
/// throws std::invalid_argument otherwise.
Display reduce_contract(const Digraph& d);

/// One way of reading a display member as an in-tree joined to an out-tree.
struct MemberSplit {
    VertexId in_root = kNoVertex;   // root of the in-tree
    VertexId out_root = kNoVertex;  // root of the out-tree
    std::optional<ArcId> root_arc;  // in_root -> out_root when the roots differ
    std::vector<VertexId> in_vertices;
    std::vector<ArcId> in_arcs;
    std::vector<VertexId> out_vertices;
    std::vector<ArcId> out_arcs;
};

/// All splits of member `m` satisfying the in-tree/out-tree decomposition,
/// including the attachment rule for arcs leaving and entering the member.
std::vector<MemberSplit> member_splits(const Digraph& d, const Display& disp, VertexId m);

}  // namespace djc

#endif  // DJC_DISPLAY_HPP
