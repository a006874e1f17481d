#ifndef DJC_TRAVERSAL_HPP
#define DJC_TRAVERSAL_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"

#include <optional>
#include <vector>

namespace djc {

struct StrongComponents {
    /// component[v] is the index of v's component.
    std::vector<std::size_t> component;
    /// Vertices of each component, ascending.
    std::vector<std::vector<VertexId>> members;
    /// A component is nontrivial if it has two or more vertices or a loop.
    std::vector<bool> nontrivial;

    std::size_t nontrivial_count() const;
};

/// Vertices flagged in `removed` (may be empty) are ignored throughout.
StrongComponents strong_components(const Digraph& d, const VertexMask& removed = {});

bool is_acyclic(const Digraph& d, const VertexMask& removed = {});

/// Topological order of the vertices, or nullopt if `d` has a dicycle.
std::optional<std::vector<VertexId>> topological_order(const Digraph& d);

/// Some dicycle of d minus `removed`, or nullopt.
std::optional<Dicycle> find_dicycle(const Digraph& d, const VertexMask& removed = {});

/// A shortest dicycle through `v` avoiding `removed`, or nullopt.
std::optional<Dicycle> shortest_dicycle_through(const Digraph& d, VertexId v,
                                                const VertexMask& removed = {});

/// Some cycle of the underlying graph avoiding `forbidden`, or nullopt if
/// what remains is a forest.
std::optional<UndirectedCycle> find_undirected_cycle(const Digraph& d,
                                                     const VertexMask& forbidden = {});

/// Vertices reachable from `from` by directed paths avoiding `removed`.
VertexMask reachable_from(const Digraph& d, VertexId from, const VertexMask& removed = {});

/// Directed path from `from` to `to` avoiding `removed` (BFS, fewest arcs).
std::optional<std::vector<ArcId>> directed_path(const Digraph& d, VertexId from, VertexId to,
                                                const VertexMask& removed = {});

/// Path between `from` and `to` in the underlying graph restricted to
/// `allowed`, as arcs in walk order.
std::optional<std::vector<ArcId>> undirected_path(const Digraph& d, VertexId from, VertexId to,
                                                  const VertexMask& allowed);

/// Connected components of the underlying graph restricted to `allowed`.
std::vector<std::vector<VertexId>> undirected_components(const Digraph& d,
                                                         const VertexMask& allowed);

}  // namespace djc

#endif  // DJC_TRAVERSAL_HPP
