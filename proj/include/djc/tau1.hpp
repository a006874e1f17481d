#ifndef DJC_TAU1_HPP
#define DJC_TAU1_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"
#include "djc/linkage.hpp"
#include "djc/result.hpp"
#include "djc/transversal.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace djc {

/// Drops arcs between transversal vertices and vertices outside the strong
/// component, then repeatedly drops outside vertices of degree at most one.
/// Throws std::invalid_argument unless tau.tau is One.
DerivedGraph preprocess_tau1(const Digraph& d, const TauInfo& tau);

/// The digraph with the first transversal vertex a split into a_0 (keeps
/// the out-arcs) and a_k (takes the in-arcs, a new last vertex).
struct SplitDag {
    Digraph dag;
    /// a_0, a_1, .., a_k: the transversal vertices in dicycle order.
    std::vector<VertexId> terminals;
    /// Vertex and arc of the input behind each dag vertex and arc.
    std::vector<VertexId> vertex_origin;
    std::vector<ArcId> arc_origin;

    std::size_t segments() const { return terminals.size() - 1; }
};

/// Throws std::invalid_argument unless tau.tau is One, and std::logic_error
/// if the split is cyclic or some a_x fails to separate a_0 from a_k.
SplitDag split_transversal(const Digraph& d, const TauInfo& tau);

/// Per segment x = 1 .. k (index x-1), a largest family of openly disjoint
/// (a_{x-1}, a_x)-paths. At most one of them is the direct arc.
struct PathSystems {
    std::vector<std::vector<DiPath>> systems;
    /// Vertices meeting every path of the segment that avoids the direct
    /// arc; with `direct` this certifies maximality.
    std::vector<std::vector<VertexId>> cuts;
    std::vector<bool> direct;
    /// V(P*).
    VertexMask on_star;

    std::size_t size(std::size_t x) const { return systems[x].size(); }
};

PathSystems build_path_systems(const SplitDag& s);

/// A dipath from a vertex of P^x_i to a vertex of P^x_j, i != j, with no
/// inner vertex on P*. An end at a terminal lies on every path of the
/// segment, hence the option lists.
struct Switch {
    std::size_t segment = 0;  // index x-1
    VertexId from = kNoVertex;
    VertexId to = kNoVertex;
    std::vector<ArcId> arcs;
    std::vector<std::size_t> from_options;
    std::vector<std::size_t> to_options;
    std::size_t from_path = 0;
    std::size_t to_path = 0;
};

/// An (a_0, a_k)-dipath of the split digraph and a disjoint undirected cycle.
struct DagSolution {
    std::vector<ArcId> path;
    UndirectedCycle cycle;
};

/// A solution right away if the split digraph minus V(P*) has an undirected
/// cycle; else every switch. Throws std::logic_error if two dipaths join the
/// same pair of arcs.
std::variant<DagSolution, std::vector<Switch>> enumerate_switches(const SplitDag& s,
                                                                  const PathSystems& ps);

/// Entry of a tuple: path `index` of the segment, or switch `index` of the
/// list passed along.
struct TupleChoice {
    bool is_switch = false;
    std::size_t index = 0;
};

/// The (a_0, a_k)-dipath made of the chosen paths and switches, nullopt if a
/// switch does not join two distinct paths of its segment. Throws
/// std::invalid_argument on a tuple of the wrong length, an index out of
/// range or a switch from another segment.
std::optional<std::vector<ArcId>> assemble_candidate(const SplitDag& s, const PathSystems& ps,
                                                     const std::vector<Switch>& switches,
                                                     const std::vector<TupleChoice>& pi);

struct Tau1Options {
    std::size_t k_budget = 8;
    /// Off: only tuples of paths are tried.
    bool allow_switches = true;
};

struct Tau1Result {
    SolveResult result;
    /// Set when k exceeds the budget.
    std::string warning;
    std::size_t k = 0;
    /// 0 when decided before enumeration or No; else the phase that hit.
    int phase = 0;
    std::size_t tuples_tried = 0;
    /// Dag-level solution, for inspection.
    std::optional<DagSolution> solution;
    std::optional<SplitDag> split;
    std::optional<PathSystems> paths;
};

/// Exact decision for transversal number 1. Throws std::invalid_argument
/// unless tau.tau is One.
Tau1Result solve_tau1_detailed(const Digraph& d, const TauInfo& tau,
                               const Tau1Options& options = {});

SolveResult solve_tau1(const Digraph& d, const TauInfo& tau, const Tau1Options& options = {});

}  // namespace djc

#endif  // DJC_TAU1_HPP
