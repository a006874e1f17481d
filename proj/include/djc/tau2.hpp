#ifndef DJC_TAU2_HPP
#define DJC_TAU2_HPP

#include "djc/digraph.hpp"
#include "djc/result.hpp"
#include "djc/structures.hpp"
#include "djc/transversal.hpp"

#include <variant>
#include <vector>

namespace djc {

/// The nontrivial strong component together with one vertex per connected
/// component of the rest, every such vertex having only arcs into the core.
struct ExternalModel {
    /// Core vertices 0 .. core_vertices-1 and core arcs 0 .. core_arcs-1
    /// come first, in the order of the original digraph.
    Digraph graph;
    std::size_t core_vertices = 0;
    std::size_t core_arcs = 0;
    /// `graph` restricted to the core; ids coincide.
    Digraph core;
    /// Original vertex of each core vertex.
    std::vector<VertexId> core_origin;
    /// Original vertices behind each external vertex (index = id - core_vertices).
    std::vector<std::vector<VertexId>> external_members;
    /// Original arc of each model arc.
    std::vector<ArcId> arc_origin;
    /// The digraph the model was built from, for lifting certificates.
    Digraph original;

    bool is_external(VertexId v) const { return v >= core_vertices; }
    std::size_t external_count() const { return external_members.size(); }
};

/// Builds the external model of `d` for the given core vertex set, or
/// answers Yes outright when the rest of the digraph already supplies an
/// undirected cycle, when an external vertex has parallel arcs to one core
/// vertex, or when a multiarc of the core is not a transversal. Throws
/// std::invalid_argument if `core` does not induce a strong component.
std::variant<Certificate, ExternalModel> preprocess_external(const Digraph& d,
                                                             const VertexMask& core);

/// Maps a certificate on the model back to the original digraph.
Certificate lift_certificate(const ExternalModel& m, const Certificate& c);

/// The pin condition read off the vault structure: u on some wall P_i at
/// or after the last head of a link from P_{i-1}, v on P_{i+1} at or before
/// the first tail of a link to P_{i+2}, and no link from before u to after
/// v. `dec` describes `m.core`. Throws std::invalid_argument unless u and
/// v are distinct core neighbours of the external `alpha`.
bool is_pin(const ExternalModel& m, const VaultDecomposition& dec, VertexId alpha, VertexId u,
            VertexId v);

/// The certificate built from the vault structure for a pair {u, v} of
/// neighbours of `alpha` that is not a pin, lifted to the original digraph;
/// nullopt if the construction does not verify.
std::optional<Certificate> vault_clasp_certificate(const ExternalModel& m,
                                                   const VaultDecomposition& dec,
                                                   VertexId alpha, VertexId u, VertexId v);

/// Tries every external vertex and pair of its neighbours; the first pair
/// that is not a transversal of the core yields a certificate. Results of
/// the case solvers carry certificates for the original digraph.
SolveResult solve_vault_case(const ExternalModel& m, const VaultDecomposition& dec);

/// Checks the undirected graph left by each dicycle of the core.
SolveResult solve_multiwheel_case(const ExternalModel& m, const MultiwheelDecomposition& dec);
SolveResult solve_trivault_case(const ExternalModel& m, const TrivaultDecomposition& dec);

/// Decides a digraph with transversal number 2. Throws
/// std::invalid_argument if tau.tau is not Two.
SolveResult solve_tau2(const Digraph& d, const TauInfo& tau, std::size_t oracle_cap);

}  // namespace djc

#endif  // DJC_TAU2_HPP
