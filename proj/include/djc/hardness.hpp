#ifndef DJC_HARDNESS_HPP
#define DJC_HARDNESS_HPP

#include "djc/digraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace djc {

struct Literal {
    std::size_t var = 0;  // 0-based
    bool negated = false;
};

/// 3-CNF; repeated literals within a clause are allowed.
struct CnfFormula {
    std::size_t vars = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

/// DIMACS: `c` comments, a `p cnf VARS CLAUSES` header, then clauses of
/// exactly three nonzero literals each closed by 0. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

/// Every variable occurs at least once. With `aligned`, the literals of a
/// clause share one random sign, which makes small unsatisfiable formulas
/// common. Throws std::invalid_argument if 3 * clauses < vars or vars == 0.
CnfFormula random_3cnf(std::size_t vars, std::size_t clauses, std::uint64_t seed,
                       bool aligned = false);

/// Lexicographically first satisfying assignment (false < true, variable 0
/// most significant). Throws std::length_error above 20 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f);

/// Undirected multigraph with named vertices.
struct UGraph {
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t add_vertex(std::string name) {
        names.push_back(std::move(name));
        return names.size() - 1;
    }
    std::size_t add_edge(std::size_t a, std::size_t b) {
        edges.emplace_back(a, b);
        return edges.size() - 1;
    }
    std::size_t vertex_count() const { return names.size(); }
};

/// Two u-v paths, u y_1 .. y_p v and u z_1 .. z_q v.
struct VariableGadget {
    UGraph graph;
    std::size_t u = 0;
    std::size_t v = 0;
    std::vector<std::size_t> y;
    std::vector<std::size_t> z;
};

/// Throws std::invalid_argument if p or q is zero.
VariableGadget build_variable_gadget(std::size_t p, std::size_t q);

/// Bipartite graph with classes U and V and a partition of V into cells;
/// the task is a cycle avoiding a vertex of every cell.
struct BipartiteInstance {
    UGraph graph;
    std::vector<bool> in_v;
    std::vector<std::vector<std::size_t>> cells;
    /// From sat_to_bipartite: cells are the clause cells, then one cell
    /// {y_{i,2p_i+1}, z_{i,2q_i+1}} per variable, then {z1, z2}.
    std::size_t clause_cells = 0;
    std::size_t variable_cells = 0;
};

/// Throws std::invalid_argument unless every edge joins U and V and the
/// cells partition V into nonempty sets.
void validate_bipartite(const BipartiteInstance& b);

/// Gadgets W[u_i, v_i, 2p_i+1, 2q_i+1] chained at v_i = u_{i+1}, clause
/// vertices at y_{i,2r-1} / z_{i,2h-1} for the r-th positive (h-th negative)
/// occurrence in clause order, closed by s z1 t and s z2 t. Vertex names:
/// s, t, u2 .. un for the joints, yI.J, zI.J (1-based) and z1, z2. Throws
/// std::invalid_argument for a variable that never occurs.
BipartiteInstance sat_to_bipartite(const CnfFormula& f);

/// Hubs v0 .. vk (renamed with primes on a clash), v_{i-1} -> p -> v_i for
/// p in cell i, b -> p for each edge, and v_k -> v_0. Arcs: hub arcs cell by
/// cell, then one per edge, then v_k -> v_0. Validates first.
Digraph bipartite_to_digraph(const BipartiteInstance& b);

/// A cycle (edge ids in cyclic order) avoiding a vertex of every cell, by
/// trying every choice of avoided vertices. Throws std::length_error when
/// the number of choices exceeds `max_choices`.
std::optional<std::vector<std::size_t>> solve_bipartite_bruteforce(
    const BipartiteInstance& b, std::size_t max_choices = 1'000'000);

}  // namespace djc

#endif  // DJC_HARDNESS_HPP
