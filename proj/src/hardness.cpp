#include "djc/hardness.hpp"

#include "djc/generators.hpp"
#include "djc/traversal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace djc {

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<Literal> pending;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string word;
        if (!(words >> word) || word == "c") {
            continue;
        }
        if (word == "%") {
            break;
        }
        if (word == "p") {
            std::string kind;
            long long n = -1;
            long long m = -1;
            if (header || !(words >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0 ||
                (words >> word)) {
                throw ParseError(line_no, "bad header, expected `p cnf VARS CLAUSES`");
            }
            header = true;
            f.vars = static_cast<std::size_t>(n);
            declared = static_cast<std::size_t>(m);
            continue;
        }
        if (!header) {
            throw ParseError(line_no, "clause before the `p cnf` header");
        }
        std::istringstream lits(line);
        long long lit = 0;
        while (lits >> lit) {
            if (lit == 0) {
                if (pending.size() != 3) {
                    throw ParseError(line_no, "clause with " + std::to_string(pending.size()) +
                                                  " literals, expected 3");
                }
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (var > f.vars) {
                throw ParseError(line_no, "literal " + std::to_string(lit) + " out of range");
            }
            pending.push_back(Literal{var - 1, lit < 0});
        }
        if (!lits.eof()) {
            throw ParseError(line_no, "expected integer literals");
        }
    }
    if (!header) {
        throw ParseError(line_no, "missing `p cnf` header");
    }
    if (!pending.empty()) {
        throw ParseError(line_no, "last clause is not closed by 0");
    }
    if (f.clauses.size() != declared) {
        throw ParseError(line_no, "header declares " + std::to_string(declared) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
    }
    return f;
}

std::string format_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (const Literal& l : clause) {
            out += (l.negated ? "-" : "") + std::to_string(l.var + 1) + " ";
        }
        out += "0\n";
    }
    return out;
}

CnfFormula random_3cnf(std::size_t vars, std::size_t clauses, std::uint64_t seed,
                       bool aligned) {
    if (vars == 0 || 3 * clauses < vars) {
        throw std::invalid_argument("random_3cnf needs 0 < vars <= 3 * clauses");
    }
    Rng rng(seed);
    std::vector<std::size_t> slots(3 * clauses);
    std::iota(slots.begin(), slots.end(), 0);
    for (std::size_t i = slots.size(); i > 1; --i) {
        std::swap(slots[i - 1], slots[pick(rng, 0, i - 1)]);
    }
    std::vector<std::size_t> var_of(3 * clauses);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        var_of[slots[i]] = i < vars ? i : pick(rng, 0, vars - 1);
    }
    CnfFormula f;
    f.vars = vars;
    for (std::size_t c = 0; c < clauses; ++c) {
        std::array<Literal, 3> clause;
        const bool sign = pick(rng, 0, 1) == 1;
        for (std::size_t j = 0; j < 3; ++j) {
            clause[j] = Literal{var_of[3 * c + j], aligned ? sign : pick(rng, 0, 1) == 1};
        }
        f.clauses.push_back(clause);
    }
    return f;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f) {
    if (f.vars > 20) {
        throw std::length_error("sat_bruteforce handles at most 20 variables");
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.vars); ++mask) {
        std::vector<bool> value(f.vars);
        for (std::size_t i = 0; i < f.vars; ++i) {
            value[i] = (mask >> (f.vars - 1 - i)) & 1;
        }
        const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
            return std::any_of(clause.begin(), clause.end(),
                               [&](const Literal& l) { return value.at(l.var) != l.negated; });
        });
        if (ok) {
            return value;
        }
    }
    return std::nullopt;
}

VariableGadget build_variable_gadget(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) {
        throw std::invalid_argument("a variable gadget needs two nonempty paths");
    }
    VariableGadget w;
    w.u = w.graph.add_vertex("u");
    w.v = w.graph.add_vertex("v");
    auto side = [&](char tag, std::size_t len, std::vector<std::size_t>& out) {
        std::size_t prev = w.u;
        for (std::size_t i = 1; i <= len; ++i) {
            out.push_back(w.graph.add_vertex(std::string(1, tag) + std::to_string(i)));
            w.graph.add_edge(prev, out.back());
            prev = out.back();
        }
        w.graph.add_edge(prev, w.v);
    };
    side('y', p, w.y);
    side('z', q, w.z);
    return w;
}

void validate_bipartite(const BipartiteInstance& b) {
    const std::size_t n = b.graph.vertex_count();
    if (b.in_v.size() != n) {
        throw std::invalid_argument("class flags do not match the vertex count");
    }
    for (auto [x, y] : b.graph.edges) {
        if (x >= n || y >= n || b.in_v[x] == b.in_v[y]) {
            throw std::invalid_argument("an edge does not join U and V");
        }
    }
    std::vector<int> seen(n, 0);
    for (const auto& cell : b.cells) {
        if (cell.empty()) {
            throw std::invalid_argument("empty cell");
        }
        for (std::size_t v : cell) {
            if (v >= n || !b.in_v[v] || seen[v]++) {
                throw std::invalid_argument("cells are not a partition of V");
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (b.in_v[v] && !seen[v]) {
            throw std::invalid_argument("a vertex of V lies in no cell");
        }
    }
}

BipartiteInstance sat_to_bipartite(const CnfFormula& f) {
    const std::size_t n = f.vars;
    std::vector<std::size_t> pos(n, 0);
    std::vector<std::size_t> neg(n, 0);
    for (const auto& clause : f.clauses) {
        for (const Literal& l : clause) {
            if (l.var >= n) {
                throw std::invalid_argument("literal variable out of range");
            }
            ++(l.negated ? neg : pos)[l.var];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (pos[i] + neg[i] == 0) {
            throw std::invalid_argument("variable " + std::to_string(i + 1) + " never occurs");
        }
    }
    if (n == 0) {
        throw std::invalid_argument("formula without variables");
    }

    BipartiteInstance b;
    UGraph& g = b.graph;
    auto vertex = [&](std::string name, bool v_side) {
        b.in_v.push_back(v_side);
        return g.add_vertex(std::move(name));
    };
    // y[i][j-1] is y_{i,j}; the paths have odd length 2p+1 inner vertices,
    // so odd positions are in V.
    std::vector<std::vector<std::size_t>> y(n);
    std::vector<std::vector<std::size_t>> z(n);
    const std::size_t s = vertex("s", false);
    std::size_t joint = s;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = i + 1 == n ? vertex("t", false) : vertex("u" + std::to_string(i + 2), false);
        auto side = [&](char tag, std::size_t len, std::vector<std::size_t>& out) {
            std::size_t prev = joint;
            for (std::size_t j = 1; j <= len; ++j) {
                out.push_back(vertex(std::string(1, tag) + std::to_string(i + 1) + "." + std::to_string(j),
                                     j % 2 == 1));
                g.add_edge(prev, out.back());
                prev = out.back();
            }
            g.add_edge(prev, next);
        };
        side('y', 2 * pos[i] + 1, y[i]);
        side('z', 2 * neg[i] + 1, z[i]);
        joint = next;
    }
    const std::size_t t = joint;

    std::vector<std::size_t> pos_used(n, 0);
    std::vector<std::size_t> neg_used(n, 0);
    for (const auto& clause : f.clauses) {
        std::vector<std::size_t> cell;
        for (const Literal& l : clause) {
            const std::size_t r = ++(l.negated ? neg_used : pos_used)[l.var];
            cell.push_back((l.negated ? z : y)[l.var][2 * r - 2]);
        }
        b.cells.push_back(std::move(cell));
    }
    b.clause_cells = b.cells.size();
    for (std::size_t i = 0; i < n; ++i) {
        b.cells.push_back({y[i].back(), z[i].back()});
    }
    b.variable_cells = n;
    const std::size_t z1 = vertex("z1", true);
    const std::size_t z2 = vertex("z2", true);
    g.add_edge(s, z1);
    g.add_edge(s, z2);
    g.add_edge(z1, t);
    g.add_edge(z2, t);
    b.cells.push_back({z1, z2});
    validate_bipartite(b);
    return b;
}

Digraph bipartite_to_digraph(const BipartiteInstance& b) {
    validate_bipartite(b);
    Digraph d;
    for (const std::string& name : b.graph.names) {
        d.add_vertex(name);
    }
    std::vector<VertexId> hub;
    for (std::size_t i = 0; i <= b.cells.size(); ++i) {
        std::string name = "v" + std::to_string(i);
        while (d.find_vertex(name)) {
            name += "'";
        }
        hub.push_back(d.add_vertex(name));
    }
    for (std::size_t i = 0; i < b.cells.size(); ++i) {
        for (std::size_t p : b.cells[i]) {
            d.add_arc(hub[i], static_cast<VertexId>(p));
            d.add_arc(static_cast<VertexId>(p), hub[i + 1]);
        }
    }
    for (auto [x, y] : b.graph.edges) {
        const auto from = static_cast<VertexId>(b.in_v[x] ? y : x);
        const auto to = static_cast<VertexId>(b.in_v[x] ? x : y);
        d.add_arc(from, to);
    }
    d.add_arc(hub.back(), hub.front());
    return d;
}

std::optional<std::vector<std::size_t>> solve_bipartite_bruteforce(const BipartiteInstance& b,
                                                                   std::size_t max_choices) {
    validate_bipartite(b);
    std::size_t choices = 1;
    for (const auto& cell : b.cells) {
        if (choices > max_choices / cell.size()) {
            throw std::length_error("too many avoided-vertex choices for brute force");
        }
        choices *= cell.size();
    }
    Digraph g = Digraph::with_vertices(b.graph.vertex_count());
    for (auto [x, y] : b.graph.edges) {
        g.add_arc(static_cast<VertexId>(x), static_cast<VertexId>(y));
    }
    std::vector<std::size_t> at(b.cells.size(), 0);
    while (true) {
        VertexMask avoided(g.vertex_count(), false);
        for (std::size_t i = 0; i < at.size(); ++i) {
            avoided[b.cells[i][at[i]]] = true;
        }
        if (auto cycle = find_undirected_cycle(g, avoided)) {
            return std::vector<std::size_t>(cycle->arcs.begin(), cycle->arcs.end());
        }
        std::size_t i = at.size();
        while (i > 0 && ++at[i - 1] == b.cells[i - 1].size()) {
            at[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            return std::nullopt;
        }
    }
}

}  // namespace djc
