#include "djc/hardness.hpp"
#include "djc/oracle.hpp"
#include "djc/tau1.hpp"
#include "djc/transversal.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <deque>

using namespace djc;

namespace {

CnfFormula cnf(std::size_t vars, std::vector<std::array<int, 3>> clauses) {
    CnfFormula f;
    f.vars = vars;
    for (const auto& c : clauses) {
        std::array<Literal, 3> lits;
        for (std::size_t j = 0; j < 3; ++j) {
            lits[j] = Literal{static_cast<std::size_t>(std::abs(c[j]) - 1), c[j] < 0};
        }
        f.clauses.push_back(lits);
    }
    return f;
}

// Proper 2-colouring by BFS, independent of the declared classes.
bool two_colourable(const UGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] != -1) {
            continue;
        }
        colour[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::size_t named(const UGraph& g, const std::string& name) {
    auto it = std::find(g.names.begin(), g.names.end(), name);
    REQUIRE(it != g.names.end());
    return static_cast<std::size_t>(it - g.names.begin());
}

// Evaluates the formula directly.
bool satisfies(const CnfFormula& f, const std::vector<bool>& value) {
    for (const auto& clause : f.clauses) {
        bool any = false;
        for (const Literal& l : clause) {
            any = any || value[l.var] != l.negated;
        }
        if (!any) {
            return false;
        }
    }
    return true;
}

// The edge ids form a cycle of the instance that misses a vertex of every cell.
bool avoids_cells(const BipartiteInstance& b, const std::vector<std::size_t>& edges) {
    Digraph g = Digraph::with_vertices(b.graph.vertex_count());
    for (auto [x, y] : b.graph.edges) {
        g.add_arc(static_cast<VertexId>(x), static_cast<VertexId>(y));
    }
    std::vector<ArcId> arcs(edges.begin(), edges.end());
    if (!is_undirected_cycle(g, arcs)) {
        return false;
    }
    VertexMask on = arc_vertex_mask(g, arcs);
    for (const auto& cell : b.cells) {
        if (std::all_of(cell.begin(), cell.end(), [&](std::size_t v) { return on[v]; })) {
            return false;
        }
    }
    return true;
}

BipartiteInstance random_instance(std::mt19937_64& rng) {
    using djc::testing::uniform;
    BipartiteInstance b;
    const std::size_t us = 1 + uniform(rng, 4);
    for (std::size_t i = 0; i < us; ++i) {
        b.graph.add_vertex("b" + std::to_string(i + 1));
        b.in_v.push_back(false);
    }
    const std::size_t k = 1 + uniform(rng, 3);
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < k; ++i) {
        b.cells.emplace_back();
        for (std::size_t j = 1 + uniform(rng, 3); j > 0; --j) {
            b.cells.back().push_back(
                b.graph.add_vertex("p" + std::to_string(i + 1) + "." + std::to_string(j)));
            b.in_v.push_back(true);
            vs.push_back(b.cells.back().back());
        }
    }
    for (std::size_t e = uniform(rng, 2 * (us + vs.size())); e > 0; --e) {
        b.graph.add_edge(uniform(rng, us), vs[uniform(rng, vs.size())]);
    }
    return b;
}

}  // namespace

TEST_CASE("variable gadgets") {
    VariableGadget w = build_variable_gadget(1, 1);
    CHECK(w.graph.vertex_count() == 4);
    CHECK(w.graph.edges.size() == 4);
    Digraph g = Digraph::with_vertices(4);
    for (auto [a, b] : w.graph.edges) {
        g.add_arc(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    // u y1 v z1 in walk order: u-y1, y1-v, v-z1 (edge 3), z1-u (edge 2)
    CHECK(is_undirected_cycle(g, {0, 1, 3, 2}));

    CHECK(build_variable_gadget(3, 1).graph.vertex_count() == 6);
    for (std::size_t p = 1; p <= 6; ++p) {
        for (std::size_t q = 1; q <= 6; ++q) {
            VariableGadget x = build_variable_gadget(p, q);
            CHECK(x.graph.vertex_count() == p + q + 2);
            CHECK(x.graph.edges.size() == p + q + 2);
            CHECK(x.y.size() == p);
            CHECK(x.z.size() == q);
        }
    }
    CHECK_THROWS_AS(build_variable_gadget(0, 2), std::invalid_argument);
}

TEST_CASE("reduction to the bipartite problem follows the construction") {
    BipartiteInstance one = sat_to_bipartite(cnf(3, {{1, 2, 3}}));
    // joints s, u2, u3, t; per variable y-path of 3 and z-path of 1; z1, z2
    CHECK(one.graph.vertex_count() == 4 + 3 * 4 + 2);
    CHECK(one.clause_cells == 1);
    CHECK(one.variable_cells == 3);
    REQUIRE(one.cells.size() == 5);
    CHECK(one.cells[0] == std::vector<std::size_t>{named(one.graph, "y1.1"), named(one.graph, "y2.1"),
                                                   named(one.graph, "y3.1")});
    CHECK(one.cells[1] == std::vector<std::size_t>{named(one.graph, "y1.3"), named(one.graph, "z1.1")});
    CHECK(one.cells[4] == std::vector<std::size_t>{named(one.graph, "z1"), named(one.graph, "z2")});

    BipartiteInstance two = sat_to_bipartite(cnf(1, {{1, 1, 1}, {-1, -1, -1}}));
    // one gadget W[s, t, 7, 7]
    CHECK(two.graph.vertex_count() == 2 + 7 + 7 + 2);
    REQUIRE(two.cells.size() == 4);
    CHECK(two.cells[0] == std::vector<std::size_t>{named(two.graph, "y1.1"), named(two.graph, "y1.3"),
                                                   named(two.graph, "y1.5")});
    CHECK(two.cells[1] == std::vector<std::size_t>{named(two.graph, "z1.1"), named(two.graph, "z1.3"),
                                                   named(two.graph, "z1.5")});
    CHECK(two.cells[2] == std::vector<std::size_t>{named(two.graph, "y1.7"), named(two.graph, "z1.7")});

    // occurrences are counted in clause order, literals left to right
    BipartiteInstance mixed = sat_to_bipartite(cnf(2, {{2, -1, 2}, {1, -2, -1}}));
    CHECK(mixed.cells[0] == std::vector<std::size_t>{named(mixed.graph, "y2.1"),
                                                     named(mixed.graph, "z1.1"),
                                                     named(mixed.graph, "y2.3")});
    CHECK(mixed.cells[1] == std::vector<std::size_t>{named(mixed.graph, "y1.1"),
                                                     named(mixed.graph, "z2.1"),
                                                     named(mixed.graph, "z1.3")});

    CHECK_THROWS_AS(sat_to_bipartite(cnf(3, {{1, 1, 2}})), std::invalid_argument);
}

TEST_CASE("reduced instances are bipartite with a partition of V") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CnfFormula f = random_3cnf(1 + seed % 5, 1 + seed % 4 + (seed % 5) / 3, seed);
        BipartiteInstance b = sat_to_bipartite(f);
        CHECK(two_colourable(b.graph));
        CHECK_NOTHROW(validate_bipartite(b));
        CHECK(b.cells.size() == f.clauses.size() + f.vars + 1);
    }
}

TEST_CASE("digraph of a bipartite instance") {
    BipartiteInstance none;
    none.graph.add_vertex("b1");
    none.graph.add_vertex("p1.1");
    none.graph.add_vertex("p1.2");
    none.in_v = {false, true, true};
    none.graph.add_edge(0, 1);
    none.graph.add_edge(0, 2);
    none.cells = {{1, 2}};
    Digraph d = bipartite_to_digraph(none);
    CHECK(d.vertex_count() == 5);
    CHECK(oracle_solve(d).kind == OracleOutcome::Kind::No);
    CHECK_FALSE(solve_bipartite_bruteforce(none).has_value());

    BipartiteInstance square;
    for (const char* name : {"b1", "b2", "p1.1", "p1.2", "p2.1", "p2.2"}) {
        square.graph.add_vertex(name);
    }
    square.in_v = {false, false, true, true, true, true};
    square.graph.add_edge(0, 2);
    square.graph.add_edge(2, 1);
    square.graph.add_edge(1, 4);
    square.graph.add_edge(4, 0);
    for (std::size_t spare : {3, 5}) {
        square.graph.add_edge(0, spare);
        square.graph.add_edge(1, spare);
    }
    square.cells = {{2, 3}, {4, 5}};
    Digraph e = bipartite_to_digraph(square);
    CHECK(oracle_solve(e).kind == OracleOutcome::Kind::Yes);
    auto cycle = solve_bipartite_bruteforce(square);
    REQUIRE(cycle.has_value());
    CHECK(avoids_cells(square, *cycle));

    TauInfo t = compute_tau_capped(e);
    CHECK(t.tau == TauClass::One);
    for (const char* hub : {"v0", "v1", "v2"}) {
        VertexId v = *e.find_vertex(hub);
        CHECK(std::find(t.one_transversals.begin(), t.one_transversals.end(), v) !=
              t.one_transversals.end());
    }

    BipartiteInstance bad = square;
    bad.graph.add_edge(0, 1);
    CHECK_THROWS_AS(bipartite_to_digraph(bad), std::invalid_argument);
    bad = square;
    bad.cells = {{2, 3}, {4}};
    CHECK_THROWS_AS(bipartite_to_digraph(bad), std::invalid_argument);
    bad.cells = {{2, 3}, {4, 5}, {}};
    CHECK_THROWS_AS(validate_bipartite(bad), std::invalid_argument);
}

TEST_CASE("bipartite brute force examples") {
    BipartiteInstance b;
    for (const char* name : {"b1", "b2", "p1", "p2"}) {
        b.graph.add_vertex(name);
    }
    b.in_v = {false, false, true, true};
    b.graph.add_edge(0, 2);
    b.graph.add_edge(2, 1);
    b.graph.add_edge(1, 3);
    b.graph.add_edge(3, 0);
    b.cells = {{2}, {3}};
    CHECK_FALSE(solve_bipartite_bruteforce(b).has_value());

    // two spare vertices off the 4-cycle make up the cells
    BipartiteInstance c = b;
    c.graph.add_vertex("p3");
    c.graph.add_vertex("p4");
    c.in_v.push_back(true);
    c.in_v.push_back(true);
    c.graph.add_edge(0, 4);
    c.cells = {{2, 3, 4}, {5}};
    // every choice avoids p4; avoiding p3 leaves the 4-cycle
    auto cycle = solve_bipartite_bruteforce(c);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 4);

    CHECK_THROWS_AS(solve_bipartite_bruteforce(c, 2), std::length_error);
}

TEST_CASE("bipartite brute force matches the oracle on the digraph") {
    std::mt19937_64 rng(3);
    std::size_t yes = 0;
    for (int round = 0; round < 200; ++round) {
        BipartiteInstance b = random_instance(rng);
        auto cycle = solve_bipartite_bruteforce(b);
        Digraph d = bipartite_to_digraph(b);
        OracleOutcome o = oracle_solve(d);
        CHECK(cycle.has_value() == (o.kind == OracleOutcome::Kind::Yes));
        if (cycle) {
            ++yes;
            CHECK(avoids_cells(b, *cycle));
        }
        CHECK(compute_tau_capped(d).tau == TauClass::One);
    }
    CHECK(yes > 20);
    CHECK(yes < 180);
}

TEST_CASE("sat brute force") {
    auto one = sat_bruteforce(cnf(1, {{1, 1, 1}}));
    REQUIRE(one.has_value());
    CHECK((*one)[0]);
    CHECK_FALSE(sat_bruteforce(cnf(1, {{1, 1, 1}, {-1, -1, -1}})).has_value());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CnfFormula f = random_3cnf(4, 2 + seed % 7, seed, seed % 2 == 0);
        auto a = sat_bruteforce(f);
        bool any = false;
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            any = any || satisfies(f, {bool(mask & 1), bool(mask & 2), bool(mask & 4), bool(mask & 8)});
        }
        CHECK(a.has_value() == any);
        if (a) {
            CHECK(satisfies(f, *a));
        }
    }
    CnfFormula big;
    big.vars = 21;
    CHECK_THROWS_AS(sat_bruteforce(big), std::length_error);
}

TEST_CASE("reduction chain agrees end to end") {
    std::size_t sat = 0;
    std::size_t unsat = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t vars = 1 + seed % 4;
        const std::size_t clauses = std::max<std::size_t>(1 + (seed / 4) % 4, (vars + 2) / 3);
        CnfFormula f = random_3cnf(vars, clauses, seed, seed % 2 == 0);
        const bool satisfiable = sat_bruteforce(f).has_value();
        BipartiteInstance b = sat_to_bipartite(f);
        auto cycle = solve_bipartite_bruteforce(b);
        Digraph d = bipartite_to_digraph(b);
        OracleOutcome o = oracle_solve(d);
        TauInfo t = compute_tau_capped(d);
        INFO(format_dimacs(f));
        CHECK(satisfiable == cycle.has_value());
        CHECK(satisfiable == (o.kind == OracleOutcome::Kind::Yes));
        CHECK(t.tau == TauClass::One);
        SolveResult r = solve_tau1(d, t, Tau1Options{64, true});
        CHECK((r.kind == SolveResult::Kind::Yes) == satisfiable);
        if (r.kind == SolveResult::Kind::Yes) {
            CHECK(verify_certificate(d, *r.certificate));
        }
        (satisfiable ? sat : unsat) += 1;
    }
    MESSAGE("satisfiable " << sat << ", unsatisfiable " << unsat);
    CHECK(sat > 30);
    CHECK(unsat > 30);
}

TEST_CASE("dimacs") {
    CnfFormula f = parse_dimacs("c example\np cnf 3 2\n1 -2 3 0\n-1 2\n -3 0\n");
    CHECK(f.vars == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0][1].var == 1);
    CHECK(f.clauses[0][1].negated);
    CHECK(f.clauses[1][2].var == 2);
    CnfFormula again = parse_dimacs(format_dimacs(f));
    CHECK(format_dimacs(again) == format_dimacs(f));

    CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 x 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 1\n"), ParseError);
    try {
        parse_dimacs("p cnf 2 1\n\n1 2 4 0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    CnfFormula r = random_3cnf(4, 2, 9);
    std::vector<bool> seen(4, false);
    for (const auto& c : r.clauses) {
        for (const Literal& l : c) {
            seen[l.var] = true;
        }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    CHECK(format_dimacs(random_3cnf(4, 2, 9)) == format_dimacs(r));
    CHECK_THROWS_AS(random_3cnf(7, 2, 1), std::invalid_argument);
}
