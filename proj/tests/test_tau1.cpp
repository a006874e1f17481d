#include "djc/generators.hpp"
#include "djc/oracle.hpp"
#include "djc/tau1.hpp"
#include "djc/transversal.hpp"
#include "djc/traversal.hpp"

#include "doctest.h"
#include "instances.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>

using namespace djc;
using djc::testing::from_arcs;

namespace {

TauInfo tau_of(const Digraph& d) { return compute_tau_capped(d); }

// Hand-built split digraph with the given terminals, for path system tests.
SplitDag as_split(const Digraph& g, std::vector<VertexId> terminals) {
    SplitDag s;
    s.dag = g;
    s.terminals = std::move(terminals);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        s.vertex_origin.push_back(v);
    }
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        s.arc_origin.push_back(a);
    }
    return s;
}

// Largest family of openly disjoint s-t paths by trying every subset of
// the s-t paths; parallel direct arcs count once.
std::size_t brute_max_paths(const Digraph& g, VertexId s, VertexId t) {
    std::vector<std::vector<VertexId>> inner;
    bool direct = false;
    std::vector<VertexId> stack;
    std::vector<bool> on(g.vertex_count(), false);
    std::function<void(VertexId)> walk = [&](VertexId v) {
        for (ArcId a : g.out_arcs(v)) {
            VertexId w = g.arc(a).head;
            if (w == t) {
                if (stack.empty()) {
                    direct = true;
                } else {
                    inner.push_back(stack);
                }
            } else if (!on[w] && w != s) {
                on[w] = true;
                stack.push_back(w);
                walk(w);
                stack.pop_back();
                on[w] = false;
            }
        }
    };
    walk(s);
    std::size_t best = 0;
    std::function<void(std::size_t, std::vector<bool>&, std::size_t)> pack =
        [&](std::size_t i, std::vector<bool>& used, std::size_t count) {
            best = std::max(best, count);
            if (i == inner.size() || count + (inner.size() - i) <= best) {
                return;
            }
            bool fits = true;
            for (VertexId v : inner[i]) {
                fits = fits && !used[v];
            }
            if (fits) {
                for (VertexId v : inner[i]) {
                    used[v] = true;
                }
                pack(i + 1, used, count + 1);
                for (VertexId v : inner[i]) {
                    used[v] = false;
                }
            }
            pack(i + 1, used, count);
        };
    std::vector<bool> used(g.vertex_count(), false);
    pack(0, used, 0);
    return best + (direct ? 1 : 0);
}

bool is_dipath(const Digraph& g, const std::vector<ArcId>& arcs, VertexId from, VertexId to) {
    std::vector<bool> seen(g.vertex_count(), false);
    VertexId at = from;
    seen[at] = true;
    for (ArcId a : arcs) {
        if (g.arc(a).tail != at || seen[g.arc(a).head]) {
            return false;
        }
        at = g.arc(a).head;
        seen[at] = true;
    }
    return at == to;
}

// Every path of every system meets the solution's dipath in path order.
bool claim_one_holds(const Tau1Result& r) {
    const Digraph& g = r.split->dag;
    std::vector<std::size_t> order(g.vertex_count(), SIZE_MAX);
    std::size_t step = 0;
    order[g.arc(r.solution->path.front()).tail] = step++;
    for (ArcId a : r.solution->path) {
        order[g.arc(a).head] = step++;
    }
    for (const auto& system : r.paths->systems) {
        for (const DiPath& p : system) {
            std::size_t last = 0;
            for (VertexId v : p.vertices) {
                if (order[v] == SIZE_MAX) {
                    continue;
                }
                if (order[v] < last) {
                    return false;
                }
                last = order[v];
            }
        }
    }
    return true;
}

// Segments of two or three short paths with random arcs and small handles
// between inner vertices, all consistent with one order of the vertices
// other than the split vertex 0: instances where the answer often hinges
// on a switch.
Digraph switch_rich(std::mt19937_64& rng) {
    using djc::testing::uniform;
    Digraph d;
    std::vector<double> rank;
    auto vertex = [&](double r) {
        rank.push_back(r + 1e-6 * static_cast<double>(d.vertex_count()));
        return d.add_vertex("v" + std::to_string(d.vertex_count()));
    };
    const VertexId a = vertex(0);
    const std::size_t segments = 1 + uniform(rng, 2);
    VertexId start = a;
    for (std::size_t x = 0; x < segments; ++x) {
        const double base = static_cast<double>(x + 1);
        const VertexId end = x + 1 == segments ? a : vertex(base + 1);
        std::vector<VertexId> inner;
        std::vector<std::vector<VertexId>> paths;
        for (std::size_t p = uniform(rng, 4) == 0 ? 3 : 2; p > 0; --p) {
            VertexId prev = start;
            const std::size_t len = 1 + uniform(rng, 3);
            paths.emplace_back();
            for (std::size_t i = 0; i < len; ++i) {
                VertexId v = vertex(base + static_cast<double>(i + 1) / static_cast<double>(len + 1));
                inner.push_back(v);
                paths.back().push_back(v);
                d.add_arc(prev, v);
                prev = v;
            }
            d.add_arc(prev, end);
        }
        auto forward = [&](VertexId u, VertexId w) {
            if (rank[u] < rank[w]) {
                d.add_arc(u, w);
            } else {
                d.add_arc(w, u);
            }
        };
        const auto& p1 = paths[0];
        const auto& p2 = paths[1];
        if (uniform(rng, 2) == 0 && p1.size() >= 2 && p2.size() >= 2) {
            // jump from early on P1 to late on P2, and tie late P1 to early P2
            const std::size_t i = uniform(rng, p1.size() - 1);
            const std::size_t j = 1 + uniform(rng, p2.size() - 1);
            forward(p1[i], p2[j]);
            const VertexId u = p1[i + 1 + uniform(rng, p1.size() - i - 1)];
            const VertexId w = p2[uniform(rng, j)];
            for (int m = 0; m < 2; ++m) {
                VertexId hub = vertex(base + static_cast<double>(uniform(rng, 1000)) / 1000);
                forward(u, hub);
                forward(hub, w);
            }
        }
        for (std::size_t c = uniform(rng, 2); c > 0; --c) {
            VertexId u = inner[uniform(rng, inner.size())];
            VertexId w = inner[uniform(rng, inner.size())];
            if (u != w) {
                forward(u, w);
            }
        }
        for (std::size_t h = uniform(rng, 2); h > 0; --h) {
            VertexId u = inner[uniform(rng, inner.size())];
            VertexId w = inner[uniform(rng, inner.size())];
            if (u == w) {
                continue;
            }
            for (std::size_t m = uniform(rng, 3); m > 0; --m) {
                VertexId hub = vertex(base + static_cast<double>(uniform(rng, 1000)) / 1000);
                forward(u, hub);
                forward(hub, w);
            }
        }
        start = end;
    }
    return d;
}

}  // namespace

TEST_CASE("preprocessing drops arcs between transversal and outside vertices") {
    // digon 0<->1 plus 0->2
    Digraph d = from_arcs(3, {{0, 1}, {1, 0}, {0, 2}});
    DerivedGraph p = preprocess_tau1(d, tau_of(d));
    CHECK(p.graph.vertex_count() == 2);
    CHECK(p.graph.arc_count() == 2);

    Digraph e = from_arcs(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {2, 4}});
    DerivedGraph q = preprocess_tau1(e, tau_of(e));
    CHECK(q.graph.vertex_count() == 5);
    CHECK(q.graph.arc_count() == 5);

    // alpha = 2 touches only transversal vertices; 3 hangs off alpha
    Digraph f = from_arcs(4, {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {3, 2}});
    DerivedGraph r = preprocess_tau1(f, tau_of(f));
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.arc_count() == 2);

    CHECK_THROWS_AS(preprocess_tau1(djc::testing::two_digons(), tau_of(djc::testing::two_digons())),
                    std::invalid_argument);
}

TEST_CASE("split digraph examples") {
    Digraph digon = djc::testing::digon();
    SplitDag s = split_transversal(digon, tau_of(digon));
    CHECK(s.segments() == 2);
    CHECK(s.terminals == std::vector<VertexId>{0, 1, 2});
    CHECK(s.vertex_origin[2] == 0);
    CHECK(topological_order(s.dag).has_value());

    Digraph loop = from_arcs(1, {{0, 0}});
    SplitDag l = split_transversal(loop, tau_of(loop));
    CHECK(l.segments() == 1);
    CHECK(l.dag.arc_count() == 1);
    CHECK(l.dag.arc(0).tail == 0);
    CHECK(l.dag.arc(0).head == 1);

    Digraph shared = from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});
    TauInfo t = tau_of(shared);
    REQUIRE(t.one_transversals == std::vector<VertexId>{0});
    SplitDag sh = split_transversal(shared, t);
    CHECK(sh.segments() == 1);
    PathSystems ps = build_path_systems(sh);
    CHECK(ps.size(0) == 2);
    CHECK(ps.cuts[0] == std::vector<VertexId>{1, 2});
    CHECK_FALSE(ps.direct[0]);
}

TEST_CASE("path systems on hand-built segments") {
    // single path s -> x -> t
    Digraph p = from_arcs(3, {{0, 1}, {1, 2}});
    PathSystems one = build_path_systems(as_split(p, {0, 2}));
    CHECK(one.size(0) == 1);
    CHECK(one.cuts[0] == std::vector<VertexId>{1});

    // two routes through a cut vertex m = 3
    Digraph cut = from_arcs(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
    PathSystems c = build_path_systems(as_split(cut, {0, 6}));
    CHECK(c.size(0) == 1);
    CHECK(c.cuts[0] == std::vector<VertexId>{3});

    // direct arcs count once
    Digraph direct = from_arcs(3, {{0, 2}, {0, 2}, {0, 1}, {1, 2}});
    PathSystems dp = build_path_systems(as_split(direct, {0, 2}));
    CHECK(dp.size(0) == 2);
    CHECK(dp.direct[0]);
    CHECK(dp.cuts[0] == std::vector<VertexId>{1});
}

TEST_CASE("path systems are maximum on random segments") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 3 + djc::testing::uniform(rng, 8);
        Digraph g = djc::testing::random_dag(rng, n, 0.45);
        // relabel so that 0 .. n-1 is a topological order with s = 0, t = n-1
        auto order = *topological_order(g);
        std::vector<VertexId> pos(n);
        for (std::size_t i = 0; i < n; ++i) {
            pos[order[i]] = static_cast<VertexId>(i);
        }
        Digraph h = Digraph::with_vertices(n);
        for (const Arc& a : g.arcs()) {
            h.add_arc(pos[a.tail], pos[a.head]);
        }
        if (djc::testing::uniform(rng, 3) == 0) {
            h.add_arc(0, static_cast<VertexId>(n - 1));
        }
        const VertexId t = static_cast<VertexId>(n - 1);
        if (!reachable_from(h, 0)[t]) {
            continue;
        }
        SplitDag s = as_split(h, {0, t});
        PathSystems ps = build_path_systems(s);
        CHECK(ps.size(0) == brute_max_paths(h, 0, t));
        CHECK(ps.cuts[0].size() + (ps.direct[0] ? 1 : 0) == ps.size(0));
        std::vector<int> hits(n, 0);
        for (const DiPath& p : ps.systems[0]) {
            CHECK(is_dipath(h, p.arcs, 0, t));
            for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
                ++hits[p.vertices[i]];
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            CHECK(hits[v] <= 1);
        }
        // the cut meets every s-t path that is not a direct arc
        VertexMask removed(n, false);
        for (VertexId v : ps.cuts[0]) {
            removed[v] = true;
        }
        Digraph no_direct = Digraph::with_vertices(n);
        for (const Arc& a : h.arcs()) {
            if (!(a.tail == 0 && a.head == t)) {
                no_direct.add_arc(a.tail, a.head);
            }
        }
        CHECK_FALSE(reachable_from(no_direct, 0, removed)[t]);
    }
}

TEST_CASE("switch enumeration examples") {
    // a = 0 with paths 0 -> 1 -> 2 -> 0 and 0 -> 3 -> 4 -> 0
    Digraph base = from_arcs(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    {
        SplitDag s = split_transversal(base, tau_of(base));
        PathSystems ps = build_path_systems(s);
        auto sw = enumerate_switches(s, ps);
        REQUIRE(std::holds_alternative<std::vector<Switch>>(sw));
        CHECK(std::get<std::vector<Switch>>(sw).empty());
    }
    {
        Digraph d = base;
        d.add_arc(1, 4);
        SplitDag s = split_transversal(d, tau_of(d));
        PathSystems ps = build_path_systems(s);
        auto sw = enumerate_switches(s, ps);
        REQUIRE(std::holds_alternative<std::vector<Switch>>(sw));
        const auto& list = std::get<std::vector<Switch>>(sw);
        REQUIRE(list.size() == 1);
        CHECK(list[0].from == 1);
        CHECK(list[0].to == 4);
        CHECK(list[0].arcs == std::vector<ArcId>{6});
        CHECK(list[0].from_path != list[0].to_path);

        auto c = assemble_candidate(s, ps, list, {TupleChoice{true, 0}});
        REQUIRE(c.has_value());
        CHECK(is_dipath(s.dag, *c, s.terminals.front(), s.terminals.back()));
        CHECK(arc_vertex_mask(s.dag, *c)[1]);
        CHECK(arc_vertex_mask(s.dag, *c)[4]);
        CHECK_FALSE(arc_vertex_mask(s.dag, *c)[2]);

        auto plain = assemble_candidate(s, ps, list, {TupleChoice{false, 1}});
        REQUIRE(plain.has_value());
        CHECK(*plain == ps.systems[0][1].arcs);

        std::vector<Switch> same = list;
        same[0].to_path = same[0].from_path;
        CHECK_FALSE(assemble_candidate(s, ps, same, {TupleChoice{true, 0}}).has_value());
        CHECK_THROWS_AS(assemble_candidate(s, ps, list, {}), std::invalid_argument);
        CHECK_THROWS_AS(assemble_candidate(s, ps, list, {TupleChoice{false, 7}}),
                        std::invalid_argument);
    }
    {
        // an undirected triangle off P*, hanging from vertex 1
        Digraph d = base;
        VertexId x = d.add_vertex("x");
        VertexId y = d.add_vertex("y");
        VertexId z = d.add_vertex("z");
        d.add_arc(x, y);
        d.add_arc(y, z);
        d.add_arc(x, z);
        d.add_arc(1, x);
        SplitDag s = split_transversal(d, tau_of(d));
        PathSystems ps = build_path_systems(s);
        auto sw = enumerate_switches(s, ps);
        REQUIRE(std::holds_alternative<DagSolution>(sw));
        CHECK(std::get<DagSolution>(sw).cycle.arcs.size() == 3);
    }
}

TEST_CASE("solve examples") {
    Digraph yes = from_arcs(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {2, 4}});
    Tau1Result r = solve_tau1_detailed(yes, tau_of(yes));
    REQUIRE(r.result.kind == SolveResult::Kind::Yes);
    CHECK(r.phase == 1);
    CHECK(verify_certificate(yes, *r.result.certificate));

    CHECK(solve_tau1(djc::testing::digon(), tau_of(djc::testing::digon())).kind ==
          SolveResult::Kind::No);
    Digraph shared = from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});
    CHECK(solve_tau1(shared, tau_of(shared)).kind == SolveResult::Kind::No);
    CHECK(oracle_solve(shared).kind == OracleOutcome::Kind::No);

    CHECK_THROWS_AS(solve_tau1(djc::testing::k3d(), tau_of(djc::testing::k3d())),
                    std::invalid_argument);
}

TEST_CASE("a solution that needs a switch") {
    // Segment paths 0->1->2->0 and 0->3->4->0 with switch 1 -> 4; the
    // undirected cycle 2-5-3-6-2 survives only if C leaves both 2 and 3,
    // which no single path does.
    Digraph d = from_arcs(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {1, 4}});
    VertexId u = d.add_vertex("u");
    VertexId w = d.add_vertex("w");
    d.add_arc(2, u);
    d.add_arc(u, 3);
    d.add_arc(2, w);
    d.add_arc(w, 3);
    TauInfo t = tau_of(d);
    REQUIRE(t.tau == TauClass::One);
    Tau1Result r = solve_tau1_detailed(d, t);
    REQUIRE(r.result.kind == SolveResult::Kind::Yes);
    CHECK(r.phase == 2);
    CHECK(verify_certificate(d, *r.result.certificate));
    CHECK(claim_one_holds(r));
    CHECK(solve_tau1(d, t, Tau1Options{8, false}).kind == SolveResult::Kind::No);
    CHECK(oracle_solve(d).kind == OracleOutcome::Kind::Yes);
}

TEST_CASE("solver agrees with the oracle on generated instances") {
    std::mt19937_64 rng(2024);
    std::size_t checked = 0;
    std::size_t yes = 0;
    std::size_t by_switch = 0;
    std::vector<std::size_t> by_k(4, 0);
    for (std::uint64_t seed = 0; checked < 500 && seed < 20000; ++seed) {
        Tau1Spec spec;
        spec.segments = 1 + seed % 3;
        spec.paths = 1 + seed % 4;
        spec.length = 1 + (seed / 3) % 3;
        spec.chords = (seed / 5) % 4;
        spec.externals = (seed / 7) % 4;
        Digraph g = djc::testing::relabel(generate_tau1(spec, seed), rng);
        if (g.vertex_count() > 12) {
            continue;
        }
        TauInfo t = tau_of(g);
        REQUIRE(t.tau == TauClass::One);
        if (t.one_transversals.size() > 3) {
            continue;
        }
        ++checked;
        ++by_k[t.one_transversals.size()];
        Tau1Result r = solve_tau1_detailed(g, t);
        OracleOutcome o = oracle_solve(g);
        REQUIRE(o.kind != OracleOutcome::Kind::Exceeded);
        const bool solver_yes = r.result.kind == SolveResult::Kind::Yes;
        INFO("seed " << seed << "\n" << format_digraph(g));
        CHECK(solver_yes == (o.kind == OracleOutcome::Kind::Yes));
        if (solver_yes) {
            ++yes;
            CHECK(verify_certificate(g, *r.result.certificate));
            CHECK(claim_one_holds(r));
            if (r.phase == 2) {
                ++by_switch;
                CHECK(solve_tau1(g, t, Tau1Options{8, false}).kind == SolveResult::Kind::No);
            }
        }
    }
    MESSAGE("checked " << checked << ", yes " << yes << ", via switch " << by_switch
                       << ", k=1/2/3: " << by_k[1] << "/" << by_k[2] << "/" << by_k[3]);
    CHECK(checked == 500);
    CHECK(yes > 50);
    CHECK(checked - yes > 50);
    CHECK(by_k[2] > 20);
    CHECK(by_k[3] > 20);
}

TEST_CASE("solver agrees with the oracle where switches matter") {
    std::mt19937_64 rng(99);
    std::size_t checked = 0;
    std::size_t yes = 0;
    std::size_t by_switch = 0;
    for (int round = 0; round < 200000 && checked < 2000; ++round) {
        Digraph g = djc::testing::relabel(switch_rich(rng), rng);
        if (g.vertex_count() > 12) {
            continue;
        }
        TauInfo t = tau_of(g);
        REQUIRE(t.tau == TauClass::One);
        ++checked;
        Tau1Result r = solve_tau1_detailed(g, t);
        OracleOutcome o = oracle_solve(g);
        const bool solver_yes = r.result.kind == SolveResult::Kind::Yes;
        INFO(format_digraph(g));
        CHECK(solver_yes == (o.kind == OracleOutcome::Kind::Yes));
        if (solver_yes) {
            ++yes;
            CHECK(verify_certificate(g, *r.result.certificate));
            CHECK(claim_one_holds(r));
            if (r.phase == 2) {
                ++by_switch;
                CHECK(solve_tau1(g, t, Tau1Options{8, false}).kind == SolveResult::Kind::No);
            }
        }
    }
    MESSAGE("checked " << checked << ", yes " << yes << ", via switch " << by_switch);
    CHECK(checked == 2000);
    CHECK(by_switch >= 100);
}

TEST_CASE("solver agrees with the oracle on random multidigraphs with one transversal vertex set") {
    std::mt19937_64 rng(77);
    std::size_t checked = 0;
    for (int round = 0; round < 20000 && checked < 400; ++round) {
        const std::size_t n = 3 + djc::testing::uniform(rng, 8);
        Digraph g = djc::testing::random_multidigraph(rng, n, n + djc::testing::uniform(rng, n));
        TauInfo t = tau_of(g);
        if (t.tau != TauClass::One) {
            continue;
        }
        ++checked;
        SolveResult r = solve_tau1(g, t);
        OracleOutcome o = oracle_solve(g);
        INFO(format_digraph(g));
        CHECK((r.kind == SolveResult::Kind::Yes) == (o.kind == OracleOutcome::Kind::Yes));
        if (r.kind == SolveResult::Kind::Yes) {
            CHECK(verify_certificate(g, *r.certificate));
        }
    }
    CHECK(checked == 400);
}

TEST_CASE("k budget warning") {
    // a directed 5-cycle: every vertex is a transversal vertex
    Digraph d = from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Tau1Result r = solve_tau1_detailed(d, tau_of(d), Tau1Options{3, true});
    CHECK(r.k == 5);
    CHECK_FALSE(r.warning.empty());
    CHECK(r.result.kind == SolveResult::Kind::No);
    CHECK(solve_tau1_detailed(d, tau_of(d)).warning.empty());
}

TEST_CASE("k = 2 with 100 paths per segment on 400 vertices") {
    Digraph d = djc::testing::ladder(100, true);
    REQUIRE(d.vertex_count() == 400);
    auto start = std::chrono::steady_clock::now();
    TauInfo t = tau_of(d);
    REQUIRE(t.tau == TauClass::One);
    REQUIRE(t.one_transversals.size() == 2);
    Tau1Result r = solve_tau1_detailed(d, t);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE("solved in " << seconds << " s after " << r.tuples_tried << " tuples");
    CHECK(r.paths->size(0) == 100);
    CHECK(r.paths->size(1) == 100);
    // Off any (a_0, a_k)-dipath the rest of each segment is a path along
    // the bridges, so the answer is No.
    CHECK(r.result.kind == SolveResult::Kind::No);
    CHECK(seconds < 10.0);
}
