#include "djc/tau1.hpp"

#include "djc/traversal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace djc {

namespace {

void require_one(const TauInfo& tau, const char* who) {
    if (tau.tau != TauClass::One || tau.one_transversals.empty()) {
        throw std::invalid_argument(std::string(who) + " needs transversal number 1");
    }
}

// Residual network with an arc id per edge; vertex capacities come from
// in/out node pairs.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

    void add_edge(std::size_t from, std::size_t to, int cap, ArcId label) {
        out_[from].push_back(edges_.size());
        edges_.push_back({to, cap, label});
        out_[to].push_back(edges_.size());
        edges_.push_back({from, 0, label});
    }

    std::size_t max_flow(std::size_t s, std::size_t t) {
        std::size_t flow = 0;
        while (augment(s, t)) {
            ++flow;
        }
        return flow;
    }

    std::vector<bool> residual_reach(std::size_t s) const {
        std::vector<bool> seen(out_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t e : out_[u]) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return seen;
    }

    struct Edge {
        std::size_t to;
        int cap;
        ArcId label;
    };

    // Forward edges sit at even positions; flow on e is the reverse capacity.
    std::size_t flow_on(std::size_t e) const { return static_cast<std::size_t>(edges_[e ^ 1].cap); }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::size_t>& out(std::size_t u) const { return out_[u]; }

private:
    bool augment(std::size_t s, std::size_t t) {
        std::vector<std::size_t> via(out_.size(), std::numeric_limits<std::size_t>::max());
        std::vector<bool> seen(out_.size(), false);
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty() && !seen[t]) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t e : out_[u]) {
                std::size_t w = edges_[e].to;
                if (edges_[e].cap > 0 && !seen[w]) {
                    seen[w] = true;
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if (!seen[t]) {
            return false;
        }
        for (std::size_t w = t; w != s; w = edges_[via[w] ^ 1].to) {
            --edges_[via[w]].cap;
            ++edges_[via[w] ^ 1].cap;
        }
        return true;
    }

    std::vector<std::vector<std::size_t>> out_;
    std::vector<Edge> edges_;
};

// Where a P* vertex sits: interior vertices belong to one path; terminal x
// is a_x.
struct StarIndex {
    std::vector<std::size_t> segment;
    std::vector<std::size_t> path;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> terminal;

    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    StarIndex(const SplitDag& s, const PathSystems& ps) {
        const std::size_t n = s.dag.vertex_count();
        segment.assign(n, kNone);
        path.assign(n, kNone);
        pos.assign(n, kNone);
        terminal.assign(n, kNone);
        for (std::size_t x = 0; x < s.terminals.size(); ++x) {
            terminal[s.terminals[x]] = x;
        }
        for (std::size_t x = 0; x < ps.systems.size(); ++x) {
            for (std::size_t i = 0; i < ps.systems[x].size(); ++i) {
                const auto& vs = ps.systems[x][i].vertices;
                for (std::size_t p = 1; p + 1 < vs.size(); ++p) {
                    segment[vs[p]] = x;
                    path[vs[p]] = i;
                    pos[vs[p]] = p;
                }
            }
        }
    }

    // Segment a switch starting (ending) at v belongs to, or kNone.
    std::size_t start_segment(VertexId v, std::size_t k) const {
        if (terminal[v] != kNone) {
            return terminal[v] < k ? terminal[v] : kNone;
        }
        return segment[v];
    }
    std::size_t end_segment(VertexId v) const {
        if (terminal[v] != kNone) {
            return terminal[v] > 0 ? terminal[v] - 1 : kNone;
        }
        return segment[v];
    }

    std::vector<std::size_t> options(VertexId v, std::size_t paths) const {
        if (terminal[v] != kNone) {
            std::vector<std::size_t> all(paths);
            for (std::size_t i = 0; i < paths; ++i) {
                all[i] = i;
            }
            return all;
        }
        return {path[v]};
    }
};

std::optional<UndirectedCycle> cycle_avoiding(const Digraph& dag, const std::vector<ArcId>& path) {
    VertexMask used = arc_vertex_mask(dag, path);
    return find_undirected_cycle(dag, used);
}

Certificate lift(const DerivedGraph& pre, const SplitDag& s, const DagSolution& sol) {
    Certificate c;
    for (ArcId a : sol.path) {
        c.dicycle.arcs.push_back(pre.arc_origin[s.arc_origin[a]]);
    }
    for (ArcId a : sol.cycle.arcs) {
        c.cycle.arcs.push_back(pre.arc_origin[s.arc_origin[a]]);
    }
    return c;
}

}  // namespace

DerivedGraph preprocess_tau1(const Digraph& d, const TauInfo& tau) {
    require_one(tau, "preprocess_tau1");
    const std::size_t n = d.vertex_count();
    StrongComponents scc = strong_components(d);
    const std::size_t core = scc.component.at(tau.one_transversals.front());
    VertexMask transversal(n, false);
    for (VertexId v : tau.one_transversals) {
        transversal.at(v) = true;
    }
    auto outside = [&](VertexId v) { return scc.component[v] != core; };

    std::vector<bool> keep_arc(d.arc_count(), true);
    std::vector<std::size_t> degree(n, 0);
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        const Arc& arc = d.arc(a);
        if ((transversal[arc.tail] && outside(arc.head)) ||
            (transversal[arc.head] && outside(arc.tail))) {
            keep_arc[a] = false;
            continue;
        }
        ++degree[arc.tail];
        ++degree[arc.head];
    }
    VertexMask keep(n, true);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (outside(v) && degree[v] <= 1) {
            keep[v] = false;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        auto drop = [&](ArcId a) {
            if (!keep_arc[a]) {
                return;
            }
            keep_arc[a] = false;
            VertexId w = d.other_end(a, v);
            if (--degree[w] <= 1 && keep[w] && outside(w)) {
                keep[w] = false;
                queue.push_back(w);
            }
        };
        for (ArcId a : d.out_arcs(v)) {
            drop(a);
        }
        for (ArcId a : d.in_arcs(v)) {
            drop(a);
        }
    }
    return subgraph(d, keep, keep_arc);
}

SplitDag split_transversal(const Digraph& d, const TauInfo& tau) {
    require_one(tau, "split_transversal");
    const VertexId a = *std::min_element(tau.one_transversals.begin(), tau.one_transversals.end());
    auto cycle = shortest_dicycle_through(d, a);
    if (!cycle) {
        throw std::invalid_argument("split_transversal: no dicycle through the transversal vertex");
    }
    VertexMask transversal(d.vertex_count(), false);
    for (VertexId v : tau.one_transversals) {
        transversal.at(v) = true;
    }

    SplitDag s;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        s.dag.add_vertex(d.name(v));
        s.vertex_origin.push_back(v);
    }
    std::string name = d.name(a) + "'";
    while (s.dag.find_vertex(name)) {
        name += "'";
    }
    const VertexId ak = s.dag.add_vertex(name);
    s.vertex_origin.push_back(a);
    for (ArcId e = 0; e < d.arc_count(); ++e) {
        const Arc& arc = d.arc(e);
        s.dag.add_arc(arc.tail, arc.head == a ? ak : arc.head);
        s.arc_origin.push_back(e);
    }

    for (VertexId v : dicycle_vertices(d, cycle->arcs)) {
        if (transversal[v]) {
            s.terminals.push_back(v);
        }
    }
    if (s.terminals.size() != tau.one_transversals.size()) {
        throw std::logic_error("split_transversal: a transversal vertex is off the dicycle");
    }
    s.terminals.push_back(ak);

    if (!topological_order(s.dag)) {
        throw std::logic_error("split_transversal: the split digraph has a dicycle");
    }
    if (!reachable_from(s.dag, a)[ak]) {
        throw std::logic_error("split_transversal: a_k not reachable from a_0");
    }
    for (std::size_t x = 1; x + 1 < s.terminals.size(); ++x) {
        VertexMask removed(s.dag.vertex_count(), false);
        removed[s.terminals[x]] = true;
        if (reachable_from(s.dag, a, removed)[ak]) {
            throw std::logic_error("split_transversal: " + d.name(s.terminals[x]) +
                                   " does not separate the split ends");
        }
    }
    return s;
}

PathSystems build_path_systems(const SplitDag& s) {
    const Digraph& g = s.dag;
    const std::size_t n = g.vertex_count();
    const std::size_t k = s.segments();
    PathSystems ps;
    ps.systems.resize(k);
    ps.cuts.resize(k);
    ps.direct.assign(k, false);
    ps.on_star.assign(n, false);

    for (std::size_t x = 0; x < k; ++x) {
        const VertexId src = s.terminals[x];
        const VertexId dst = s.terminals[x + 1];
        auto in = [](VertexId v) { return 2 * static_cast<std::size_t>(v); };
        auto out = [](VertexId v) { return 2 * static_cast<std::size_t>(v) + 1; };
        FlowNetwork net(2 * n);
        for (VertexId v = 0; v < n; ++v) {
            net.add_edge(in(v), out(v), v == src || v == dst ? static_cast<int>(n) : 1, kNoArc);
        }
        for (ArcId a = 0; a < g.arc_count(); ++a) {
            const Arc& arc = g.arc(a);
            if (arc.tail == src && arc.head == dst) {
                if (!ps.direct[x]) {
                    ps.direct[x] = true;
                    ps.systems[x].push_back(DiPath{{src, dst}, {a}});
                }
                continue;
            }
            net.add_edge(out(arc.tail), in(arc.head), static_cast<int>(n), a);
        }
        const std::size_t flow = net.max_flow(out(src), in(dst));

        std::vector<bool> spent(2 * g.arc_count() + 2 * n, false);
        for (std::size_t p = 0; p < flow; ++p) {
            DiPath path{{src}, {}};
            std::size_t u = out(src);
            while (u != in(dst)) {
                std::size_t next = std::numeric_limits<std::size_t>::max();
                for (std::size_t e : net.out(u)) {
                    if (e % 2 == 0 && net.flow_on(e) > 0 && !spent[e] &&
                        net.edge(e).label != kNoArc) {
                        next = e;
                        break;
                    }
                }
                spent[next] = true;
                const ArcId a = net.edge(next).label;
                path.arcs.push_back(a);
                path.vertices.push_back(g.arc(a).head);
                u = out(g.arc(a).head);
                if (g.arc(a).head == dst) {
                    break;
                }
            }
            ps.systems[x].push_back(std::move(path));
        }

        std::vector<bool> reach = net.residual_reach(out(src));
        for (VertexId v = 0; v < n; ++v) {
            if (v != src && v != dst && reach[in(v)] && !reach[out(v)]) {
                ps.cuts[x].push_back(v);
            }
        }
        if (ps.cuts[x].size() != flow) {
            throw std::logic_error("build_path_systems: cut and flow disagree");
        }
        for (const DiPath& p : ps.systems[x]) {
            for (VertexId v : p.vertices) {
                ps.on_star[v] = true;
            }
        }
    }
    return ps;
}

std::variant<DagSolution, std::vector<Switch>> enumerate_switches(const SplitDag& s,
                                                                  const PathSystems& ps) {
    const Digraph& g = s.dag;
    const std::size_t k = s.segments();
    if (auto cycle = find_undirected_cycle(g, ps.on_star)) {
        DagSolution sol;
        for (std::size_t x = 0; x < k; ++x) {
            const auto& arcs = ps.systems[x].front().arcs;
            sol.path.insert(sol.path.end(), arcs.begin(), arcs.end());
        }
        sol.cycle = *cycle;
        return sol;
    }

    std::vector<bool> star_arc(g.arc_count(), false);
    for (const auto& system : ps.systems) {
        for (const DiPath& p : system) {
            for (ArcId a : p.arcs) {
                star_arc[a] = true;
            }
        }
    }
    StarIndex index(s, ps);
    std::vector<Switch> found;

    auto consider = [&](VertexId from, VertexId to, std::vector<ArcId> arcs) {
        const std::size_t x = index.start_segment(from, k);
        if (x == StarIndex::kNone || index.end_segment(to) != x) {
            return;
        }
        if (index.terminal[from] != StarIndex::kNone && index.terminal[to] != StarIndex::kNone) {
            return;
        }
        Switch sw;
        sw.segment = x;
        sw.from = from;
        sw.to = to;
        sw.arcs = std::move(arcs);
        sw.from_options = index.options(from, ps.size(x));
        sw.to_options = index.options(to, ps.size(x));
        for (std::size_t i : sw.from_options) {
            for (std::size_t j : sw.to_options) {
                if (i != j) {
                    sw.from_path = i;
                    sw.to_path = j;
                    found.push_back(std::move(sw));
                    return;
                }
            }
        }
    };

    const std::size_t n = g.vertex_count();
    std::vector<ArcId> parent(n, kNoArc);
    std::vector<std::size_t> stamp(n, 0);
    std::size_t round = 0;
    for (ArcId e = 0; e < g.arc_count(); ++e) {
        const Arc& first = g.arc(e);
        if (!ps.on_star[first.tail] || star_arc[e]) {
            continue;
        }
        if (ps.on_star[first.head]) {
            consider(first.tail, first.head, {e});
            continue;
        }
        // Off P* the underlying graph is a forest, so every vertex reached
        // from the head of e is reached along one dipath.
        ++round;
        std::vector<VertexId> order{first.head};
        stamp[first.head] = round;
        parent[first.head] = e;
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexId u = order[i];
            for (ArcId f : g.out_arcs(u)) {
                VertexId w = g.arc(f).head;
                if (ps.on_star[w]) {
                    std::vector<ArcId> arcs{f};
                    for (VertexId v = u; v != first.tail; v = g.arc(parent[v]).tail) {
                        arcs.push_back(parent[v]);
                    }
                    std::reverse(arcs.begin(), arcs.end());
                    consider(first.tail, w, std::move(arcs));
                    continue;
                }
                if (stamp[w] == round) {
                    throw std::logic_error("enumerate_switches: two dipaths between one arc pair");
                }
                stamp[w] = round;
                parent[w] = f;
                order.push_back(w);
            }
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const Switch& l, const Switch& r) { return l.segment < r.segment; });
    return found;
}

std::optional<std::vector<ArcId>> assemble_candidate(const SplitDag& s, const PathSystems& ps,
                                                     const std::vector<Switch>& switches,
                                                     const std::vector<TupleChoice>& pi) {
    const std::size_t k = s.segments();
    if (pi.size() != k) {
        throw std::invalid_argument("assemble_candidate: tuple length differs from k");
    }
    std::vector<ArcId> out;
    for (std::size_t x = 0; x < k; ++x) {
        const auto& system = ps.systems[x];
        if (!pi[x].is_switch) {
            if (pi[x].index >= system.size()) {
                throw std::invalid_argument("assemble_candidate: path index out of range");
            }
            const auto& arcs = system[pi[x].index].arcs;
            out.insert(out.end(), arcs.begin(), arcs.end());
            continue;
        }
        if (pi[x].index >= switches.size()) {
            throw std::invalid_argument("assemble_candidate: switch index out of range");
        }
        const Switch& sw = switches[pi[x].index];
        if (sw.segment != x) {
            throw std::invalid_argument("assemble_candidate: switch from another segment");
        }
        if (sw.from_path == sw.to_path || sw.from_path >= system.size() ||
            sw.to_path >= system.size()) {
            return std::nullopt;
        }
        const DiPath& entry = system[sw.from_path];
        const DiPath& exit = system[sw.to_path];
        auto from_at = std::find(entry.vertices.begin(), entry.vertices.end() - 1, sw.from);
        auto to_at = std::find(exit.vertices.begin() + 1, exit.vertices.end(), sw.to);
        if (from_at == entry.vertices.end() - 1 || to_at == exit.vertices.end()) {
            return std::nullopt;
        }
        const std::size_t p = static_cast<std::size_t>(from_at - entry.vertices.begin());
        const std::size_t q = static_cast<std::size_t>(to_at - exit.vertices.begin());
        out.insert(out.end(), entry.arcs.begin(), entry.arcs.begin() + static_cast<long>(p));
        out.insert(out.end(), sw.arcs.begin(), sw.arcs.end());
        out.insert(out.end(), exit.arcs.begin() + static_cast<long>(q), exit.arcs.end());
    }
    return out;
}

Tau1Result solve_tau1_detailed(const Digraph& d, const TauInfo& tau, const Tau1Options& options) {
    require_one(tau, "solve_tau1");
    Tau1Result r;
    r.result = SolveResult::no("tau1");

    DerivedGraph pre = preprocess_tau1(d, tau);
    std::vector<VertexId> local(d.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < pre.vertex_origin.size(); ++v) {
        local[pre.vertex_origin[v]] = v;
    }
    TauInfo inner{TauClass::One, {}, std::nullopt};
    for (VertexId v : tau.one_transversals) {
        inner.one_transversals.push_back(local[v]);
    }
    SplitDag s = split_transversal(pre.graph, inner);
    PathSystems ps = build_path_systems(s);
    const std::size_t k = s.segments();
    r.k = k;
    if (k > options.k_budget) {
        r.warning = "k = " + std::to_string(k) + " exceeds the budget of " +
                    std::to_string(options.k_budget) + "; running time grows like l^k";
    }

    auto finish = [&](DagSolution sol, int phase) {
        r.result = SolveResult::yes(lift(pre, s, sol), "tau1");
        r.phase = phase;
        r.solution = std::move(sol);
    };
    // Odometer over per-segment choice counts; `visit` returns true to stop.
    auto odometer = [k](const std::vector<std::size_t>& counts, auto&& visit) {
        std::vector<std::size_t> at(k, 0);
        while (true) {
            if (visit(at)) {
                return true;
            }
            std::size_t x = k;
            while (x > 0 && ++at[x - 1] == counts[x - 1]) {
                at[x - 1] = 0;
                --x;
            }
            if (x == 0) {
                return false;
            }
        }
    };

    std::vector<std::size_t> path_counts(k);
    for (std::size_t x = 0; x < k; ++x) {
        path_counts[x] = ps.size(x);
    }
    const std::vector<Switch> none;
    bool hit = odometer(path_counts, [&](const std::vector<std::size_t>& at) {
        std::vector<TupleChoice> pi(k);
        for (std::size_t x = 0; x < k; ++x) {
            pi[x] = {false, at[x]};
        }
        ++r.tuples_tried;
        std::vector<ArcId> path = *assemble_candidate(s, ps, none, pi);
        if (auto cycle = cycle_avoiding(s.dag, path)) {
            finish(DagSolution{std::move(path), *cycle}, 1);
            return true;
        }
        return false;
    });

    if (!hit && options.allow_switches) {
        auto listed = enumerate_switches(s, ps);
        if (std::holds_alternative<DagSolution>(listed)) {
            throw std::logic_error("solve_tau1: path tuples missed a cycle off P*");
        }
        const auto& switches = std::get<std::vector<Switch>>(listed);
        std::vector<std::vector<std::size_t>> by_segment(k);
        for (std::size_t i = 0; i < switches.size(); ++i) {
            by_segment[switches[i].segment].push_back(i);
        }
        std::vector<std::size_t> counts(k);
        for (std::size_t x = 0; x < k; ++x) {
            counts[x] = ps.size(x) + by_segment[x].size();
        }
        odometer(counts, [&](const std::vector<std::size_t>& at) {
            std::vector<TupleChoice> pi(k);
            bool any_switch = false;
            for (std::size_t x = 0; x < k; ++x) {
                if (at[x] < ps.size(x)) {
                    pi[x] = {false, at[x]};
                } else {
                    pi[x] = {true, by_segment[x][at[x] - ps.size(x)]};
                    any_switch = true;
                }
            }
            if (!any_switch) {
                return false;
            }
            ++r.tuples_tried;
            auto path = assemble_candidate(s, ps, switches, pi);
            if (!path) {
                return false;
            }
            if (auto cycle = cycle_avoiding(s.dag, *path)) {
                finish(DagSolution{std::move(*path), *cycle}, 2);
                return true;
            }
            return false;
        });
    }
    r.split = std::move(s);
    r.paths = std::move(ps);
    return r;
}

SolveResult solve_tau1(const Digraph& d, const TauInfo& tau, const Tau1Options& options) {
    return solve_tau1_detailed(d, tau, options).result;
}

}  // namespace djc
