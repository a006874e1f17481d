#include "djc/linkage.hpp"

#include "djc/traversal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace djc {

namespace {

constexpr std::uint64_t kUnseen = static_cast<std::uint64_t>(-1);

struct Move {
    std::uint64_t from;
    ArcId arc;
    bool first;  // which token moved
};

}  // namespace

// Tokens walk along the two paths; the token that is earlier in a fixed
// topological order (and not yet home) is the one advanced. A vertex left
// behind by one token is then always earlier than anything the other token
// can still reach, so only the current positions have to be kept apart.
std::optional<std::pair<DiPath, DiPath>> two_disjoint_paths_dag(const Digraph& dag, VertexId s1,
                                                                VertexId t1, VertexId s2,
                                                                VertexId t2) {
    const std::size_t n = dag.vertex_count();
    for (VertexId v : {s1, t1, s2, t2}) {
        if (v >= n) {
            throw std::out_of_range("terminal " + std::to_string(v) + " does not exist");
        }
    }
    auto order = topological_order(dag);
    if (!order) {
        throw std::invalid_argument("two_disjoint_paths_dag needs an acyclic digraph");
    }
    if (s1 == s2 || s1 == t2 || t1 == s2 || t1 == t2) {
        return std::nullopt;
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[(*order)[i]] = i;
    }

    auto key = [n](VertexId x, VertexId y) { return static_cast<std::uint64_t>(x) * n + y; };
    std::vector<Move> parent(n * n, Move{kUnseen, kNoArc, false});
    const std::uint64_t start = key(s1, s2);
    const std::uint64_t goal = key(t1, t2);
    parent[start].from = start;
    std::deque<std::uint64_t> queue{start};
    bool found = start == goal;
    while (!queue.empty() && !found) {
        std::uint64_t state = queue.front();
        queue.pop_front();
        VertexId x = static_cast<VertexId>(state / n);
        VertexId y = static_cast<VertexId>(state % n);
        bool move_first;
        if (x == t1) {
            move_first = false;
        } else if (y == t2) {
            move_first = true;
        } else {
            move_first = rank[x] < rank[y];
        }
        VertexId mover = move_first ? x : y;
        VertexId other = move_first ? y : x;
        for (ArcId a : dag.out_arcs(mover)) {
            VertexId w = dag.arc(a).head;
            if (w == other) {
                continue;
            }
            std::uint64_t next = move_first ? key(w, y) : key(x, w);
            if (parent[next].from != kUnseen) {
                continue;
            }
            parent[next] = Move{state, a, move_first};
            if (next == goal) {
                found = true;
                break;
            }
            queue.push_back(next);
        }
    }
    if (!found) {
        return std::nullopt;
    }
    DiPath p1;
    DiPath p2;
    for (std::uint64_t state = goal; state != start; state = parent[state].from) {
        const Move& m = parent[state];
        (m.first ? p1 : p2).arcs.push_back(m.arc);
    }
    auto finish = [&](DiPath& p, VertexId s) {
        std::reverse(p.arcs.begin(), p.arcs.end());
        p.vertices.push_back(s);
        for (ArcId a : p.arcs) {
            p.vertices.push_back(dag.arc(a).head);
        }
    };
    finish(p1, s1);
    finish(p2, s2);
    return std::make_pair(std::move(p1), std::move(p2));
}

Intercyclicity is_intercyclic(const Digraph& d, const TauInfo& tau) {
    if (tau.tau == TauClass::AtLeastThree) {
        throw std::invalid_argument("is_intercyclic needs a transversal of size at most two");
    }
    Intercyclicity out;
    if (tau.tau != TauClass::Two) {
        return out;
    }
    auto [u, v] = *tau.two_transversal;

    // A loop at one end is a dicycle by itself; the other must avoid it.
    for (VertexId x : {u, v}) {
        if (!d.has_loop(x)) {
            continue;
        }
        VertexMask removed(d.vertex_count(), false);
        removed[x] = true;
        if (auto other = find_dicycle(d, removed)) {
            ArcId loop = kNoArc;
            for (ArcId a : d.out_arcs(x)) {
                if (d.arc(a).head == x) {
                    loop = a;
                    break;
                }
            }
            out.intercyclic = false;
            out.disjoint_pair = std::make_pair(Dicycle{{loop}}, *other);
        }
        return out;
    }

    // H = d - {u, v} plus a source and sink standing in for each of u, v.
    const std::size_t n = d.vertex_count();
    std::vector<VertexId> local(n, kNoVertex);
    std::vector<VertexId> global;
    for (VertexId x = 0; x < n; ++x) {
        if (x != u && x != v) {
            local[x] = static_cast<VertexId>(global.size());
            global.push_back(x);
        }
    }
    Digraph h = Digraph::with_vertices(global.size() + 4);
    const VertexId s1 = static_cast<VertexId>(global.size());
    const VertexId t1 = s1 + 1;
    const VertexId s2 = s1 + 2;
    const VertexId t2 = s1 + 3;
    std::vector<ArcId> origin;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        const Arc& arc = d.arc(a);
        if (local[arc.tail] != kNoVertex && local[arc.head] != kNoVertex) {
            h.add_arc(local[arc.tail], local[arc.head]);
            origin.push_back(a);
        }
    }
    auto attach = [&](VertexId center, VertexId source, VertexId sink) {
        std::vector<bool> done_out(n, false);
        for (ArcId a : d.out_arcs(center)) {
            VertexId w = d.arc(a).head;
            if (local[w] != kNoVertex && !done_out[w]) {
                done_out[w] = true;
                h.add_arc(source, local[w]);
                origin.push_back(a);
            }
        }
        std::vector<bool> done_in(n, false);
        for (ArcId a : d.in_arcs(center)) {
            VertexId w = d.arc(a).tail;
            if (local[w] != kNoVertex && !done_in[w]) {
                done_in[w] = true;
                h.add_arc(local[w], sink);
                origin.push_back(a);
            }
        }
    };
    attach(u, s1, t1);
    attach(v, s2, t2);
    auto paths = two_disjoint_paths_dag(h, s1, t1, s2, t2);
    if (!paths) {
        return out;
    }
    auto lift = [&](const DiPath& p) {
        Dicycle c;
        for (ArcId a : p.arcs) {
            c.arcs.push_back(origin[a]);
        }
        return c;
    };
    out.intercyclic = false;
    out.disjoint_pair = std::make_pair(lift(paths->first), lift(paths->second));
    return out;
}

}  // namespace djc
