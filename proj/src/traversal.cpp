#include "djc/traversal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace djc {

namespace {

bool is_removed(const VertexMask& removed, VertexId v) {
    return !removed.empty() && removed[v];
}

}  // namespace

std::size_t StrongComponents::nontrivial_count() const {
    return static_cast<std::size_t>(std::count(nontrivial.begin(), nontrivial.end(), true));
}

StrongComponents strong_components(const Digraph& d, const VertexMask& removed) {
    const std::size_t n = d.vertex_count();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::size_t> comp(n, kUnset);
    std::vector<std::vector<VertexId>> members;
    std::size_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnset || is_removed(removed, root)) {
            continue;
        }
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            auto outs = d.out_arcs(f.v);
            if (f.next < outs.size()) {
                VertexId w = d.arc(outs[f.next++]).head;
                if (is_removed(removed, w)) {
                    continue;
                }
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<VertexId> group;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = members.size();
                    group.push_back(w);
                } while (w != v);
                std::sort(group.begin(), group.end());
                members.push_back(std::move(group));
            }
        }
    }

    // Renumber components by smallest member for a stable order.
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return members[a][0] < members[b][0]; });
    std::vector<std::size_t> rank(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
    }

    StrongComponents out;
    out.component.assign(n, kUnset);
    for (VertexId v = 0; v < n; ++v) {
        if (comp[v] != kUnset) {
            out.component[v] = rank[comp[v]];
        }
    }
    for (std::size_t i : order) {
        out.members.push_back(std::move(members[i]));
    }
    for (const auto& group : out.members) {
        bool nontrivial = group.size() > 1;
        if (!nontrivial) {
            VertexId v = group[0];
            for (ArcId a : d.out_arcs(v)) {
                if (d.arc(a).head == v) {
                    nontrivial = true;
                    break;
                }
            }
        }
        out.nontrivial.push_back(nontrivial);
    }
    return out;
}

bool is_acyclic(const Digraph& d, const VertexMask& removed) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    std::size_t alive = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!is_removed(removed, v)) {
            ++alive;
        }
    }
    for (const Arc& a : d.arcs()) {
        if (!is_removed(removed, a.tail) && !is_removed(removed, a.head)) {
            ++indeg[a.head];
        }
    }
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (!is_removed(removed, v) && indeg[v] == 0) {
            queue.push_back(v);
        }
    }
    std::size_t done = 0;
    while (done < queue.size()) {
        VertexId v = queue[done++];
        for (ArcId a : d.out_arcs(v)) {
            VertexId w = d.arc(a).head;
            if (!is_removed(removed, w) && --indeg[w] == 0) {
                queue.push_back(w);
            }
        }
    }
    return done == alive;
}

std::optional<std::vector<VertexId>> topological_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (const Arc& a : d.arcs()) {
        ++indeg[a.head];
    }
    std::vector<VertexId> order;
    for (VertexId v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (ArcId a : d.out_arcs(order[i])) {
            if (--indeg[d.arc(a).head] == 0) {
                order.push_back(d.arc(a).head);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

std::optional<Dicycle> find_dicycle(const Digraph& d, const VertexMask& removed) {
    const std::size_t n = d.vertex_count();
    enum : char { kWhite, kGray, kBlack };
    std::vector<char> color(n, kWhite);
    std::vector<ArcId> parent(n, kNoArc);
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (color[root] != kWhite || is_removed(removed, root)) {
            continue;
        }
        std::vector<Frame> call{{root, 0}};
        color[root] = kGray;
        while (!call.empty()) {
            Frame& f = call.back();
            auto outs = d.out_arcs(f.v);
            if (f.next == outs.size()) {
                color[f.v] = kBlack;
                call.pop_back();
                continue;
            }
            ArcId a = outs[f.next++];
            VertexId w = d.arc(a).head;
            if (is_removed(removed, w)) {
                continue;
            }
            if (color[w] == kGray) {
                std::vector<ArcId> arcs{a};
                for (VertexId x = f.v; x != w; x = d.arc(parent[x]).tail) {
                    arcs.push_back(parent[x]);
                }
                std::reverse(arcs.begin(), arcs.end());
                return Dicycle{arcs};
            }
            if (color[w] == kWhite) {
                color[w] = kGray;
                parent[w] = a;
                call.push_back({w, 0});
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<ArcId>> directed_path(const Digraph& d, VertexId from, VertexId to,
                                                const VertexMask& removed) {
    if (is_removed(removed, from) || is_removed(removed, to)) {
        return std::nullopt;
    }
    std::vector<ArcId> parent(d.vertex_count(), kNoArc);
    std::vector<bool> seen(d.vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == to) {
            std::vector<ArcId> path;
            for (VertexId x = to; x != from; x = d.arc(parent[x]).tail) {
                path.push_back(parent[x]);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (ArcId a : d.out_arcs(v)) {
            VertexId w = d.arc(a).head;
            if (!seen[w] && !is_removed(removed, w)) {
                seen[w] = true;
                parent[w] = a;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

std::optional<Dicycle> shortest_dicycle_through(const Digraph& d, VertexId v,
                                                const VertexMask& removed) {
    if (is_removed(removed, v)) {
        return std::nullopt;
    }
    for (ArcId a : d.out_arcs(v)) {
        if (d.arc(a).head == v) {
            return Dicycle{{a}};
        }
    }
    // BFS from v; the first in-arc of v reached closes a shortest cycle.
    std::vector<ArcId> parent(d.vertex_count(), kNoArc);
    std::vector<bool> seen(d.vertex_count(), false);
    std::deque<VertexId> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (ArcId a : d.out_arcs(x)) {
            VertexId w = d.arc(a).head;
            if (w == v) {
                std::vector<ArcId> arcs{a};
                for (VertexId y = x; y != v; y = d.arc(parent[y]).tail) {
                    arcs.push_back(parent[y]);
                }
                std::reverse(arcs.begin(), arcs.end());
                return Dicycle{arcs};
            }
            if (!seen[w] && !is_removed(removed, w)) {
                seen[w] = true;
                parent[w] = a;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

VertexMask reachable_from(const Digraph& d, VertexId from, const VertexMask& removed) {
    VertexMask seen(d.vertex_count(), false);
    if (is_removed(removed, from)) {
        return seen;
    }
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (ArcId a : d.out_arcs(v)) {
            VertexId w = d.arc(a).head;
            if (!seen[w] && !is_removed(removed, w)) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::optional<std::vector<ArcId>> undirected_path(const Digraph& d, VertexId from, VertexId to,
                                                  const VertexMask& allowed) {
    if (!allowed[from] || !allowed[to]) {
        return std::nullopt;
    }
    std::vector<ArcId> parent(d.vertex_count(), kNoArc);
    std::vector<bool> seen(d.vertex_count(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == to) {
            std::vector<ArcId> path;
            for (VertexId x = to; x != from; x = d.other_end(parent[x], x)) {
                path.push_back(parent[x]);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        auto visit = [&](ArcId a) {
            VertexId w = d.other_end(a, v);
            if (!seen[w] && allowed[w]) {
                seen[w] = true;
                parent[w] = a;
                queue.push_back(w);
            }
        };
        for (ArcId a : d.out_arcs(v)) {
            visit(a);
        }
        for (ArcId a : d.in_arcs(v)) {
            visit(a);
        }
    }
    return std::nullopt;
}

std::optional<UndirectedCycle> find_undirected_cycle(const Digraph& d,
                                                     const VertexMask& forbidden) {
    const std::size_t n = d.vertex_count();
    std::vector<VertexId> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](VertexId x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    std::vector<bool> in_forest(d.arc_count(), false);
    for (ArcId id = 0; id < d.arc_count(); ++id) {
        const Arc& a = d.arc(id);
        if (is_removed(forbidden, a.tail) || is_removed(forbidden, a.head)) {
            continue;
        }
        if (a.is_loop()) {
            return UndirectedCycle{{id}};
        }
        VertexId ra = find(a.tail);
        VertexId rb = find(a.head);
        if (ra != rb) {
            uf[ra] = rb;
            in_forest[id] = true;
            continue;
        }
        // Closing arc: join it with the forest path between its endpoints.
        std::vector<ArcId> parent(n, kNoArc);
        std::vector<bool> seen(n, false);
        std::deque<VertexId> queue{a.head};
        seen[a.head] = true;
        while (!queue.empty() && !seen[a.tail]) {
            VertexId v = queue.front();
            queue.pop_front();
            auto visit = [&](ArcId e) {
                if (!in_forest[e]) {
                    return;
                }
                VertexId w = d.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = e;
                    queue.push_back(w);
                }
            };
            for (ArcId e : d.out_arcs(v)) {
                visit(e);
            }
            for (ArcId e : d.in_arcs(v)) {
                visit(e);
            }
        }
        std::vector<ArcId> cycle{id};
        for (VertexId x = a.tail; x != a.head; x = d.other_end(parent[x], x)) {
            cycle.push_back(parent[x]);
        }
        return UndirectedCycle{cycle};
    }
    return std::nullopt;
}

std::vector<std::vector<VertexId>> undirected_components(const Digraph& d,
                                                         const VertexMask& allowed) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(d.vertex_count(), false);
    for (VertexId root = 0; root < d.vertex_count(); ++root) {
        if (seen[root] || !allowed[root]) {
            continue;
        }
        std::vector<VertexId> group;
        std::vector<VertexId> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            group.push_back(v);
            auto visit = [&](ArcId a) {
                VertexId w = d.other_end(a, v);
                if (!seen[w] && allowed[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            };
            for (ArcId a : d.out_arcs(v)) {
                visit(a);
            }
            for (ArcId a : d.in_arcs(v)) {
                visit(a);
            }
        }
        std::sort(group.begin(), group.end());
        out.push_back(std::move(group));
    }
    return out;
}

}  // namespace djc
