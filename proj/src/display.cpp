#include "djc/display.hpp"

#include "djc/traversal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace djc {

Smoothed smooth_1_1(const Digraph& d) {
    struct WorkArc {
        VertexId tail;
        VertexId head;
        std::vector<ArcId> path;
        bool alive;
    };
    std::vector<WorkArc> arcs;
    std::vector<std::vector<std::size_t>> out(d.vertex_count());
    std::vector<std::vector<std::size_t>> in(d.vertex_count());
    std::vector<std::size_t> outdeg(d.vertex_count(), 0);
    std::vector<std::size_t> indeg(d.vertex_count(), 0);
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        arcs.push_back({d.arc(a).tail, d.arc(a).head, {a}, true});
        out[d.arc(a).tail].push_back(a);
        in[d.arc(a).head].push_back(a);
        ++outdeg[d.arc(a).tail];
        ++indeg[d.arc(a).head];
    }
    std::vector<bool> alive(d.vertex_count(), true);
    auto first_alive = [&](const std::vector<std::size_t>& list) {
        for (std::size_t i : list) {
            if (arcs[i].alive) {
                return i;
            }
        }
        throw std::logic_error("smoothing lost track of an arc");
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
            if (!alive[v] || indeg[v] != 1 || outdeg[v] != 1) {
                continue;
            }
            std::size_t e = first_alive(in[v]);
            std::size_t f = first_alive(out[v]);
            if (e == f) {
                continue;  // lone loop
            }
            VertexId x = arcs[e].tail;
            VertexId y = arcs[f].head;
            WorkArc joined{x, y, arcs[e].path, true};
            joined.path.insert(joined.path.end(), arcs[f].path.begin(), arcs[f].path.end());
            arcs[e].alive = false;
            arcs[f].alive = false;
            alive[v] = false;
            std::size_t id = arcs.size();
            arcs.push_back(std::move(joined));
            out[x].push_back(id);
            in[y].push_back(id);
            changed = true;
        }
    }

    Smoothed result;
    std::vector<VertexId> renumber(d.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (alive[v]) {
            renumber[v] = result.graph.add_vertex(d.name(v));
            result.vertex_origin.push_back(v);
        }
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].alive) {
            kept.push_back(i);
        }
    }
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
        return arcs[a].path.front() < arcs[b].path.front();
    });
    for (std::size_t i : kept) {
        result.graph.add_arc(renumber[arcs[i].tail], renumber[arcs[i].head]);
        result.arc_paths.push_back(arcs[i].path);
    }
    return result;
}

Display reduce_contract(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    if (n == 0) {
        throw std::invalid_argument("reduction needs a nonempty digraph");
    }
    auto scc = strong_components(d);
    if (scc.members.size() != 1) {
        throw std::invalid_argument("reduction needs a strongly connected digraph");
    }
    for (VertexId v = 0; v < n; ++v) {
        if (d.in_degree(v) == 1 && d.out_degree(v) == 1) {
            throw std::invalid_argument("reduction needs no vertex of in- and out-degree 1");
        }
    }

    std::vector<VertexId> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](VertexId x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    std::vector<std::size_t> outdeg(n), indeg(n);
    for (VertexId v = 0; v < n; ++v) {
        outdeg[v] = d.out_degree(v);
        indeg[v] = d.in_degree(v);
    }
    std::vector<bool> contracted(d.arc_count(), false);

    bool changed = true;
    while (changed) {
        changed = false;
        for (ArcId a = 0; a < d.arc_count(); ++a) {
            if (contracted[a]) {
                continue;
            }
            VertexId x = find(d.arc(a).tail);
            VertexId y = find(d.arc(a).head);
            if (x == y || (outdeg[x] != 1 && indeg[y] != 1)) {
                continue;
            }
            contracted[a] = true;
            uf[y] = x;
            outdeg[x] = outdeg[x] + outdeg[y] - 1;
            indeg[x] = indeg[x] + indeg[y] - 1;
            changed = true;
            break;
        }
    }

    Display disp;
    disp.member_of.assign(n, kNoVertex);
    std::vector<VertexId> class_id(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
        VertexId r = find(v);
        if (class_id[r] == kNoVertex) {
            class_id[r] = disp.reduced.add_vertex(d.name(v));
            disp.member_vertices.emplace_back();
            disp.member_arcs.emplace_back();
        }
        disp.member_of[v] = class_id[r];
        disp.member_vertices[class_id[r]].push_back(v);
    }
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        VertexId x = disp.member_of[d.arc(a).tail];
        if (contracted[a]) {
            disp.member_arcs[x].push_back(a);
        } else {
            disp.reduced.add_arc(x, disp.member_of[d.arc(a).head]);
            disp.arc_origin.push_back(a);
        }
    }
    return disp;
}

namespace {

// Orients the member tree away from `root`, skipping `skip`. Returns the
// vertices reached and, for each, the arc to its parent.
void walk_tree(const Digraph& d, const std::vector<bool>& member_arc, VertexId root,
               std::optional<ArcId> skip, std::vector<VertexId>& order,
               std::vector<ArcId>& parent_arc) {
    std::vector<bool> seen(d.vertex_count(), false);
    order.clear();
    order.push_back(root);
    seen[root] = true;
    parent_arc[root] = kNoArc;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        auto visit = [&](ArcId a) {
            if (!member_arc[a] || (skip && *skip == a) || a == parent_arc[v]) {
                return;
            }
            VertexId w = d.other_end(a, v);
            if (seen[w]) {
                return;
            }
            seen[w] = true;
            parent_arc[w] = a;
            order.push_back(w);
        };
        for (ArcId a : d.out_arcs(v)) {
            visit(a);
        }
        for (ArcId a : d.in_arcs(v)) {
            visit(a);
        }
    }
}

}  // namespace

std::vector<MemberSplit> member_splits(const Digraph& d, const Display& disp, VertexId m) {
    const auto& verts = disp.member_vertices[m];
    const auto& marcs = disp.member_arcs[m];
    std::vector<bool> member_arc(d.arc_count(), false);
    for (ArcId a : marcs) {
        member_arc[a] = true;
    }
    std::vector<ArcId> parent_arc(d.vertex_count(), kNoArc);
    std::vector<VertexId> order;

    auto attachment_ok = [&](const MemberSplit& s) {
        std::vector<bool> in_side(d.vertex_count(), false);
        std::vector<bool> out_side(d.vertex_count(), false);
        for (VertexId v : s.in_vertices) {
            in_side[v] = true;
        }
        for (VertexId v : s.out_vertices) {
            out_side[v] = true;
        }
        for (VertexId v : verts) {
            for (ArcId a : d.out_arcs(v)) {
                if (!member_arc[a] && !out_side[v]) {
                    return false;
                }
            }
            for (ArcId a : d.in_arcs(v)) {
                if (!member_arc[a] && !in_side[v]) {
                    return false;
                }
            }
        }
        return true;
    };

    std::vector<MemberSplit> result;

    // Shared root r.
    for (VertexId r : verts) {
        walk_tree(d, member_arc, r, std::nullopt, order, parent_arc);
        if (order.size() != verts.size()) {
            continue;
        }
        MemberSplit s;
        s.in_root = s.out_root = r;
        std::vector<char> side(d.vertex_count(), 0);  // 1 = in, 2 = out
        bool ok = true;
        for (std::size_t i = 1; i < order.size() && ok; ++i) {
            VertexId w = order[i];
            ArcId a = parent_arc[w];
            VertexId p = d.other_end(a, w);
            char mine = d.arc(a).tail == w ? 1 : 2;
            if (p != r && side[p] != mine) {
                ok = false;
            }
            side[w] = mine;
        }
        if (!ok) {
            continue;
        }
        s.in_vertices.push_back(r);
        s.out_vertices.push_back(r);
        for (std::size_t i = 1; i < order.size(); ++i) {
            VertexId w = order[i];
            if (side[w] == 1) {
                s.in_vertices.push_back(w);
                s.in_arcs.push_back(parent_arc[w]);
            } else {
                s.out_vertices.push_back(w);
                s.out_arcs.push_back(parent_arc[w]);
            }
        }
        if (attachment_ok(s)) {
            result.push_back(std::move(s));
        }
    }

    // Root arc c -> b.
    for (ArcId e : marcs) {
        VertexId c = d.arc(e).tail;
        VertexId b = d.arc(e).head;
        if (c == b) {
            continue;
        }
        MemberSplit s;
        s.in_root = c;
        s.out_root = b;
        s.root_arc = e;
        bool ok = true;
        walk_tree(d, member_arc, c, e, order, parent_arc);
        for (std::size_t i = 0; i < order.size() && ok; ++i) {
            VertexId w = order[i];
            s.in_vertices.push_back(w);
            if (i > 0) {
                ok = d.arc(parent_arc[w]).tail == w;
                s.in_arcs.push_back(parent_arc[w]);
            }
        }
        std::size_t seen = order.size();
        walk_tree(d, member_arc, b, e, order, parent_arc);
        for (std::size_t i = 0; i < order.size() && ok; ++i) {
            VertexId w = order[i];
            s.out_vertices.push_back(w);
            if (i > 0) {
                ok = d.arc(parent_arc[w]).head == w;
                s.out_arcs.push_back(parent_arc[w]);
            }
        }
        if (!ok || seen + order.size() != verts.size()) {
            continue;
        }
        if (attachment_ok(s)) {
            result.push_back(std::move(s));
        }
    }
    return result;
}

}  // namespace djc
