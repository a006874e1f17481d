#include "djc/structures.hpp"

#include "cover.hpp"
#include "djc/display.hpp"
#include "djc/traversal.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace djc {

using detail::Cover;
using detail::link_head;
using detail::link_tail;

namespace {

constexpr std::size_t kNowhere = static_cast<std::size_t>(-1);

struct WallIndex {
    std::vector<std::size_t> wall;
    std::vector<std::size_t> pos;
};

WallIndex index_walls(const Digraph& d, const VaultDecomposition& dec) {
    WallIndex idx{std::vector<std::size_t>(d.vertex_count(), kNowhere),
                  std::vector<std::size_t>(d.vertex_count(), kNowhere)};
    for (std::size_t i = 0; i < dec.walls.size(); ++i) {
        const auto& vs = dec.walls[i].vertices;
        for (std::size_t k = 0; k < vs.size(); ++k) {
            if (vs[k] < d.vertex_count()) {
                idx.wall[vs[k]] = i;
                idx.pos[vs[k]] = k;
            }
        }
    }
    return idx;
}

std::size_t position_on(const Wall& w, VertexId v) {
    auto it = std::find(w.vertices.begin(), w.vertices.end(), v);
    if (it == w.vertices.end()) {
        throw std::invalid_argument("vertex is not on the expected wall");
    }
    return static_cast<std::size_t>(it - w.vertices.begin());
}

}  // namespace

Check verify_vault(const Digraph& d, const VaultDecomposition& dec) {
    const std::size_t ell = dec.ell();
    if (ell < 5 || ell % 2 == 0) {
        return Check::fail("wall count must be odd and at least 5");
    }
    if (dec.cross_links.size() != ell || dec.central_links.size() != ell) {
        return Check::fail("link tables do not match the wall count");
    }
    Cover cover(d);
    for (const Wall& w : dec.walls) {
        if (!cover.path(w.vertices, w.arcs)) {
            return cover.result();
        }
        const std::size_t last = w.vertices.size() - 1;
        bool arc_bc = w.c == w.b + 1 && w.c <= last;
        bool same = w.b == w.c && (w.b == 0 || w.b == last);
        if (!arc_bc && !same) {
            return Check::fail("b and c of a wall are neither an arc nor an end");
        }
    }
    WallIndex idx = index_walls(d, dec);
    for (std::size_t i = 0; i < ell; ++i) {
        const Wall& from = dec.walls[i];
        const Wall& to = dec.walls[(i + 1) % ell];
        if (!cover.link(dec.central_links[i], from.vertices.back(),
                        dec.walls[(i + 2) % ell].vertices.front())) {
            return cover.result();
        }
        if (dec.cross_links[i].empty()) {
            return Check::fail("no link from wall " + std::to_string(i) + " to the next");
        }
        for (const Link& l : dec.cross_links[i]) {
            if (!cover.link(l, kNoVertex, kNoVertex)) {
                return cover.result();
            }
            VertexId p = link_tail(d, l);
            VertexId q = link_head(d, l);
            if (idx.wall[p] != i || idx.pos[p] < from.c) {
                return Check::fail("cross link " + std::to_string(l.front()) +
                                   " does not start in P[c, d]");
            }
            if (idx.wall[q] != (i + 1) % ell || idx.pos[q] > to.b) {
                return Check::fail("cross link " + std::to_string(l.front()) +
                                   " does not end in P[a, b]");
            }
        }
    }
    cover.complete();
    return cover.result();
}

std::optional<VaultNiche> vault_niche(const Digraph& d, const VaultDecomposition& dec) {
    const std::size_t ell = dec.ell();
    for (std::size_t i = 0; i < ell; ++i) {
        const auto& links = dec.cross_links[i];
        std::vector<std::size_t> tail(links.size());
        std::vector<std::size_t> head(links.size());
        for (std::size_t k = 0; k < links.size(); ++k) {
            tail[k] = position_on(dec.walls[i], link_tail(d, links[k]));
            head[k] = position_on(dec.walls[(i + 1) % ell], link_head(d, links[k]));
        }
        for (std::size_t x = 0; x < links.size(); ++x) {
            for (std::size_t y = 0; y < links.size(); ++y) {
                if (tail[x] < tail[y] && head[x] > head[y]) {
                    return VaultNiche{i, x, y};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<ArcId> vault_forward_path(const VaultDecomposition& dec, std::size_t from,
                                      std::size_t from_pos, std::size_t to, std::size_t to_pos) {
    const std::size_t ell = dec.ell();
    if (from >= ell || to >= ell || from == to) {
        throw std::invalid_argument("vault_forward_path needs two distinct walls");
    }
    const Wall& start = dec.walls[from];
    const Wall& end = dec.walls[to];
    if (from_pos >= start.vertices.size() || to_pos >= end.vertices.size()) {
        throw std::invalid_argument("vault_forward_path position off the wall");
    }
    std::vector<ArcId> arcs(start.arcs.begin() + static_cast<std::ptrdiff_t>(from_pos),
                            start.arcs.end());
    std::size_t w = from;
    for (;;) {
        const Link& central = dec.central_links[w];
        arcs.insert(arcs.end(), central.begin(), central.end());
        w = (w + 2) % ell;
        if (w == to) {
            arcs.insert(arcs.end(), end.arcs.begin(),
                        end.arcs.begin() + static_cast<std::ptrdiff_t>(to_pos));
            return arcs;
        }
        arcs.insert(arcs.end(), dec.walls[w].arcs.begin(), dec.walls[w].arcs.end());
    }
}

Dicycle vault_cycle_via_cross_link(const Digraph& d, const VaultDecomposition& dec,
                                   std::size_t wall, const Link& link) {
    const std::size_t ell = dec.ell();
    std::size_t next = (wall + 1) % ell;
    std::size_t p = position_on(dec.walls[wall], link_tail(d, link));
    std::size_t q = position_on(dec.walls[next], link_head(d, link));
    Dicycle b{vault_forward_path(dec, next, q, wall, p)};
    b.arcs.insert(b.arcs.end(), link.begin(), link.end());
    return b;
}

Certificate vault_niche_certificate(const Digraph& d, const VaultDecomposition& dec,
                                    const VaultNiche& niche) {
    const std::size_t ell = dec.ell();
    if (niche.wall >= ell || niche.pq >= dec.cross_links[niche.wall].size() ||
        niche.rs >= dec.cross_links[niche.wall].size()) {
        throw std::invalid_argument("niche witness refers to missing links");
    }
    const std::size_t i = niche.wall;
    const std::size_t next = (i + 1) % ell;
    const Link& pq = dec.cross_links[i][niche.pq];
    const Link& rs = dec.cross_links[i][niche.rs];
    std::size_t p = position_on(dec.walls[i], link_tail(d, pq));
    std::size_t q = position_on(dec.walls[next], link_head(d, pq));
    std::size_t r = position_on(dec.walls[i], link_tail(d, rs));
    std::size_t s = position_on(dec.walls[next], link_head(d, rs));
    if (!(p < r && q > s)) {
        throw std::invalid_argument("the two links do not cross");
    }
    Certificate cert;
    cert.dicycle = vault_cycle_via_cross_link(d, dec, i, pq);
    cert.cycle.arcs = vault_forward_path(dec, i, r, next, s);
    cert.cycle.arcs.insert(cert.cycle.arcs.end(), rs.rbegin(), rs.rend());
    return cert;
}

namespace {

// Cyclic order W_0 .. W_{l-1} of a reduced digraph that is the square of a
// cycle with multiplicities on the cycle arcs, or nullopt.
std::optional<std::vector<VertexId>> square_order(const Digraph& r, VertexId second) {
    const std::size_t n = r.vertex_count();
    std::vector<VertexId> order{0, second};
    std::vector<bool> used(n, false);
    used[0] = used[second] = true;
    auto out_neighbours = [&](VertexId v) {
        std::vector<VertexId> nb;
        for (ArcId a : r.out_arcs(v)) {
            VertexId h = r.arc(a).head;
            if (std::find(nb.begin(), nb.end(), h) == nb.end()) {
                nb.push_back(h);
            }
        }
        return nb;
    };
    while (order.size() < n) {
        std::size_t k = order.size() - 2;
        auto nb = out_neighbours(order[k]);
        if (nb.size() != 2) {
            return std::nullopt;
        }
        VertexId next = nb[0] == order[k + 1] ? nb[1] : nb[0];
        if ((nb[0] != order[k + 1] && nb[1] != order[k + 1]) || used[next]) {
            return std::nullopt;
        }
        used[next] = true;
        order.push_back(next);
    }
    std::vector<std::size_t> place(n);
    for (std::size_t k = 0; k < n; ++k) {
        place[order[k]] = k;
    }
    std::vector<std::size_t> central(n, 0);
    std::vector<std::size_t> rim(n, 0);
    for (const Arc& a : r.arcs()) {
        std::size_t step = (place[a.head] + n - place[a.tail]) % n;
        if (step == 1) {
            ++rim[place[a.tail]];
        } else if (step == 2) {
            ++central[place[a.tail]];
        } else {
            return std::nullopt;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (rim[k] == 0 || central[k] != 1) {
            return std::nullopt;
        }
    }
    return order;
}

// Lays the member arcs out as a directed path; nullopt if they are not one.
std::optional<std::pair<std::vector<VertexId>, std::vector<ArcId>>> member_path(
    const Digraph& s, const std::vector<VertexId>& verts, const std::vector<ArcId>& arcs) {
    std::vector<ArcId> next(s.vertex_count(), kNoArc);
    std::vector<int> indeg(s.vertex_count(), 0);
    for (ArcId a : arcs) {
        const Arc& arc = s.arc(a);
        if (next[arc.tail] != kNoArc) {
            return std::nullopt;
        }
        next[arc.tail] = a;
        ++indeg[arc.head];
    }
    VertexId start = kNoVertex;
    for (VertexId v : verts) {
        if (indeg[v] > 1) {
            return std::nullopt;
        }
        if (indeg[v] == 0) {
            if (start != kNoVertex) {
                return std::nullopt;
            }
            start = v;
        }
    }
    if (start == kNoVertex) {
        return std::nullopt;
    }
    std::vector<VertexId> path{start};
    std::vector<ArcId> path_arcs;
    while (next[path.back()] != kNoArc) {
        ArcId a = next[path.back()];
        path_arcs.push_back(a);
        path.push_back(s.arc(a).head);
    }
    if (path.size() != verts.size()) {
        return std::nullopt;
    }
    return std::make_pair(std::move(path), std::move(path_arcs));
}

std::optional<VaultDecomposition> vault_from_order(const Digraph& d, const Smoothed& sm,
                                                   const Display& disp,
                                                   const std::vector<VertexId>& order) {
    const Digraph& s = sm.graph;
    const std::size_t ell = order.size();
    std::vector<std::size_t> place(ell);
    for (std::size_t k = 0; k < ell; ++k) {
        place[order[k]] = k;
    }
    VaultDecomposition dec;
    dec.walls.resize(ell);
    dec.cross_links.resize(ell);
    dec.central_links.resize(ell);

    // Smoothed-level walls first.
    std::vector<std::vector<VertexId>> wall_s(ell);
    std::vector<std::vector<ArcId>> wall_arcs_s(ell);
    std::vector<std::size_t> pos_s(s.vertex_count(), 0);
    for (std::size_t k = 0; k < ell; ++k) {
        VertexId m = order[k];
        auto path = member_path(s, disp.member_vertices[m], disp.member_arcs[m]);
        if (!path) {
            return std::nullopt;
        }
        wall_s[k] = path->first;
        wall_arcs_s[k] = path->second;
        for (std::size_t t = 0; t < wall_s[k].size(); ++t) {
            pos_s[wall_s[k][t]] = t;
        }
    }
    std::vector<std::size_t> max_head(ell, 0);
    std::vector<std::size_t> min_tail(ell, kNowhere);
    std::vector<std::vector<ArcId>> cross_s(ell);
    std::vector<ArcId> central_s(ell, kNoArc);
    for (ArcId ra = 0; ra < disp.reduced.arc_count(); ++ra) {
        ArcId sa = disp.arc_origin[ra];
        std::size_t from = place[disp.reduced.arc(ra).tail];
        std::size_t to = place[disp.reduced.arc(ra).head];
        VertexId tail = s.arc(sa).tail;
        VertexId head = s.arc(sa).head;
        if (to == (from + 2) % ell) {
            if (pos_s[tail] != wall_s[from].size() - 1 || pos_s[head] != 0) {
                return std::nullopt;
            }
            central_s[from] = sa;
        } else {
            cross_s[from].push_back(sa);
            min_tail[from] = std::min(min_tail[from], pos_s[tail]);
            max_head[to] = std::max(max_head[to], pos_s[head]);
        }
    }

    for (std::size_t k = 0; k < ell; ++k) {
        const std::size_t last = wall_s[k].size() - 1;
        std::size_t h = max_head[k];
        std::size_t t = min_tail[k];
        std::size_t b;
        std::size_t c;
        if (h < t) {
            b = h;
            c = h + 1;
        } else if (h == t && (h == 0 || h == last)) {
            b = c = h;
        } else {
            return std::nullopt;
        }
        // Lift the wall through the smoothing.
        Wall& w = dec.walls[k];
        std::vector<std::size_t> lifted(wall_s[k].size());
        w.vertices.push_back(sm.vertex_origin[wall_s[k][0]]);
        lifted[0] = 0;
        for (std::size_t e = 0; e < wall_arcs_s[k].size(); ++e) {
            for (ArcId a : sm.arc_paths[wall_arcs_s[k][e]]) {
                w.arcs.push_back(a);
                w.vertices.push_back(d.arc(a).head);
            }
            lifted[e + 1] = w.vertices.size() - 1;
        }
        if (b == c) {
            w.b = w.c = lifted[b];
        } else {
            w.c = lifted[c];
            w.b = w.c - 1;
        }
        dec.central_links[k] = sm.arc_paths[central_s[k]];
        for (ArcId sa : cross_s[k]) {
            dec.cross_links[k].push_back(sm.arc_paths[sa]);
        }
    }

    // Canonical rotation: the wall whose first vertex has the smallest id
    // becomes wall 0; links within a wall pair are sorted by their ends.
    std::size_t shift = 0;
    for (std::size_t k = 1; k < ell; ++k) {
        if (dec.walls[k].vertices.front() < dec.walls[shift].vertices.front()) {
            shift = k;
        }
    }
    std::rotate(dec.walls.begin(), dec.walls.begin() + static_cast<std::ptrdiff_t>(shift),
                dec.walls.end());
    std::rotate(dec.cross_links.begin(),
                dec.cross_links.begin() + static_cast<std::ptrdiff_t>(shift),
                dec.cross_links.end());
    std::rotate(dec.central_links.begin(),
                dec.central_links.begin() + static_cast<std::ptrdiff_t>(shift),
                dec.central_links.end());
    for (std::size_t k = 0; k < ell; ++k) {
        const Wall& from = dec.walls[k];
        const Wall& to = dec.walls[(k + 1) % ell];
        auto key = [&](const Link& l) {
            return std::make_tuple(position_on(from, link_tail(d, l)),
                                   position_on(to, link_head(d, l)), l.front());
        };
        std::sort(dec.cross_links[k].begin(), dec.cross_links[k].end(),
                  [&](const Link& x, const Link& y) { return key(x) < key(y); });
    }
    return dec;
}

}  // namespace

std::optional<VaultDecomposition> recognize_vault(const Digraph& d) {
    Smoothed sm = smooth_1_1(d);
    const Digraph& s = sm.graph;
    if (s.vertex_count() < 5) {
        return std::nullopt;
    }
    for (VertexId v = 0; v < s.vertex_count(); ++v) {
        if (s.has_loop(v)) {
            return std::nullopt;
        }
    }
    if (strong_components(s).members.size() != 1) {
        return std::nullopt;
    }
    Display disp = reduce_contract(s);
    const Digraph& r = disp.reduced;
    if (r.vertex_count() < 5 || r.vertex_count() % 2 == 0) {
        return std::nullopt;
    }
    std::vector<VertexId> seconds;
    for (ArcId a : r.out_arcs(0)) {
        VertexId h = r.arc(a).head;
        if (h != 0 && std::find(seconds.begin(), seconds.end(), h) == seconds.end()) {
            seconds.push_back(h);
        }
    }
    for (VertexId second : seconds) {
        auto order = square_order(r, second);
        if (!order) {
            continue;
        }
        auto dec = vault_from_order(d, sm, disp, *order);
        if (dec && verify_vault(d, *dec)) {
            return dec;
        }
    }
    return std::nullopt;
}

}  // namespace djc
