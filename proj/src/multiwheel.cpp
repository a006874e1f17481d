#include "djc/structures.hpp"

#include "cover.hpp"
#include "djc/display.hpp"
#include "djc/traversal.hpp"

#include <algorithm>

namespace djc {

using detail::Cover;
using detail::link_head;
using detail::link_tail;

std::size_t MultiwheelDecomposition::p(const Digraph& d) const {
    std::vector<bool> has_spoke(d.vertex_count(), false);
    for (const Link& l : in_spokes) {
        has_spoke[link_tail(d, l)] = true;
    }
    for (const Link& l : out_spokes) {
        has_spoke[link_head(d, l)] = true;
    }
    std::size_t count = 0;
    for (VertexId v : rim_vertices) {
        count += has_spoke[v];
    }
    return count;
}

Check verify_multiwheel(const Digraph& d, const MultiwheelDecomposition& dec) {
    Cover cover(d);
    const std::size_t len = dec.rim_vertices.size();
    if (len < 3 || dec.rim_arcs.size() != len) {
        return Check::fail("rim must be a dicycle on at least 3 vertices");
    }
    std::vector<bool> on_rim(d.vertex_count(), false);
    for (std::size_t k = 0; k < len; ++k) {
        if (!cover.vertex(dec.rim_vertices[k])) {
            return cover.result();
        }
        on_rim[dec.rim_vertices[k]] = true;
    }
    for (std::size_t k = 0; k < len; ++k) {
        ArcId a = dec.rim_arcs[k];
        if (!cover.arc(a)) {
            return cover.result();
        }
        if (d.arc(a).tail != dec.rim_vertices[k] || d.arc(a).head != dec.rim_vertices[(k + 1) % len]) {
            return Check::fail("rim arc " + std::to_string(a) + " is out of place");
        }
    }
    if (dec.kind == MultiwheelDecomposition::Kind::Plain) {
        if (dec.center_in != dec.center_out || !dec.center_link.empty()) {
            return Check::fail("a plain multiwheel has one center");
        }
        if (!cover.vertex(dec.center_in)) {
            return cover.result();
        }
    } else {
        if (dec.center_in == dec.center_out) {
            return Check::fail("a split multiwheel has two centers");
        }
        if (!cover.vertex(dec.center_in) || !cover.vertex(dec.center_out) ||
            !cover.link(dec.center_link, dec.center_in, dec.center_out)) {
            return cover.result();
        }
    }
    for (const Link& l : dec.in_spokes) {
        if (!cover.link(l, kNoVertex, dec.center_in)) {
            return cover.result();
        }
        if (!on_rim[link_tail(d, l)]) {
            return Check::fail("in-spoke does not start on the rim");
        }
    }
    for (const Link& l : dec.out_spokes) {
        if (!cover.link(l, dec.center_out, kNoVertex)) {
            return cover.result();
        }
        if (!on_rim[link_head(d, l)]) {
            return Check::fail("out-spoke does not end on the rim");
        }
    }
    if (dec.p(d) < 3) {
        return Check::fail("fewer than 3 rim vertices carry spokes");
    }
    cover.complete();
    return cover.result();
}

std::vector<Dicycle> enumerate_multiwheel_dicycles(const Digraph& d,
                                                   const MultiwheelDecomposition& dec) {
    const std::size_t len = dec.rim_vertices.size();
    std::vector<std::size_t> place(d.vertex_count(), 0);
    for (std::size_t k = 0; k < len; ++k) {
        place[dec.rim_vertices[k]] = k;
    }
    std::vector<Dicycle> out{Dicycle{dec.rim_arcs}};
    for (const Link& in : dec.in_spokes) {
        for (const Link& outward : dec.out_spokes) {
            Dicycle c{in};
            c.arcs.insert(c.arcs.end(), dec.center_link.begin(), dec.center_link.end());
            c.arcs.insert(c.arcs.end(), outward.begin(), outward.end());
            std::size_t k = place[link_head(d, outward)];
            std::size_t stop = place[link_tail(d, in)];
            for (; k != stop; k = (k + 1) % len) {
                c.arcs.push_back(dec.rim_arcs[k]);
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

// The rim left after deleting `centers`: every other vertex must have
// exactly one in- and one out-arc avoiding the centers, and together they
// must form a single dicycle. Returned as arcs starting at the smallest
// original vertex id.
std::optional<std::vector<ArcId>> rim_cycle(const Smoothed& sm, const std::vector<bool>& center) {
    const Digraph& s = sm.graph;
    std::vector<ArcId> next(s.vertex_count(), kNoArc);
    std::vector<int> indeg(s.vertex_count(), 0);
    std::size_t rim_size = 0;
    for (ArcId a = 0; a < s.arc_count(); ++a) {
        const Arc& arc = s.arc(a);
        if (center[arc.tail] || center[arc.head]) {
            continue;
        }
        if (next[arc.tail] != kNoArc) {
            return std::nullopt;
        }
        next[arc.tail] = a;
        ++indeg[arc.head];
    }
    VertexId start = kNoVertex;
    for (VertexId v = 0; v < s.vertex_count(); ++v) {
        if (center[v]) {
            continue;
        }
        ++rim_size;
        if (next[v] == kNoArc || indeg[v] != 1) {
            return std::nullopt;
        }
        if (start == kNoVertex || sm.vertex_origin[v] < sm.vertex_origin[start]) {
            start = v;
        }
    }
    if (rim_size < 3) {
        return std::nullopt;
    }
    std::vector<ArcId> arcs;
    VertexId v = start;
    do {
        arcs.push_back(next[v]);
        v = s.arc(next[v]).head;
    } while (v != start && arcs.size() <= rim_size);
    if (v != start || arcs.size() != rim_size) {
        return std::nullopt;
    }
    return arcs;
}

MultiwheelDecomposition lift(const Digraph& d, const Smoothed& sm, const std::vector<ArcId>& rim,
                             VertexId in_s, VertexId out_s, std::optional<ArcId> center_arc,
                             const std::vector<ArcId>& in_spokes,
                             const std::vector<ArcId>& out_spokes) {
    MultiwheelDecomposition dec;
    dec.kind = center_arc ? MultiwheelDecomposition::Kind::Split
                          : MultiwheelDecomposition::Kind::Plain;
    for (ArcId sa : rim) {
        for (ArcId a : sm.arc_paths[sa]) {
            dec.rim_vertices.push_back(d.arc(a).tail);
            dec.rim_arcs.push_back(a);
        }
    }
    dec.center_in = sm.vertex_origin[in_s];
    dec.center_out = sm.vertex_origin[out_s];
    if (center_arc) {
        dec.center_link = sm.arc_paths[*center_arc];
    }
    for (ArcId sa : in_spokes) {
        dec.in_spokes.push_back(sm.arc_paths[sa]);
    }
    for (ArcId sa : out_spokes) {
        dec.out_spokes.push_back(sm.arc_paths[sa]);
    }
    return dec;
}

}  // namespace

std::optional<MultiwheelDecomposition> recognize_multiwheel(const Digraph& d) {
    Smoothed sm = smooth_1_1(d);
    const Digraph& s = sm.graph;
    const std::size_t n = s.vertex_count();
    if (n < 4) {
        return std::nullopt;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (s.has_loop(v)) {
            return std::nullopt;
        }
    }
    if (strong_components(s).members.size() != 1) {
        return std::nullopt;
    }
    std::vector<bool> center(n, false);

    for (VertexId v = 0; v < n; ++v) {
        center[v] = true;
        auto rim = rim_cycle(sm, center);
        center[v] = false;
        if (!rim) {
            continue;
        }
        std::vector<ArcId> in_spokes;
        std::vector<ArcId> out_spokes;
        for (ArcId a : s.in_arcs(v)) {
            in_spokes.push_back(a);
        }
        for (ArcId a : s.out_arcs(v)) {
            out_spokes.push_back(a);
        }
        auto dec = lift(d, sm, *rim, v, v, std::nullopt, in_spokes, out_spokes);
        if (verify_multiwheel(d, dec)) {
            return dec;
        }
    }

    for (ArcId e = 0; e < s.arc_count(); ++e) {
        VertexId minus = s.arc(e).tail;
        VertexId plus = s.arc(e).head;
        if (minus == plus || s.out_degree(minus) != 1 || s.in_degree(plus) != 1) {
            continue;
        }
        center[minus] = center[plus] = true;
        auto rim = rim_cycle(sm, center);
        center[minus] = center[plus] = false;
        if (!rim) {
            continue;
        }
        std::vector<ArcId> in_spokes(s.in_arcs(minus).begin(), s.in_arcs(minus).end());
        std::vector<ArcId> out_spokes(s.out_arcs(plus).begin(), s.out_arcs(plus).end());
        auto dec = lift(d, sm, *rim, minus, plus, e, in_spokes, out_spokes);
        if (verify_multiwheel(d, dec)) {
            return dec;
        }
    }
    return std::nullopt;
}

}  // namespace djc
