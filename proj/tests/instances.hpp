#ifndef DJC_TEST_INSTANCES_HPP
#define DJC_TEST_INSTANCES_HPP

#include "djc/digraph.hpp"
#include "djc/generators.hpp"

#include <string>
#include <utility>
#include <vector>

namespace djc::testing {

inline VaultSpec random_vault_spec(Rng& rng) {
    VaultSpec s;
    s.ell = 5 + 2 * pick(rng, 0, 2);
    s.wall = pick(rng, 1, 4);
    s.vary_walls = pick(rng, 0, 1) == 1;
    s.mult = pick(rng, 1, 3);
    s.subdivisions = pick(rng, 0, 3);
    return s;
}

inline MultiwheelSpec random_multiwheel_spec(Rng& rng) {
    MultiwheelSpec s;
    s.p = pick(rng, 3, 8);
    s.spokes = pick(rng, 1, 2);
    s.vary_spokes = true;
    s.split = pick(rng, 0, 1) == 1;
    s.subdivisions = pick(rng, 0, 3);
    return s;
}

inline TrivaultSpec random_trivault_spec(Rng& rng) {
    TrivaultSpec s;
    s.size = pick(rng, 1, 3);
    s.extra = pick(rng, 0, 2);
    s.subdivisions = pick(rng, 0, 2);
    return s;
}

// k = 2 skeleton: per segment, `paths` paths with two inner vertices (one
// of them with a single inner vertex when `trim`), bridges from the second
// inner vertex of each path to the first of the next. Off any dipath
// between the transversal vertices the rest of a segment is a path along
// the bridges, so the answer is No.
inline Digraph ladder(std::size_t paths, bool trim) {
    Digraph d;
    const VertexId a = d.add_vertex("a");
    const VertexId b = d.add_vertex("b");
    for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
        std::vector<std::pair<VertexId, VertexId>> inner;
        for (std::size_t i = 0; i < paths; ++i) {
            const std::string tag = d.name(s) + std::to_string(i);
            VertexId p1 = d.add_vertex(tag + "_1");
            VertexId p2 = p1;
            if (!(trim && i + 1 == paths)) {
                p2 = d.add_vertex(tag + "_2");
                d.add_arc(p1, p2);
            }
            d.add_arc(s, p1);
            d.add_arc(p2, t);
            inner.emplace_back(p1, p2);
        }
        for (std::size_t i = 0; i + 1 < paths; ++i) {
            d.add_arc(inner[i].second, inner[i + 1].first);
        }
    }
    return d;
}

namespace detail {

// Every simple s -> t path as a vertex mask, by DFS.
inline void all_paths(const Digraph& d, VertexId v, VertexId t, std::vector<bool>& on,
                      std::vector<std::vector<bool>>& out) {
    on[v] = true;
    if (v == t) {
        out.push_back(on);
    } else {
        for (ArcId a : d.out_arcs(v)) {
            VertexId w = d.arc(a).head;
            if (!on[w]) {
                all_paths(d, w, t, on, out);
            }
        }
    }
    on[v] = false;
}

}  // namespace detail

/// Vertex-disjoint s1 -> t1 and s2 -> t2 paths exist, by comparing every
/// pair of paths.
inline bool exhaustive_linkage(const Digraph& d, VertexId s1, VertexId t1, VertexId s2,
                               VertexId t2) {
    std::vector<bool> on(d.vertex_count(), false);
    std::vector<std::vector<bool>> first;
    std::vector<std::vector<bool>> second;
    detail::all_paths(d, s1, t1, on, first);
    detail::all_paths(d, s2, t2, on, second);
    for (const auto& p : first) {
        for (const auto& q : second) {
            bool disjoint = true;
            for (std::size_t v = 0; v < p.size(); ++v) {
                disjoint = disjoint && !(p[v] && q[v]);
            }
            if (disjoint) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace djc::testing

#endif  // DJC_TEST_INSTANCES_HPP
