#ifndef DJC_TEST_SUPPORT_HPP
#define DJC_TEST_SUPPORT_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace djc::testing {

inline Digraph from_arcs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
    Digraph d = Digraph::with_vertices(n);
    for (auto [t, h] : arcs) {
        d.add_arc(t, h);
    }
    return d;
}

inline Digraph digon() { return from_arcs(2, {{0, 1}, {1, 0}}); }

inline Digraph two_digons() { return from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}); }

inline Digraph k3d() { return from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}); }

// Square of the directed 5-cycle: i -> i+1 and i -> i+2.
inline Digraph c5sq() {
    Digraph d = Digraph::with_vertices(5);
    for (VertexId i = 0; i < 5; ++i) {
        d.add_arc(i, (i + 1) % 5);
    }
    for (VertexId i = 0; i < 5; ++i) {
        d.add_arc(i, (i + 2) % 5);
    }
    return d;
}

// Rim 0 -> 1 -> 2 -> 0 and center 3 with one spoke each way per rim vertex.
inline Digraph mw3() {
    Digraph d = from_arcs(4, {{0, 1}, {1, 2}, {2, 0}});
    for (VertexId i = 0; i < 3; ++i) {
        d.add_arc(3, i);
        d.add_arc(i, 3);
    }
    return d;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Digraph random_multidigraph(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                   bool loops = true) {
    Digraph d = Digraph::with_vertices(n);
    for (std::size_t i = 0; i < m; ++i) {
        VertexId t = static_cast<VertexId>(uniform(rng, n));
        VertexId h = static_cast<VertexId>(uniform(rng, n));
        if (!loops && n > 1) {
            while (h == t) {
                h = static_cast<VertexId>(uniform(rng, n));
            }
        }
        d.add_arc(t, h);
    }
    return d;
}

inline Digraph random_dag(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph d = Digraph::with_vertices(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                d.add_arc(perm[i], perm[j]);
            }
        }
    }
    return d;
}

/// Subdivides arc `a`: it becomes tail -> new -> head. The first half keeps
/// the id of `a`; other ids are unchanged and the new arc is last.
inline Digraph subdivide(const Digraph& d, ArcId a) {
    Digraph out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out.add_vertex(d.name(v));
    }
    std::string name = "s";
    while (out.find_vertex(name)) {
        name += "s";
    }
    VertexId mid = out.add_vertex(name);
    for (ArcId b = 0; b < d.arc_count(); ++b) {
        const Arc& arc = d.arc(b);
        out.add_arc(arc.tail, b == a ? mid : arc.head);
    }
    out.add_arc(mid, d.arc(a).head);
    return out;
}

/// Acyclicity of d minus the vertices in `mask` (bit per vertex).
inline bool acyclic_without(const Digraph& d, std::uint64_t mask) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (const Arc& a : d.arcs()) {
        if (!(mask >> a.tail & 1) && !(mask >> a.head & 1)) {
            ++indeg[a.head];
        }
    }
    std::vector<VertexId> stack;
    std::size_t alive = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) {
            ++alive;
            if (indeg[v] == 0) {
                stack.push_back(v);
            }
        }
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++seen;
        for (ArcId a : d.out_arcs(v)) {
            VertexId h = d.arc(a).head;
            if (!(mask >> h & 1) && --indeg[h] == 0) {
                stack.push_back(h);
            }
        }
    }
    return seen == alive;
}

/// Smallest transversal size, capped at 3, by trying every vertex subset.
inline int brute_force_tau(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    for (int size = 0; size <= 2; ++size) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) == size && acyclic_without(d, mask)) {
                return size;
            }
        }
    }
    return 3;
}

/// Isomorphism of small multidigraphs by trying every vertex bijection.
inline bool isomorphic(const Digraph& a, const Digraph& b) {
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.arc_count() != b.arc_count() || n > 10) {
        return false;
    }
    auto counts = [n](const Digraph& d) {
        std::vector<int> c(n * n, 0);
        for (const Arc& arc : d.arcs()) {
            ++c[arc.tail * n + arc.head];
        }
        return c;
    };
    std::vector<int> ca = counts(a);
    std::vector<int> cb = counts(b);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) {
            for (std::size_t j = 0; j < n && same; ++j) {
                same = ca[i * n + j] == cb[perm[i] * n + perm[j]];
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Same digraph with vertices and arcs renumbered at random.
inline Digraph relabel(const Digraph& d, std::mt19937_64& rng) {
    std::vector<VertexId> vperm(d.vertex_count());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::vector<ArcId> order(d.arc_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Digraph out = Digraph::with_vertices(d.vertex_count());
    for (ArcId a : order) {
        out.add_arc(vperm[d.arc(a).tail], vperm[d.arc(a).head]);
    }
    return out;
}

}  // namespace djc::testing

#endif  // DJC_TEST_SUPPORT_HPP
