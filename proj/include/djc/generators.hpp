#ifndef DJC_GENERATORS_HPP
#define DJC_GENERATORS_HPP

#include "djc/digraph.hpp"
#include "djc/structures.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace djc {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Plain modulo so that streams are identical
/// across standard libraries.
std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi);

struct VaultSpec {
    std::size_t ell = 5;
    std::size_t wall = 1;      // vertices per wall
    bool vary_walls = false;   // draw each wall length from [1, wall] instead
    std::size_t mult = 1;      // cross links per wall pair drawn from [1, mult]
    bool niche = false;        // plant one crossing pair
    std::size_t subdivisions = 0;
};

struct MultiwheelSpec {
    std::size_t p = 3;
    std::size_t spokes = 1;    // spokes each way per rim vertex
    bool vary_spokes = false;  // draw each count from [0, spokes], at least one spoke per vertex
    bool split = false;
    std::size_t subdivisions = 0;
};

struct TrivaultSpec {
    enum class Shape { Star, Path, Any };
    std::array<Shape, 3> r{Shape::Any, Shape::Any, Shape::Any};
    std::array<Shape, 3> l{Shape::Any, Shape::Any, Shape::Any};
    std::size_t size = 2;      // leaves per star, vertices per path; drawn from [1, size]
    bool exact_size = false;   // use `size` as is
    int identify = -1;         // 1: identify b_i and c_i, 0: join them, -1: random
    std::size_t extra = 1;     // optional links per part pair drawn from [0, extra]
    bool niche = false;        // plant a crossing pair between two paths
    std::size_t subdivisions = 0;
};

struct Tau1Spec {
    std::size_t segments = 2;  // transversal vertices on the skeleton
    std::size_t paths = 3;     // parallel paths per segment drawn from [1, paths]
    std::size_t length = 2;    // inner vertices per path drawn from [0, length]
    std::size_t chords = 2;    // forward arcs inside a segment drawn from [0, chords]
    std::size_t externals = 2; // extra vertices drawn from [0, externals]
    std::size_t external_arcs = 3;
};

struct GeneratedVault {
    Digraph graph;
    VaultDecomposition dec;
};

struct GeneratedMultiwheel {
    Digraph graph;
    MultiwheelDecomposition dec;
};

struct GeneratedTrivault {
    Digraph graph;
    TrivaultDecomposition dec;
};

/// Each throws std::invalid_argument for an invalid spec. Deterministic in
/// the seed.
GeneratedVault generate_vault(const VaultSpec& spec, std::uint64_t seed);

/// Resamples spoke counts until the transversal number is 2.
GeneratedMultiwheel generate_multiwheel(const MultiwheelSpec& spec, std::uint64_t seed);

/// Without a planted niche, resamples until the trivault has none.
GeneratedTrivault generate_trivault(const TrivaultSpec& spec, std::uint64_t seed);

/// Vertex 0 is split into a segment chain; every other arc follows one
/// linear order, so every dicycle runs through vertex 0. The transversal
/// number is 1; chords and extra vertices may merge or bypass segments.
Digraph generate_tau1(const Tau1Spec& spec, std::uint64_t seed);

/// Adds `count` external trees of 1 .. max_tree vertices (random arc
/// directions), each joined to `core` by 1 .. max_arcs arcs of random
/// direction, as long as no external vertex lands on a dicycle through
/// vertex 0. The core keeps its ids.
Digraph attach_externals(const Digraph& core, std::size_t count, std::size_t max_tree,
                         std::size_t max_arcs, std::uint64_t seed);

/// Subdivides arc `a` in place of a copy: `a` keeps its id and now ends at
/// a new last vertex, from which a new last arc continues to the old head.
Digraph subdivide_arc(const Digraph& d, ArcId a);

}  // namespace djc

#endif  // DJC_GENERATORS_HPP
