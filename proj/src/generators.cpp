#include "djc/generators.hpp"

#include "djc/transversal.hpp"
#include "djc/traversal.hpp"

#include <algorithm>
#include <stdexcept>

namespace djc {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    if (hi <= lo) {
        return lo;
    }
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Digraph subdivide_arc(const Digraph& d, ArcId a) {
    Digraph out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out.add_vertex(d.name(v));
    }
    std::string name = std::to_string(d.vertex_count());
    while (out.find_vertex(name)) {
        name += "'";
    }
    VertexId mid = out.add_vertex(name);
    for (ArcId b = 0; b < d.arc_count(); ++b) {
        out.add_arc(d.arc(b).tail, b == a ? mid : d.arc(b).head);
    }
    out.add_arc(mid, d.arc(a).head);
    return out;
}

Digraph attach_externals(const Digraph& core, std::size_t count, std::size_t max_tree,
                         std::size_t max_arcs, std::uint64_t seed) {
    Rng rng(seed);
    Digraph d = core;
    const std::size_t n = core.vertex_count();
    if (n == 0) {
        throw std::invalid_argument("externals need a nonempty core");
    }
    auto fresh = [&] {
        std::string name = "x" + std::to_string(d.vertex_count());
        while (d.find_vertex(name)) {
            name += "'";
        }
        return d.add_vertex(name);
    };
    auto either_way = [&](VertexId a, VertexId b) {
        if (pick(rng, 0, 1) == 0) {
            d.add_arc(a, b);
        } else {
            d.add_arc(b, a);
        }
    };
    // Arc directions are random, except that no external vertex may end up
    // on a dicycle; a tree that would gets all its core arcs into the core.
    StrongComponents before = strong_components(core);
    const std::size_t core_component = before.members[before.component[0]].size();
    auto stays_outside = [&](const Digraph& g) {
        StrongComponents scc = strong_components(g);
        return scc.members[scc.component[0]].size() == core_component;
    };
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<VertexId> tree{fresh()};
        for (std::size_t k = pick(rng, 1, std::max<std::size_t>(max_tree, 1)); k > 1; --k) {
            VertexId parent = tree[pick(rng, 0, tree.size() - 1)];
            tree.push_back(fresh());
            either_way(parent, tree.back());
        }
        const Digraph tree_only = d;
        std::vector<std::pair<VertexId, VertexId>> joins;
        for (std::size_t k = pick(rng, 1, std::max<std::size_t>(max_arcs, 1)); k > 0; --k) {
            joins.emplace_back(tree[pick(rng, 0, tree.size() - 1)],
                               static_cast<VertexId>(pick(rng, 0, n - 1)));
            either_way(joins.back().first, joins.back().second);
        }
        if (!stays_outside(d)) {
            d = tree_only;
            for (auto [x, v] : joins) {
                d.add_arc(x, v);
            }
        }
    }
    return d;
}

namespace {

constexpr int kMaxAttempts = 10000;

// Subdivides `count` randomly chosen arcs of the given links, keeping the
// links in step with the digraph.
void subdivide_links(Digraph& d, const std::vector<Link*>& links, std::size_t count, Rng& rng) {
    if (links.empty()) {
        return;
    }
    for (std::size_t k = 0; k < count; ++k) {
        Link& l = *links[pick(rng, 0, links.size() - 1)];
        std::size_t at = pick(rng, 0, l.size() - 1);
        d = subdivide_arc(d, l[at]);
        l.insert(l.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                 static_cast<ArcId>(d.arc_count() - 1));
    }
}

Link arc_link(Digraph& d, VertexId t, VertexId h) { return Link{d.add_arc(t, h)}; }

}  // namespace

GeneratedVault generate_vault(const VaultSpec& spec, std::uint64_t seed) {
    if (spec.ell < 5 || spec.ell % 2 == 0) {
        throw std::invalid_argument("vault needs an odd number of walls, at least 5");
    }
    if (spec.wall == 0 || spec.mult == 0) {
        throw std::invalid_argument("vault walls and multiplicities must be positive");
    }
    if (spec.niche && spec.wall < 2) {
        throw std::invalid_argument("a planted niche needs walls of at least 2 vertices");
    }
    Rng rng(seed);
    const std::size_t ell = spec.ell;
    const std::size_t niche_wall = spec.niche ? pick(rng, 0, ell - 1) : ell;

    GeneratedVault out;
    Digraph& d = out.graph;
    auto& walls = out.dec.walls;
    walls.resize(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        std::size_t len = spec.vary_walls ? pick(rng, 1, spec.wall) : spec.wall;
        if (spec.niche && (i == niche_wall || i == (niche_wall + 1) % ell)) {
            len = std::max<std::size_t>(len, 2);
        }
        Wall& w = walls[i];
        for (std::size_t k = 0; k < len; ++k) {
            w.vertices.push_back(d.add_vertex(std::to_string(d.vertex_count())));
        }
        for (std::size_t k = 0; k + 1 < len; ++k) {
            w.arcs.push_back(d.add_arc(w.vertices[k], w.vertices[k + 1]));
        }
        std::size_t o = pick(rng, 0, len);
        if (o == 0) {
            w.b = w.c = 0;
        } else if (o == len) {
            w.b = w.c = len - 1;
        } else {
            w.b = o - 1;
            w.c = o;
        }
        if (i == niche_wall) {
            w.b = w.c = 0;
        } else if (spec.niche && i == (niche_wall + 1) % ell) {
            w.b = w.c = len - 1;
        }
    }

    out.dec.cross_links.resize(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        const Wall& from = walls[i];
        const Wall& to = walls[(i + 1) % ell];
        const std::size_t m = pick(rng, 1, spec.mult);
        std::vector<std::size_t> tails;
        std::vector<std::size_t> heads;
        for (std::size_t k = 0; k < m; ++k) {
            tails.push_back(pick(rng, from.c, from.vertices.size() - 1));
            heads.push_back(pick(rng, 0, to.b));
        }
        // Pairing sorted tails with sorted heads never crosses.
        std::sort(tails.begin(), tails.end());
        std::sort(heads.begin(), heads.end());
        if (i == niche_wall) {
            std::size_t p = pick(rng, 0, from.vertices.size() - 2);
            std::size_t r = pick(rng, p + 1, from.vertices.size() - 1);
            std::size_t s = pick(rng, 0, to.vertices.size() - 2);
            std::size_t q = pick(rng, s + 1, to.vertices.size() - 1);
            tails.push_back(p);
            heads.push_back(q);
            tails.push_back(r);
            heads.push_back(s);
        }
        for (std::size_t k = 0; k < tails.size(); ++k) {
            out.dec.cross_links[i].push_back(
                arc_link(d, from.vertices[tails[k]], to.vertices[heads[k]]));
        }
    }
    for (std::size_t i = 0; i < ell; ++i) {
        out.dec.central_links.push_back(
            arc_link(d, walls[i].vertices.back(), walls[(i + 2) % ell].vertices.front()));
    }

    std::vector<Link*> links;
    for (auto& group : out.dec.cross_links) {
        for (Link& l : group) {
            links.push_back(&l);
        }
    }
    for (Link& l : out.dec.central_links) {
        links.push_back(&l);
    }
    subdivide_links(d, links, spec.subdivisions, rng);
    return out;
}

GeneratedMultiwheel generate_multiwheel(const MultiwheelSpec& spec, std::uint64_t seed) {
    if (spec.p < 3 || spec.spokes == 0) {
        throw std::invalid_argument("multiwheel needs p >= 3 and at least one spoke");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::size_t> in_count(spec.p, spec.spokes);
        std::vector<std::size_t> out_count(spec.p, spec.spokes);
        if (spec.vary_spokes) {
            for (std::size_t i = 0; i < spec.p; ++i) {
                do {
                    in_count[i] = pick(rng, 0, spec.spokes);
                    out_count[i] = pick(rng, 0, spec.spokes);
                } while (in_count[i] + out_count[i] == 0);
            }
        }
        std::size_t total_in = 0;
        std::size_t total_out = 0;
        for (std::size_t i = 0; i < spec.p; ++i) {
            total_in += in_count[i];
            total_out += out_count[i];
        }
        // A split center with a single spoke on one side would just be a
        // subdivided spoke.
        if (spec.split && (total_in < 2 || total_out < 2)) {
            continue;
        }

        GeneratedMultiwheel out;
        Digraph& d = out.graph;
        MultiwheelDecomposition& dec = out.dec;
        d = Digraph::with_vertices(spec.p + (spec.split ? 2 : 1));
        for (std::size_t i = 0; i < spec.p; ++i) {
            dec.rim_vertices.push_back(static_cast<VertexId>(i));
            dec.rim_arcs.push_back(
                d.add_arc(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % spec.p)));
        }
        dec.center_in = static_cast<VertexId>(spec.p);
        dec.center_out = static_cast<VertexId>(spec.split ? spec.p + 1 : spec.p);
        if (spec.split) {
            dec.kind = MultiwheelDecomposition::Kind::Split;
            dec.center_link = arc_link(d, dec.center_in, dec.center_out);
        }
        for (std::size_t i = 0; i < spec.p; ++i) {
            for (std::size_t k = 0; k < in_count[i]; ++k) {
                dec.in_spokes.push_back(arc_link(d, static_cast<VertexId>(i), dec.center_in));
            }
            for (std::size_t k = 0; k < out_count[i]; ++k) {
                dec.out_spokes.push_back(arc_link(d, dec.center_out, static_cast<VertexId>(i)));
            }
        }
        if (compute_tau_capped(d).tau != TauClass::Two) {
            continue;
        }
        std::vector<Link*> links;
        for (Link& l : dec.in_spokes) {
            links.push_back(&l);
        }
        for (Link& l : dec.out_spokes) {
            links.push_back(&l);
        }
        if (spec.split) {
            links.push_back(&dec.center_link);
        }
        subdivide_links(d, links, spec.subdivisions, rng);
        return out;
    }
    throw std::runtime_error("no multiwheel with transversal number 2 found");
}

namespace {

using Shape = TrivaultSpec::Shape;

bool star(const TrivaultPart& p) { return p.shape == TrivaultPart::Shape::Star; }

std::optional<GeneratedTrivault> trivault_attempt(const TrivaultSpec& spec, Rng& rng) {
    std::array<bool, 3> r_star{};
    std::array<bool, 3> l_star{};
    auto draw = [&](Shape s) { return s == Shape::Any ? pick(rng, 0, 1) == 0 : s == Shape::Star; };
    for (std::size_t i = 0; i < 3; ++i) {
        r_star[i] = draw(spec.r[i]);
        l_star[i] = draw(spec.l[i]);
    }
    auto size = [&](bool at_least_two) {
        std::size_t s = spec.exact_size ? spec.size : pick(rng, 1, spec.size);
        return at_least_two ? std::max<std::size_t>(s, 2) : s;
    };

    // The (R_i, L_j) pair that receives a planted crossing.
    std::size_t ni = 3;
    std::size_t nj = 3;
    if (spec.niche) {
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j && spec.r[i] != Shape::Star && spec.l[j] != Shape::Star) {
                    options.emplace_back(i, j);
                }
            }
        }
        if (options.empty()) {
            throw std::invalid_argument("a planted niche needs a path R part and a path L part");
        }
        std::tie(ni, nj) = options[pick(rng, 0, options.size() - 1)];
        r_star[ni] = false;
        l_star[nj] = false;
    }

    GeneratedTrivault out;
    Digraph& d = out.graph;
    TrivaultDecomposition& dec = out.dec;
    auto fresh = [&] { return d.add_vertex(std::to_string(d.vertex_count())); };
    for (std::size_t i = 0; i < 3; ++i) {
        TrivaultPart& l = dec.l[i];
        TrivaultPart& r = dec.r[i];
        const bool identify = spec.identify < 0 ? pick(rng, 0, 1) == 0 : spec.identify == 1;
        if (l_star[i]) {
            l.shape = TrivaultPart::Shape::Star;
            l.root = fresh();
            for (std::size_t k = size(false); k > 0; --k) {
                l.leaves.push_back(fresh());
            }
        } else {
            for (std::size_t k = size(i == nj); k > 0; --k) {
                l.path.push_back(fresh());
            }
            l.root = l.path.back();
        }
        r.root = identify ? l.root : fresh();
        if (r_star[i]) {
            r.shape = TrivaultPart::Shape::Star;
            for (std::size_t k = size(false); k > 0; --k) {
                r.leaves.push_back(fresh());
            }
        } else {
            r.path.push_back(r.root);
            for (std::size_t k = size(i == ni); k > 1; --k) {
                r.path.push_back(fresh());
            }
        }
        for (VertexId leaf : l.leaves) {
            l.leaf_links.push_back(arc_link(d, leaf, l.root));
        }
        for (std::size_t k = 0; k + 1 < l.path.size(); ++k) {
            l.path_arcs.push_back(d.add_arc(l.path[k], l.path[k + 1]));
        }
        if (!identify) {
            dec.joins[i] = arc_link(d, l.root, r.root);
        }
        for (VertexId leaf : r.leaves) {
            r.leaf_links.push_back(arc_link(d, r.root, leaf));
        }
        for (std::size_t k = 0; k + 1 < r.path.size(); ++k) {
            r.path_arcs.push_back(d.add_arc(r.path[k], r.path[k + 1]));
        }
    }

    auto add = [&](std::size_t i, std::size_t j, VertexId t, VertexId h) {
        dec.cross.push_back(TrivaultCrossLink{i, j, arc_link(d, t, h)});
    };
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                continue;
            }
            const TrivaultPart& r = dec.r[i];
            const TrivaultPart& l = dec.l[j];
            const std::size_t extra = pick(rng, 0, spec.extra);
            if (star(r) && star(l)) {
                for (VertexId leaf : r.leaves) {
                    add(i, j, leaf, l.root);
                }
                for (VertexId leaf : l.leaves) {
                    add(i, j, r.root, leaf);
                }
                for (std::size_t k = 0; k < extra; ++k) {
                    add(i, j, r.root, l.root);
                }
            } else if (star(r)) {
                const std::size_t v = pick(rng, 0, l.path.size() - 1);
                for (VertexId leaf : r.leaves) {
                    add(i, j, leaf, l.path[v]);
                }
                add(i, j, r.root, l.path.front());
                for (std::size_t k = 0; k < extra; ++k) {
                    add(i, j, r.root, l.path[pick(rng, 0, v)]);
                }
            } else if (star(l)) {
                const std::size_t v = pick(rng, 0, r.path.size() - 1);
                for (VertexId leaf : l.leaves) {
                    add(i, j, r.path[v], leaf);
                }
                add(i, j, r.path.back(), l.root);
                for (std::size_t k = 0; k < extra; ++k) {
                    add(i, j, r.path[pick(rng, v, r.path.size() - 1)], l.root);
                }
            } else {
                std::vector<std::size_t> tails{r.path.size() - 1};
                std::vector<std::size_t> heads{0};
                for (std::size_t k = 0; k < extra + 1; ++k) {
                    tails.push_back(pick(rng, 0, r.path.size() - 1));
                    heads.push_back(pick(rng, 0, l.path.size() - 1));
                }
                std::sort(tails.begin(), tails.end());
                std::sort(heads.begin(), heads.end());
                if (i == ni && j == nj) {
                    std::size_t p = pick(rng, 0, r.path.size() - 2);
                    std::size_t q = pick(rng, 1, l.path.size() - 1);
                    tails.push_back(p);
                    heads.push_back(q);
                    tails.push_back(pick(rng, p + 1, r.path.size() - 1));
                    heads.push_back(pick(rng, 0, q - 1));
                }
                for (std::size_t k = 0; k < tails.size(); ++k) {
                    add(i, j, r.path[tails[k]], l.path[heads[k]]);
                }
            }
        }
    }
    if (!spec.niche && trivault_niche(d, dec)) {
        return std::nullopt;
    }

    std::vector<Link*> links;
    for (std::size_t i = 0; i < 3; ++i) {
        for (Link& l : dec.r[i].leaf_links) {
            links.push_back(&l);
        }
        for (Link& l : dec.l[i].leaf_links) {
            links.push_back(&l);
        }
        if (dec.joins[i]) {
            links.push_back(&*dec.joins[i]);
        }
    }
    for (auto& x : dec.cross) {
        links.push_back(&x.link);
    }
    subdivide_links(d, links, spec.subdivisions, rng);
    return out;
}

}  // namespace

GeneratedTrivault generate_trivault(const TrivaultSpec& spec, std::uint64_t seed) {
    if (spec.size == 0) {
        throw std::invalid_argument("trivault parts need a positive size");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (auto t = trivault_attempt(spec, rng)) {
            return std::move(*t);
        }
    }
    throw std::runtime_error("no niche-free trivault found for this spec");
}

}  // namespace djc

namespace djc {

Digraph generate_tau1(const Tau1Spec& spec, std::uint64_t seed) {
    if (spec.segments == 0 || spec.paths == 0) {
        throw std::invalid_argument("tau1 instances need a segment and a path");
    }
    Rng rng(seed);
    Digraph d;
    // rank orders every vertex but 0; arcs other than those at 0 go forward.
    std::vector<double> rank;
    auto vertex = [&](const std::string& prefix, double r) {
        // Ties between parallel paths are broken by creation order.
        rank.push_back(r + 1e-6 * static_cast<double>(d.vertex_count()));
        return d.add_vertex(prefix + std::to_string(d.vertex_count()));
    };
    const VertexId a = vertex("a", 0);
    std::vector<std::vector<VertexId>> members(spec.segments);
    VertexId start = a;
    for (std::size_t x = 0; x < spec.segments; ++x) {
        const double base = static_cast<double>(x + 1);
        const VertexId end = x + 1 == spec.segments ? a : vertex("t", base + 1);
        members[x] = {start, end};
        for (std::size_t p = pick(rng, 1, spec.paths); p > 0; --p) {
            VertexId prev = start;
            const std::size_t len = pick(rng, 0, spec.length);
            for (std::size_t i = 0; i < len; ++i) {
                const VertexId v = vertex("p", base + static_cast<double>(i + 1) / (len + 1));
                members[x].push_back(v);
                d.add_arc(prev, v);
                prev = v;
            }
            d.add_arc(prev, end);
        }
        start = end;
    }
    auto rank_of = [&](VertexId v, std::size_t x) {
        // The split vertex counts as the start of segment 0 and the end of the last.
        return v == a ? (x == 0 ? 0.0 : static_cast<double>(spec.segments + 1)) : rank[v];
    };
    for (std::size_t x = 0; x < spec.segments; ++x) {
        const auto& m = members[x];
        for (std::size_t c = pick(rng, 0, spec.chords); c > 0; --c) {
            VertexId u = m[pick(rng, 0, m.size() - 1)];
            VertexId v = m[pick(rng, 0, m.size() - 1)];
            if (u == v) {
                continue;
            }
            if (rank_of(u, x) > rank_of(v, x)) {
                std::swap(u, v);
            }
            if (u == a && x + 1 == spec.segments && spec.segments > 1) {
                continue;
            }
            d.add_arc(u, v);
        }
    }
    const double top = static_cast<double>(spec.segments + 1);
    for (std::size_t e = pick(rng, 0, spec.externals); e > 0; --e) {
        const double r = top * static_cast<double>(pick(rng, 1, 999)) / 1000;
        const VertexId v = vertex("x", r);
        for (std::size_t k = pick(rng, 1, std::max<std::size_t>(spec.external_arcs, 1)); k > 0;
             --k) {
            const VertexId w = static_cast<VertexId>(pick(rng, 0, d.vertex_count() - 2));
            if (w == a) {
                if (pick(rng, 0, 1) == 0) {
                    d.add_arc(a, v);
                } else {
                    d.add_arc(v, a);
                }
            } else if (rank[w] < r) {
                d.add_arc(w, v);
            } else {
                d.add_arc(v, w);
            }
        }
    }
    return d;
}

}  // namespace djc
