#include "djc/structures.hpp"

#include "cover.hpp"
#include "djc/display.hpp"
#include "djc/traversal.hpp"

#include <algorithm>
#include <map>

namespace djc {

using detail::Cover;
using detail::link_head;
using detail::link_tail;

std::vector<VertexId> TrivaultPart::vertices() const {
    if (shape == Shape::Path) {
        return path;
    }
    std::vector<VertexId> out{root};
    out.insert(out.end(), leaves.begin(), leaves.end());
    return out;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Where each vertex sits: which R/L part, and its place in that part
// (index along a path; 0 for a star root, 1 + leaf index for a leaf).
struct PartIndex {
    std::vector<std::size_t> r_of;
    std::vector<std::size_t> l_of;
    std::vector<std::size_t> r_pos;
    std::vector<std::size_t> l_pos;

    explicit PartIndex(std::size_t n)
        : r_of(n, kNone), l_of(n, kNone), r_pos(n, kNone), l_pos(n, kNone) {}
};

PartIndex index_parts(const Digraph& d, const TrivaultDecomposition& dec) {
    PartIndex idx(d.vertex_count());
    auto place = [&](const TrivaultPart& part, std::size_t i, std::vector<std::size_t>& of,
                     std::vector<std::size_t>& pos) {
        auto put = [&](VertexId v, std::size_t p) {
            if (v < d.vertex_count()) {
                of[v] = i;
                pos[v] = p;
            }
        };
        if (part.shape == TrivaultPart::Shape::Path) {
            for (std::size_t k = 0; k < part.path.size(); ++k) {
                put(part.path[k], k);
            }
        } else {
            put(part.root, 0);
            for (std::size_t k = 0; k < part.leaves.size(); ++k) {
                put(part.leaves[k], k + 1);
            }
        }
    };
    for (std::size_t i = 0; i < 3; ++i) {
        place(dec.r[i], i, idx.r_of, idx.r_pos);
        place(dec.l[i], i, idx.l_of, idx.l_pos);
    }
    return idx;
}

bool is_star(const TrivaultPart& p) { return p.shape == TrivaultPart::Shape::Star; }

bool claim_part(Cover& cover, const TrivaultPart& part, bool outward, bool skip_root) {
    VertexId skip = skip_root ? part.root : kNoVertex;
    if (part.shape == TrivaultPart::Shape::Path) {
        if (part.path.empty()) {
            return cover.fail("empty path part");
        }
        if ((outward ? part.path.front() : part.path.back()) != part.root) {
            return cover.fail("path part does not end at its root");
        }
        return cover.path(part.path, part.path_arcs, skip);
    }
    if (part.leaves.empty() || part.leaf_links.size() != part.leaves.size()) {
        return cover.fail("a star part needs at least one leaf and one link per leaf");
    }
    if (!skip_root && !cover.vertex(part.root)) {
        return false;
    }
    for (std::size_t k = 0; k < part.leaves.size(); ++k) {
        if (!cover.vertex(part.leaves[k])) {
            return false;
        }
        bool ok = outward ? cover.link(part.leaf_links[k], part.root, part.leaves[k])
                          : cover.link(part.leaf_links[k], part.leaves[k], part.root);
        if (!ok) {
            return false;
        }
    }
    return true;
}

// Clauses (ii) - (v) of the definition for links from R_i to L_j.
Check check_pair(const Digraph& d, const TrivaultDecomposition& dec, const PartIndex& idx,
                 std::size_t i, std::size_t j) {
    const TrivaultPart& r = dec.r[i];
    const TrivaultPart& l = dec.l[j];
    std::vector<std::pair<VertexId, VertexId>> links;
    for (const auto& x : dec.cross) {
        if (x.from == i && x.to == j) {
            links.emplace_back(link_tail(d, x.link), link_head(d, x.link));
        }
    }
    const std::string where = " between R" + std::to_string(i) + " and L" + std::to_string(j);
    if (is_star(r) && is_star(l)) {
        std::map<VertexId, int> from_leaf;
        std::map<VertexId, int> to_leaf;
        for (auto [t, h] : links) {
            if (t != r.root) {
                if (h != l.root) {
                    return Check::fail("leaf link misses the in-star root" + where);
                }
                ++from_leaf[t];
            } else if (h != l.root) {
                ++to_leaf[h];
            }
        }
        for (VertexId leaf : r.leaves) {
            if (from_leaf[leaf] != 1) {
                return Check::fail("out-star leaf needs exactly one link" + where);
            }
        }
        for (VertexId leaf : l.leaves) {
            if (to_leaf[leaf] != 1) {
                return Check::fail("in-star leaf needs exactly one link" + where);
            }
        }
        return {};
    }
    if (is_star(r)) {
        std::map<VertexId, int> from_leaf;
        VertexId v = kNoVertex;
        for (auto [t, h] : links) {
            if (t != r.root) {
                if (v != kNoVertex && h != v) {
                    return Check::fail("out-star leaves reach different vertices" + where);
                }
                v = h;
                ++from_leaf[t];
            }
        }
        for (VertexId leaf : r.leaves) {
            if (from_leaf[leaf] != 1) {
                return Check::fail("out-star leaf needs exactly one link" + where);
            }
        }
        bool to_start = false;
        for (auto [t, h] : links) {
            if (t == r.root) {
                to_start = to_start || h == l.path.front();
                if (idx.l_pos[h] > idx.l_pos[v]) {
                    return Check::fail("root link lands after the selected vertex" + where);
                }
            }
        }
        return to_start ? Check{} : Check::fail("no link from the root to the path start" + where);
    }
    if (is_star(l)) {
        std::map<VertexId, int> to_leaf;
        VertexId v = kNoVertex;
        for (auto [t, h] : links) {
            if (h != l.root) {
                if (v != kNoVertex && t != v) {
                    return Check::fail("in-star leaves are fed from different vertices" + where);
                }
                v = t;
                ++to_leaf[h];
            }
        }
        for (VertexId leaf : l.leaves) {
            if (to_leaf[leaf] != 1) {
                return Check::fail("in-star leaf needs exactly one link" + where);
            }
        }
        bool from_end = false;
        for (auto [t, h] : links) {
            if (h == l.root) {
                from_end = from_end || t == r.path.back();
                if (idx.r_pos[t] < idx.r_pos[v]) {
                    return Check::fail("root link starts before the selected vertex" + where);
                }
            }
        }
        return from_end ? Check{} : Check::fail("no link from the path end to the root" + where);
    }
    bool from_end = false;
    bool to_start = false;
    for (auto [t, h] : links) {
        from_end = from_end || t == r.path.back();
        to_start = to_start || h == l.path.front();
    }
    if (!from_end || !to_start) {
        return Check::fail("path parts lack an end-to-part or part-to-start link" + where);
    }
    return {};
}

}  // namespace

Check verify_trivault(const Digraph& d, const TrivaultDecomposition& dec) {
    Cover cover(d);
    for (std::size_t i = 0; i < 3; ++i) {
        bool identified = !dec.joins[i].has_value();
        if (identified && dec.r[i].root != dec.l[i].root) {
            return Check::fail("identified roots differ");
        }
        if (!identified && dec.r[i].root == dec.l[i].root) {
            return Check::fail("joined roots coincide");
        }
        if (!claim_part(cover, dec.r[i], true, false) ||
            !claim_part(cover, dec.l[i], false, identified)) {
            return cover.result();
        }
        if (!identified && !cover.link(*dec.joins[i], dec.l[i].root, dec.r[i].root)) {
            return cover.result();
        }
    }
    PartIndex idx = index_parts(d, dec);
    for (const auto& x : dec.cross) {
        if (x.from >= 3 || x.to >= 3 || x.from == x.to) {
            return Check::fail("cross link with bad part indices");
        }
        if (!cover.link(x.link, kNoVertex, kNoVertex)) {
            return cover.result();
        }
        if (idx.r_of[link_tail(d, x.link)] != x.from || idx.l_of[link_head(d, x.link)] != x.to) {
            return Check::fail("cross link " + std::to_string(x.link.front()) +
                               " does not run from R to L as labelled");
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) {
                Check c = check_pair(d, dec, idx, i, j);
                if (!c) {
                    return c;
                }
            }
        }
    }
    cover.complete();
    return cover.result();
}

std::optional<TrivaultNiche> trivault_niche(const Digraph& d, const TrivaultDecomposition& dec) {
    PartIndex idx = index_parts(d, dec);
    auto between = [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < dec.cross.size(); ++k) {
            if (dec.cross[k].from == i && dec.cross[k].to == j) {
                out.push_back(k);
            }
        }
        return out;
    };
    auto tail_pos = [&](std::size_t k) { return idx.r_pos[link_tail(d, dec.cross[k].link)]; };
    auto head_pos = [&](std::size_t k) { return idx.l_pos[link_head(d, dec.cross[k].link)]; };

    auto niche_at = [&](char type, std::size_t i, std::size_t j,
                        std::size_t k) -> std::optional<TrivaultNiche> {
        // (a) crossing links between two paths
        if (type == 'a' && !is_star(dec.r[i]) && !is_star(dec.l[j])) {
            auto ij = between(i, j);
            for (std::size_t x : ij) {
                for (std::size_t y : ij) {
                    if (tail_pos(x) < tail_pos(y) && head_pos(x) > head_pos(y)) {
                        return TrivaultNiche{'a', i, j, k, {x, y}};
                    }
                }
            }
        }
        // (b) two links to L_j after the first in-neighbour of L_k on R_i
        if (type == 'b' && !is_star(dec.r[i])) {
            auto ik = between(i, k);
            if (!ik.empty()) {
                std::size_t first = kNone;
                for (std::size_t x : ik) {
                    first = std::min(first, tail_pos(x));
                }
                std::vector<std::size_t> later;
                for (std::size_t x : between(i, j)) {
                    if (tail_pos(x) > first) {
                        later.push_back(x);
                    }
                }
                if (later.size() >= 2) {
                    return TrivaultNiche{'b', i, j, k, {later[0], later[1]}};
                }
            }
        }
        // (c) two links from R_j before the last out-neighbour of R_k on L_i
        if (type == 'c' && !is_star(dec.l[i])) {
            auto ki = between(k, i);
            if (!ki.empty()) {
                std::size_t last = 0;
                for (std::size_t x : ki) {
                    last = std::max(last, head_pos(x));
                }
                std::vector<std::size_t> earlier;
                for (std::size_t x : between(j, i)) {
                    if (head_pos(x) < last) {
                        earlier.push_back(x);
                    }
                }
                if (earlier.size() >= 2) {
                    return TrivaultNiche{'c', i, j, k, {earlier[0], earlier[1]}};
                }
            }
        }
        return std::nullopt;
    };

    // One pass per niche type, so that crossings are reported first.
    for (char type : {'a', 'b', 'c'}) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) {
                    continue;
                }
                const std::size_t k = 3 - i - j;
                if (auto niche = niche_at(type, i, j, k)) {
                    return niche;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Arcs from `from` (a vertex of L_i) through c_i and b_i to `to` (a vertex
// of R_i).
std::vector<ArcId> through_part(const TrivaultDecomposition& dec, const PartIndex& idx,
                                std::size_t i, VertexId from, VertexId to) {
    std::vector<ArcId> arcs;
    const TrivaultPart& l = dec.l[i];
    const TrivaultPart& r = dec.r[i];
    if (is_star(l)) {
        if (from != l.root) {
            const Link& leaf = l.leaf_links[idx.l_pos[from] - 1];
            arcs.insert(arcs.end(), leaf.begin(), leaf.end());
        }
    } else {
        arcs.insert(arcs.end(), l.path_arcs.begin() + static_cast<std::ptrdiff_t>(idx.l_pos[from]),
                    l.path_arcs.end());
    }
    if (dec.joins[i]) {
        arcs.insert(arcs.end(), dec.joins[i]->begin(), dec.joins[i]->end());
    }
    if (is_star(r)) {
        if (to != r.root) {
            const Link& leaf = r.leaf_links[idx.r_pos[to] - 1];
            arcs.insert(arcs.end(), leaf.begin(), leaf.end());
        }
    } else {
        arcs.insert(arcs.end(), r.path_arcs.begin(),
                    r.path_arcs.begin() + static_cast<std::ptrdiff_t>(idx.r_pos[to]));
    }
    return arcs;
}

}  // namespace

std::vector<Dicycle> enumerate_trivault_dicycles(const Digraph& d,
                                                 const TrivaultDecomposition& dec) {
    PartIndex idx = index_parts(d, dec);
    std::array<std::array<std::vector<std::size_t>, 3>, 3> by_pair;
    for (std::size_t k = 0; k < dec.cross.size(); ++k) {
        by_pair[dec.cross[k].from][dec.cross[k].to].push_back(k);
    }
    // Closes a sequence of cross links into a dicycle, passing through the
    // part each link enters.
    auto close = [&](const std::vector<std::size_t>& seq) {
        Dicycle c;
        for (std::size_t t = 0; t < seq.size(); ++t) {
            const auto& x = dec.cross[seq[t]];
            const auto& y = dec.cross[seq[(t + 1) % seq.size()]];
            c.arcs.insert(c.arcs.end(), x.link.begin(), x.link.end());
            auto inner = through_part(dec, idx, x.to, link_head(d, x.link), link_tail(d, y.link));
            c.arcs.insert(c.arcs.end(), inner.begin(), inner.end());
        }
        return c;
    };
    std::vector<Dicycle> out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            for (std::size_t e : by_pair[i][j]) {
                for (std::size_t f : by_pair[j][i]) {
                    out.push_back(close({e, f}));
                }
            }
        }
    }
    for (const auto& order : {std::array<std::size_t, 3>{0, 1, 2}, std::array<std::size_t, 3>{0, 2, 1}}) {
        for (std::size_t e : by_pair[order[0]][order[1]]) {
            for (std::size_t f : by_pair[order[1]][order[2]]) {
                for (std::size_t g : by_pair[order[2]][order[0]]) {
                    out.push_back(close({e, f, g}));
                }
            }
        }
    }
    return out;
}

std::optional<Certificate> trivault_niche_certificate(const Digraph& d,
                                                      const TrivaultDecomposition& dec) {
    for (const Dicycle& b : enumerate_trivault_dicycles(d, dec)) {
        if (auto c = find_undirected_cycle(d, arc_vertex_mask(d, b.arcs))) {
            return Certificate{b, *c};
        }
    }
    return std::nullopt;
}

namespace {

// Reads a member tree (in-tree when `inward`) as a star and/or a path.
std::vector<TrivaultPart> shapes_of(const Digraph& s, VertexId root,
                                    const std::vector<ArcId>& arcs, bool inward) {
    std::vector<TrivaultPart> out;
    auto child_of = [&](ArcId a) { return inward ? s.arc(a).tail : s.arc(a).head; };
    auto parent_of = [&](ArcId a) { return inward ? s.arc(a).head : s.arc(a).tail; };

    bool star = !arcs.empty();
    for (ArcId a : arcs) {
        star = star && parent_of(a) == root;
    }
    if (star) {
        TrivaultPart p;
        p.shape = TrivaultPart::Shape::Star;
        p.root = root;
        for (ArcId a : arcs) {
            p.leaves.push_back(child_of(a));
            p.leaf_links.push_back({a});
        }
        out.push_back(std::move(p));
    }

    std::map<VertexId, ArcId> child_arc;
    bool path = true;
    for (ArcId a : arcs) {
        path = path && child_arc.emplace(parent_of(a), a).second;
    }
    if (path) {
        TrivaultPart p;
        p.root = root;
        std::vector<VertexId> vs{root};
        std::vector<ArcId> as;
        for (auto it = child_arc.find(root); it != child_arc.end(); it = child_arc.find(vs.back())) {
            as.push_back(it->second);
            vs.push_back(child_of(it->second));
        }
        if (inward) {
            std::reverse(vs.begin(), vs.end());
            std::reverse(as.begin(), as.end());
        }
        p.path = std::move(vs);
        p.path_arcs = std::move(as);
        out.push_back(std::move(p));
    }
    return out;
}

// Smoothed-level part to original digraph.
TrivaultPart lift_part(const Digraph& d, const Smoothed& sm, const TrivaultPart& p) {
    TrivaultPart out;
    out.shape = p.shape;
    out.root = sm.vertex_origin[p.root];
    for (VertexId leaf : p.leaves) {
        out.leaves.push_back(sm.vertex_origin[leaf]);
    }
    for (const Link& l : p.leaf_links) {
        out.leaf_links.push_back(sm.arc_paths[l.front()]);
    }
    if (!p.path.empty()) {
        out.path.push_back(sm.vertex_origin[p.path.front()]);
        for (ArcId sa : p.path_arcs) {
            for (ArcId a : sm.arc_paths[sa]) {
                out.path_arcs.push_back(a);
                out.path.push_back(d.arc(a).head);
            }
        }
    }
    return out;
}

struct MemberReading {
    TrivaultPart l;
    TrivaultPart r;
    std::optional<ArcId> join;
};

}  // namespace

std::optional<TrivaultDecomposition> recognize_trivault(const Digraph& d) {
    Smoothed sm = smooth_1_1(d);
    const Digraph& s = sm.graph;
    for (VertexId v = 0; v < s.vertex_count(); ++v) {
        if (s.has_loop(v)) {
            return std::nullopt;
        }
    }
    if (s.vertex_count() < 3 || strong_components(s).members.size() != 1) {
        return std::nullopt;
    }
    Display disp = reduce_contract(s);
    const Digraph& r = disp.reduced;
    if (r.vertex_count() != 3) {
        return std::nullopt;
    }
    std::array<std::array<int, 3>, 3> count{};
    for (const Arc& a : r.arcs()) {
        if (a.is_loop()) {
            return std::nullopt;
        }
        ++count[a.tail][a.head];
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j && count[i][j] == 0) {
                return std::nullopt;
            }
        }
    }

    std::array<std::vector<MemberReading>, 3> readings;
    for (VertexId m = 0; m < 3; ++m) {
        for (const MemberSplit& split : member_splits(s, disp, m)) {
            for (const TrivaultPart& l : shapes_of(s, split.in_root, split.in_arcs, true)) {
                for (const TrivaultPart& rp : shapes_of(s, split.out_root, split.out_arcs, false)) {
                    readings[m].push_back(MemberReading{l, rp, split.root_arc});
                }
            }
        }
        if (readings[m].empty()) {
            return std::nullopt;
        }
    }

    std::vector<TrivaultCrossLink> cross;
    for (ArcId ra = 0; ra < r.arc_count(); ++ra) {
        ArcId sa = disp.arc_origin[ra];
        cross.push_back(TrivaultCrossLink{r.arc(ra).tail, r.arc(ra).head, sm.arc_paths[sa]});
    }
    for (const auto& m0 : readings[0]) {
        for (const auto& m1 : readings[1]) {
            for (const auto& m2 : readings[2]) {
                TrivaultDecomposition dec;
                std::size_t i = 0;
                for (const MemberReading* m : {&m0, &m1, &m2}) {
                    dec.l[i] = lift_part(d, sm, m->l);
                    dec.r[i] = lift_part(d, sm, m->r);
                    if (m->join) {
                        dec.joins[i] = sm.arc_paths[*m->join];
                    }
                    ++i;
                }
                dec.cross = cross;
                if (verify_trivault(d, dec)) {
                    return dec;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace djc
