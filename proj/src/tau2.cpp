#include "djc/tau2.hpp"

#include "djc/linkage.hpp"
#include "djc/oracle.hpp"
#include "djc/traversal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace djc {

std::string to_string(SolveResult::Kind k) {
    switch (k) {
        case SolveResult::Kind::Yes:
            return "yes";
        case SolveResult::Kind::No:
            return "no";
        case SolveResult::Kind::Exceeded:
            return "exceeded";
    }
    return "?";
}

namespace {

constexpr std::size_t kNowhere = static_cast<std::size_t>(-1);

std::string unused_name(const Digraph& d, std::string name) {
    while (d.find_vertex(name)) {
        name += "'";
    }
    return name;
}

// A dicycle of d avoiding `avoid`, as a certificate half.
std::optional<Dicycle> dicycle_avoiding(const Digraph& d, std::initializer_list<VertexId> avoid) {
    VertexMask removed(d.vertex_count(), false);
    for (VertexId v : avoid) {
        removed[v] = true;
    }
    return find_dicycle(d, removed);
}

}  // namespace

std::variant<Certificate, ExternalModel> preprocess_external(const Digraph& d,
                                                             const VertexMask& core) {
    const std::size_t n = d.vertex_count();
    if (core.size() != n) {
        throw std::invalid_argument("core mask has the wrong size");
    }
    StrongComponents scc = strong_components(d);
    std::size_t comp = kNowhere;
    std::size_t size = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!core[v]) {
            continue;
        }
        ++size;
        if (comp == kNowhere) {
            comp = scc.component[v];
        } else if (scc.component[v] != comp) {
            throw std::invalid_argument("core vertices lie in different strong components");
        }
    }
    if (comp == kNowhere || scc.members[comp].size() != size || !scc.nontrivial[comp]) {
        throw std::invalid_argument("core is not a nontrivial strong component");
    }
    VertexMask outside(n, false);
    for (VertexId v = 0; v < n; ++v) {
        outside[v] = !core[v];
    }

    // The rest of the digraph must be a forest.
    if (auto c = find_undirected_cycle(d, core)) {
        auto b = find_dicycle(d, outside);
        if (!b) {
            throw std::invalid_argument("core has no dicycle");
        }
        return Certificate{*b, *c};
    }

    DerivedGraph sub = induced_subgraph(d, core);
    ExternalModel m;
    m.core = sub.graph;
    m.graph = sub.graph;
    m.core_vertices = sub.graph.vertex_count();
    m.core_arcs = sub.graph.arc_count();
    m.core_origin = sub.vertex_origin;
    m.arc_origin = sub.arc_origin;
    std::vector<VertexId> to_core(n, kNoVertex);
    for (VertexId v = 0; v < m.core_vertices; ++v) {
        to_core[sub.vertex_origin[v]] = v;
    }

    // Multiarcs of the core whose ends are not a transversal.
    std::map<std::pair<VertexId, VertexId>, ArcId> first_copy;
    for (ArcId a = 0; a < m.core_arcs; ++a) {
        const Arc& arc = m.core.arc(a);
        if (arc.is_loop()) {
            continue;
        }
        auto [it, fresh] = first_copy.emplace(std::make_pair(arc.tail, arc.head), a);
        if (!fresh && !is_transversal(m.core, {arc.tail, arc.head})) {
            auto b = dicycle_avoiding(m.core, {arc.tail, arc.head});
            Certificate c{*b, UndirectedCycle{{it->second, a}}};
            m.original = d;
            return lift_certificate(m, c);
        }
    }

    for (const auto& members : undirected_components(d, outside)) {
        VertexMask in_comp(n, false);
        for (VertexId v : members) {
            in_comp[v] = true;
        }
        // Arcs between this component and the core, by core end.
        std::vector<std::pair<VertexId, ArcId>> touching;
        for (VertexId v : members) {
            for (ArcId a : d.out_arcs(v)) {
                if (core[d.arc(a).head]) {
                    touching.emplace_back(to_core[d.arc(a).head], a);
                }
            }
            for (ArcId a : d.in_arcs(v)) {
                if (core[d.arc(a).tail]) {
                    touching.emplace_back(to_core[d.arc(a).tail], a);
                }
            }
        }
        std::sort(touching.begin(), touching.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });
        std::map<VertexId, ArcId> seen;
        for (auto [u, a] : touching) {
            auto [it, fresh] = seen.emplace(u, a);
            if (fresh) {
                continue;
            }
            // Two arcs between the component and u close a cycle through u.
            if (auto b = dicycle_avoiding(m.core, {u})) {
                Certificate c;
                for (ArcId x : b->arcs) {
                    c.dicycle.arcs.push_back(m.arc_origin[x]);
                }
                VertexId x1 = in_comp[d.arc(it->second).tail] ? d.arc(it->second).tail
                                                              : d.arc(it->second).head;
                VertexId x2 = in_comp[d.arc(a).tail] ? d.arc(a).tail : d.arc(a).head;
                c.cycle.arcs.push_back(it->second);
                auto inner = undirected_path(d, x1, x2, in_comp);
                c.cycle.arcs.insert(c.cycle.arcs.end(), inner->begin(), inner->end());
                c.cycle.arcs.push_back(a);
                return c;
            }
        }
        if (seen.size() <= 1) {
            continue;  // on no cycle of the underlying graph through the core
        }
        VertexId alpha = m.graph.add_vertex(unused_name(m.graph, "~" + d.name(members.front())));
        m.external_members.push_back(members);
        for (auto [u, a] : touching) {
            m.graph.add_arc(alpha, u);
            m.arc_origin.push_back(a);
        }
    }
    m.original = d;
    return m;
}

Certificate lift_certificate(const ExternalModel& m, const Certificate& c) {
    const Digraph& d = m.original;
    Certificate out;
    for (ArcId a : c.dicycle.arcs) {
        out.dicycle.arcs.push_back(m.arc_origin[a]);
    }
    auto walk = cycle_vertices(m.graph, c.cycle.arcs);
    if (!walk) {
        throw std::invalid_argument("cycle of the model is not closed");
    }
    const std::size_t len = c.cycle.arcs.size();
    // The original endpoint, inside the component of an external vertex,
    // of a model arc leaving it.
    auto inner_end = [&](ArcId model_arc, const VertexMask& comp) {
        const Arc& arc = d.arc(m.arc_origin[model_arc]);
        return comp[arc.tail] ? arc.tail : arc.head;
    };
    for (std::size_t k = 0; k < len; ++k) {
        out.cycle.arcs.push_back(m.arc_origin[c.cycle.arcs[k]]);
        VertexId next = (*walk)[(k + 1) % len];
        if (!m.is_external(next)) {
            continue;
        }
        VertexMask comp(d.vertex_count(), false);
        for (VertexId v : m.external_members[next - m.core_vertices]) {
            comp[v] = true;
        }
        VertexId from = inner_end(c.cycle.arcs[k], comp);
        VertexId to = inner_end(c.cycle.arcs[(k + 1) % len], comp);
        auto path = undirected_path(d, from, to, comp);
        out.cycle.arcs.insert(out.cycle.arcs.end(), path->begin(), path->end());
    }
    return out;
}

namespace {

// A vault read with every central link folded into the wall it leaves, so
// that central links are single arcs and only cross links have inner
// vertices.
class VaultFrame {
public:
    VaultFrame(const Digraph& d, const VaultDecomposition& dec)
        : d_(d), dec_(dec), ell_(dec.ell()), wall_(d.vertex_count(), kNowhere),
          pos_(d.vertex_count(), kNowhere), link_(d.vertex_count(), {kNowhere, 0}) {
        for (std::size_t i = 0; i < ell_; ++i) {
            Wall& w = dec_.walls[i];
            Link& central = dec_.central_links[i];
            for (std::size_t k = 0; k + 1 < central.size(); ++k) {
                w.arcs.push_back(central[k]);
                w.vertices.push_back(d.arc(central[k]).head);
            }
            central.erase(central.begin(), central.end() - 1);
            for (std::size_t k = 0; k < w.vertices.size(); ++k) {
                wall_[w.vertices[k]] = i;
                pos_[w.vertices[k]] = k;
            }
        }
        for (std::size_t i = 0; i < ell_; ++i) {
            for (std::size_t k = 0; k < dec_.cross_links[i].size(); ++k) {
                const Link& l = dec_.cross_links[i][k];
                for (std::size_t t = 0; t + 1 < l.size(); ++t) {
                    link_[d.arc(l[t]).head] = {i, k};
                }
            }
        }
    }

    std::size_t ell() const { return ell_; }
    std::size_t wall(VertexId v) const { return wall_[v]; }
    std::size_t pos(VertexId v) const { return pos_[v]; }
    std::size_t next(std::size_t i, std::size_t by = 1) const { return (i + by) % ell_; }
    std::size_t prev(std::size_t i, std::size_t by = 1) const { return (i + ell_ - by) % ell_; }
    const VaultDecomposition& dec() const { return dec_; }

    const std::vector<Link>& links(std::size_t i) const { return dec_.cross_links[i]; }
    std::size_t tail_pos(const Link& l) const { return pos_[d_.arc(l.front()).tail]; }
    std::size_t head_pos(const Link& l) const { return pos_[d_.arc(l.back()).head]; }

    // Last head on wall i of a link from wall i-1, with that link.
    std::pair<std::size_t, const Link*> last_head(std::size_t i) const {
        std::pair<std::size_t, const Link*> best{0, nullptr};
        for (const Link& l : links(prev(i))) {
            if (!best.second || head_pos(l) > best.first) {
                best = {head_pos(l), &l};
            }
        }
        return best;
    }

    // First tail on wall i of a link to wall i+1, with that link.
    std::pair<std::size_t, const Link*> first_tail(std::size_t i) const {
        std::pair<std::size_t, const Link*> best{0, nullptr};
        for (const Link& l : links(i)) {
            if (!best.second || tail_pos(l) < best.first) {
                best = {tail_pos(l), &l};
            }
        }
        return best;
    }

    // Link from P_i before position pu to P_{i+1} after position pv.
    const Link* crossing(std::size_t i, std::size_t pu, std::size_t pv) const {
        for (const Link& l : links(i)) {
            if (tail_pos(l) < pu && head_pos(l) > pv) {
                return &l;
            }
        }
        return nullptr;
    }

    bool pin_ordered(VertexId u, VertexId v) const {
        if (wall_[u] == kNowhere || wall_[v] == kNowhere || wall_[v] != next(wall_[u])) {
            return false;
        }
        const std::size_t i = wall_[u];
        return pos_[u] >= last_head(i).first && pos_[v] <= first_tail(next(i)).first &&
               !crossing(i, pos_[u], pos_[v]);
    }

    // Dicycle through the first link from wall i-2 to i-1; it avoids
    // walls i, i+2, ..., i-3.
    Dicycle avoiding_from(std::size_t i) const {
        std::size_t w = prev(i, 2);
        return vault_cycle_via_cross_link(d_, dec_, w, links(w).front());
    }

    std::vector<ArcId> forward(std::size_t from, std::size_t from_pos, std::size_t to,
                               std::size_t to_pos) const {
        return vault_forward_path(dec_, from, from_pos, to, to_pos);
    }

    // Arcs of wall i between two positions, in walk order.
    std::vector<ArcId> segment(std::size_t i, std::size_t from, std::size_t to) const {
        const auto& arcs = dec_.walls[i].arcs;
        if (from <= to) {
            return {arcs.begin() + static_cast<std::ptrdiff_t>(from),
                    arcs.begin() + static_cast<std::ptrdiff_t>(to)};
        }
        return {arcs.rbegin() + static_cast<std::ptrdiff_t>(arcs.size() - from),
                arcs.rbegin() + static_cast<std::ptrdiff_t>(arcs.size() - to)};
    }

    // Ways from v to a wall: (wall vertex, arcs from v to it in walk order).
    std::vector<std::pair<VertexId, std::vector<ArcId>>> anchors(VertexId v) const {
        if (wall_[v] != kNowhere) {
            return {{v, {}}};
        }
        auto [i, k] = link_[v];
        const Link& l = dec_.cross_links[i][k];
        std::size_t at = 0;
        while (d_.arc(l[at]).head != v) {
            ++at;
        }
        std::vector<ArcId> back(l.rend() - static_cast<std::ptrdiff_t>(at) - 1, l.rend());
        std::vector<ArcId> ahead(l.begin() + static_cast<std::ptrdiff_t>(at) + 1, l.end());
        return {{d_.arc(l.front()).tail, back}, {d_.arc(l.back()).head, ahead}};
    }

    std::pair<std::size_t, std::size_t> link_of(VertexId v) const { return link_[v]; }

private:
    const Digraph& d_;
    VaultDecomposition dec_;
    std::size_t ell_;
    std::vector<std::size_t> wall_;
    std::vector<std::size_t> pos_;
    std::vector<std::pair<std::size_t, std::size_t>> link_;
};

std::vector<ArcId> reversed(std::vector<ArcId> arcs) {
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
}

std::vector<ArcId> concat(std::initializer_list<std::vector<ArcId>> parts) {
    std::vector<ArcId> out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

// The certificate for a non-transversal pair {u, v} of neighbours of an
// external vertex, following the case analysis on the vault structure.
// `au` and `av` are the model arcs from the external vertex to u and v.
std::optional<Certificate> clasp_certificate(const VaultFrame& f, VertexId u, VertexId v,
                                             ArcId au, ArcId av) {
    const std::size_t ell = f.ell();
    const auto no_link = std::make_pair(kNowhere, std::size_t{0});

    if (f.wall(u) != kNowhere && f.wall(v) != kNowhere &&
        (f.wall(v) == f.next(f.wall(u)) || f.wall(u) == f.next(f.wall(v)))) {
        if (f.wall(u) == f.next(f.wall(v))) {
            std::swap(u, v);
            std::swap(au, av);
        }
        const std::size_t i = f.wall(u);
        const std::size_t j = f.next(i);
        // u on P_i and v on P_{i+1}; the cycle runs from v around to u.
        auto around = concat({f.forward(j, f.pos(v), i, f.pos(u)), {au, av}});
        auto [bprime, zb] = f.last_head(i);
        if (f.pos(u) < bprime) {
            Dicycle b{concat({f.forward(i, bprime, f.prev(i), f.tail_pos(*zb)), *zb})};
            return Certificate{b, UndirectedCycle{around}};
        }
        auto [cprime, cz] = f.first_tail(j);
        if (f.pos(v) > cprime) {
            Dicycle b{concat({f.forward(f.next(j), f.head_pos(*cz), j, cprime), *cz})};
            return Certificate{b, UndirectedCycle{around}};
        }
        const Link* pq = f.crossing(i, f.pos(u), f.pos(v));
        if (!pq) {
            return std::nullopt;
        }
        Dicycle b{concat({f.forward(j, f.head_pos(*pq), i, f.tail_pos(*pq)), *pq})};
        return Certificate{b, UndirectedCycle{concat({f.forward(i, f.pos(u), j, f.pos(v)),
                                                      {av, au}})}};
    }

    // Both inside one link: the stretch of link between them.
    if (f.link_of(u) != no_link && f.link_of(u) == f.link_of(v)) {
        for (const auto& [wu, pu] : f.anchors(u)) {
            for (const auto& [wv, pv] : f.anchors(v)) {
                if (wu == wv && pu.size() < pv.size()) {
                    // pu is a prefix of the way from v: the rest joins them.
                    std::vector<ArcId> between(pv.begin(), pv.end() - pu.size());
                    return Certificate{f.avoiding_from(f.wall(wu)),
                                       UndirectedCycle{concat({between, {au, av}})}};
                }
            }
        }
        return std::nullopt;
    }

    for (const auto& [wu, pu] : f.anchors(u)) {
        for (const auto& [wv, pv] : f.anchors(v)) {
            const std::size_t iu = f.wall(wu);
            const std::size_t iv = f.wall(wv);
            if (iu == iv) {
                auto c = concat({pu, f.segment(iu, f.pos(wu), f.pos(wv)), reversed(pv), {av, au}});
                return Certificate{f.avoiding_from(iu), UndirectedCycle{c}};
            }
            const std::size_t gap = (iv + ell - iu) % ell;
            if (gap == 1 || gap == ell - 1) {
                continue;
            }
            if (gap % 2 == 0) {
                auto c = concat({pu, f.forward(iu, f.pos(wu), iv, f.pos(wv)), reversed(pv),
                                 {av, au}});
                return Certificate{f.avoiding_from(iu), UndirectedCycle{c}};
            }
            auto c = concat({pv, f.forward(iv, f.pos(wv), iu, f.pos(wu)), reversed(pu),
                             {au, av}});
            return Certificate{f.avoiding_from(iv), UndirectedCycle{c}};
        }
    }
    return std::nullopt;
}

// Search used when the constructed certificate does not verify: the
// dicycles avoiding a wall, then the oracle on the model.
SolveResult vault_fallback(const ExternalModel& m, const VaultFrame& f) {
    for (std::size_t i = 0; i < f.ell(); ++i) {
        Dicycle b = f.avoiding_from(i);
        if (auto c = find_undirected_cycle(m.graph, arc_vertex_mask(m.graph, b.arcs))) {
            auto r = SolveResult::yes(lift_certificate(m, Certificate{b, *c}), "tau2-vault");
            r.fallbacks = 1;
            return r;
        }
    }
    OracleOutcome o = oracle_solve(m.graph);
    SolveResult r;
    r.route = "tau2-vault";
    r.fallbacks = 1;
    if (o.kind == OracleOutcome::Kind::Yes) {
        r.kind = SolveResult::Kind::Yes;
        r.certificate = lift_certificate(m, *o.certificate);
    } else {
        r.kind = o.kind == OracleOutcome::Kind::No ? SolveResult::Kind::No
                                                   : SolveResult::Kind::Exceeded;
    }
    return r;
}

// Model arc from alpha to u.
ArcId arc_to(const ExternalModel& m, VertexId alpha, VertexId u) {
    for (ArcId a : m.graph.out_arcs(alpha)) {
        if (m.graph.arc(a).head == u) {
            return a;
        }
    }
    throw std::invalid_argument("vertex is not a neighbour of the external vertex");
}

std::vector<VertexId> neighbours(const ExternalModel& m, VertexId alpha) {
    std::vector<VertexId> out;
    for (ArcId a : m.graph.out_arcs(alpha)) {
        out.push_back(m.graph.arc(a).head);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SolveResult solve_by_dicycles(const ExternalModel& m, const std::vector<Dicycle>& cycles,
                              const std::string& route) {
    for (const Dicycle& b : cycles) {
        if (auto c = find_undirected_cycle(m.graph, arc_vertex_mask(m.graph, b.arcs))) {
            return SolveResult::yes(lift_certificate(m, Certificate{b, *c}), route);
        }
    }
    return SolveResult::no(route);
}

}  // namespace

bool is_pin(const ExternalModel& m, const VaultDecomposition& dec, VertexId alpha, VertexId u,
            VertexId v) {
    if (!m.is_external(alpha) || alpha >= m.graph.vertex_count() || u == v) {
        throw std::invalid_argument("is_pin needs an external vertex and two distinct vertices");
    }
    arc_to(m, alpha, u);
    arc_to(m, alpha, v);
    VaultFrame f(m.core, dec);
    return f.pin_ordered(u, v) || f.pin_ordered(v, u);
}

std::optional<Certificate> vault_clasp_certificate(const ExternalModel& m,
                                                   const VaultDecomposition& dec,
                                                   VertexId alpha, VertexId u, VertexId v) {
    VaultFrame f(m.core, dec);
    auto cert = clasp_certificate(f, u, v, arc_to(m, alpha, u), arc_to(m, alpha, v));
    if (!cert || !verify_certificate(m.graph, *cert)) {
        return std::nullopt;
    }
    return lift_certificate(m, *cert);
}

SolveResult solve_vault_case(const ExternalModel& m, const VaultDecomposition& dec) {
    VaultFrame f(m.core, dec);
    for (VertexId alpha = static_cast<VertexId>(m.core_vertices); alpha < m.graph.vertex_count();
         ++alpha) {
        auto nb = neighbours(m, alpha);
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                VertexId u = nb[x];
                VertexId v = nb[y];
                if (is_transversal(m.core, {u, v})) {
                    continue;
                }
                auto cert = clasp_certificate(f, u, v, arc_to(m, alpha, u), arc_to(m, alpha, v));
                if (cert && verify_certificate(m.graph, *cert)) {
                    return SolveResult::yes(lift_certificate(m, *cert), "tau2-vault");
                }
                return vault_fallback(m, f);
            }
        }
    }
    return SolveResult::no("tau2-vault");
}

SolveResult solve_multiwheel_case(const ExternalModel& m, const MultiwheelDecomposition& dec) {
    return solve_by_dicycles(m, enumerate_multiwheel_dicycles(m.core, dec), "tau2-multiwheel");
}

SolveResult solve_trivault_case(const ExternalModel& m, const TrivaultDecomposition& dec) {
    return solve_by_dicycles(m, enumerate_trivault_dicycles(m.core, dec), "tau2-trivault");
}

SolveResult solve_tau2(const Digraph& d, const TauInfo& tau, std::size_t oracle_cap) {
    if (tau.tau != TauClass::Two) {
        throw std::invalid_argument("solve_tau2 needs transversal number 2");
    }
    StrongComponents scc = strong_components(d);
    std::vector<std::size_t> nontrivial;
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (scc.nontrivial[c]) {
            nontrivial.push_back(c);
        }
    }
    auto within = [&](std::size_t comp) {
        VertexMask removed(d.vertex_count(), true);
        for (VertexId v : scc.members[comp]) {
            removed[v] = false;
        }
        return removed;
    };
    if (nontrivial.size() >= 2) {
        auto b = find_dicycle(d, within(nontrivial[0]));
        auto c = find_dicycle(d, within(nontrivial[1]));
        return SolveResult::yes(Certificate{*b, UndirectedCycle{c->arcs}}, "two-scc");
    }
    Intercyclicity inter = is_intercyclic(d, tau);
    if (!inter.intercyclic) {
        const auto& [b, c] = *inter.disjoint_pair;
        return SolveResult::yes(Certificate{b, UndirectedCycle{c.arcs}}, "not-intercyclic");
    }

    VertexMask core(d.vertex_count(), false);
    for (VertexId v : scc.members[nontrivial.at(0)]) {
        core[v] = true;
    }
    DerivedGraph sub = induced_subgraph(d, core);
    Classification cls = recognize_family(sub.graph);
    auto lift_core = [&](const Certificate& c) {
        Certificate out;
        for (ArcId a : c.dicycle.arcs) {
            out.dicycle.arcs.push_back(sub.arc_origin[a]);
        }
        for (ArcId a : c.cycle.arcs) {
            out.cycle.arcs.push_back(sub.arc_origin[a]);
        }
        return out;
    };
    if (cls.family == Family::None || cls.has_niche) {
        if (cls.niche_certificate) {
            return SolveResult::yes(lift_core(*cls.niche_certificate), "tau2-core-yes");
        }
        OracleOutcome o = oracle_solve(sub.graph, oracle_cap);
        if (o.kind == OracleOutcome::Kind::Yes) {
            return SolveResult::yes(lift_core(*o.certificate), "tau2-core-yes");
        }
        if (o.kind == OracleOutcome::Kind::Exceeded) {
            SolveResult r;
            r.kind = SolveResult::Kind::Exceeded;
            r.route = "tau2-core-yes";
            return r;
        }
        // The core is a no-instance outside the recognized families.
        OracleOutcome whole = oracle_solve(d, oracle_cap);
        SolveResult r;
        r.route = "oracle-fallback";
        r.fallbacks = 1;
        r.certificate = whole.certificate;
        r.kind = whole.kind == OracleOutcome::Kind::Yes  ? SolveResult::Kind::Yes
                 : whole.kind == OracleOutcome::Kind::No ? SolveResult::Kind::No
                                                         : SolveResult::Kind::Exceeded;
        return r;
    }

    const std::string route = "tau2-" + to_string(cls.family);
    auto pre = preprocess_external(d, core);
    if (auto* cert = std::get_if<Certificate>(&pre)) {
        return SolveResult::yes(*cert, route);
    }
    const ExternalModel& m = std::get<ExternalModel>(pre);
    switch (cls.family) {
        case Family::Vault:
            return solve_vault_case(m, *cls.vault);
        case Family::Multiwheel:
            return solve_multiwheel_case(m, *cls.multiwheel);
        case Family::Trivault:
            return solve_trivault_case(m, *cls.trivault);
        case Family::None:
            break;
    }
    throw std::logic_error("unreachable family");
}

}  // namespace djc
