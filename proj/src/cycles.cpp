#include "djc/cycles.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace djc {

namespace {

void check_ids(const Digraph& d, const std::vector<ArcId>& arcs) {
    for (ArcId a : arcs) {
        if (a >= d.arc_count()) {
            throw std::out_of_range("arc id " + std::to_string(a) + " does not exist");
        }
    }
}

bool distinct(const std::vector<ArcId>& arcs) {
    std::set<ArcId> seen(arcs.begin(), arcs.end());
    return seen.size() == arcs.size();
}

}  // namespace

bool is_dicycle(const Digraph& d, const std::vector<ArcId>& arcs) {
    check_ids(d, arcs);
    if (arcs.empty() || !distinct(arcs)) {
        return false;
    }
    std::vector<bool> seen(d.vertex_count(), false);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = d.arc(arcs[i]);
        const Arc& next = d.arc(arcs[(i + 1) % arcs.size()]);
        if (a.head != next.tail || seen[a.tail]) {
            return false;
        }
        seen[a.tail] = true;
    }
    return true;
}

std::vector<VertexId> dicycle_vertices(const Digraph& d, const std::vector<ArcId>& arcs) {
    std::vector<VertexId> out;
    out.reserve(arcs.size());
    for (ArcId a : arcs) {
        out.push_back(d.arc(a).tail);
    }
    return out;
}

std::optional<std::vector<VertexId>> cycle_vertices(const Digraph& d,
                                                    const std::vector<ArcId>& arcs) {
    if (arcs.empty()) {
        return std::nullopt;
    }
    const Arc& first = d.arc(arcs[0]);
    if (arcs.size() == 1) {
        if (!first.is_loop()) {
            return std::nullopt;
        }
        return std::vector<VertexId>{first.tail};
    }
    // Try both endpoints of the first arc as the walk's starting vertex.
    for (VertexId start : {first.tail, first.head}) {
        std::vector<VertexId> walk{start};
        VertexId cur = start;
        bool ok = true;
        for (ArcId id : arcs) {
            const Arc& a = d.arc(id);
            if (a.is_loop()) {
                ok = false;
                break;
            }
            if (a.tail == cur) {
                cur = a.head;
            } else if (a.head == cur) {
                cur = a.tail;
            } else {
                ok = false;
                break;
            }
            walk.push_back(cur);
        }
        if (ok && cur == start) {
            walk.pop_back();
            return walk;
        }
        if (first.tail == first.head) {
            break;
        }
    }
    return std::nullopt;
}

bool is_undirected_cycle(const Digraph& d, const std::vector<ArcId>& arcs) {
    check_ids(d, arcs);
    if (arcs.empty() || !distinct(arcs)) {
        return false;
    }
    auto walk = cycle_vertices(d, arcs);
    if (!walk) {
        return false;
    }
    std::set<VertexId> seen(walk->begin(), walk->end());
    return seen.size() == walk->size();
}

VertexMask arc_vertex_mask(const Digraph& d, const std::vector<ArcId>& arcs) {
    VertexMask mask(d.vertex_count(), false);
    for (ArcId a : arcs) {
        mask[d.arc(a).tail] = true;
        mask[d.arc(a).head] = true;
    }
    return mask;
}

std::string certificate_problem(const Digraph& d, const Certificate& cert) {
    check_ids(d, cert.dicycle.arcs);
    check_ids(d, cert.cycle.arcs);
    if (!is_dicycle(d, cert.dicycle.arcs)) {
        return "dicycle arcs do not form a directed cycle";
    }
    if (!is_undirected_cycle(d, cert.cycle.arcs)) {
        return "cycle arcs do not form a cycle of the underlying graph";
    }
    VertexMask b = arc_vertex_mask(d, cert.dicycle.arcs);
    for (ArcId a : cert.cycle.arcs) {
        if (b[d.arc(a).tail] || b[d.arc(a).head]) {
            return "cycles share a vertex";
        }
    }
    return {};
}

bool verify_certificate(const Digraph& d, const Certificate& cert) {
    return certificate_problem(d, cert).empty();
}

namespace {

void write_ids(std::ostringstream& out, const std::vector<ArcId>& ids) {
    for (ArcId a : ids) {
        out << ' ' << a;
    }
    out << '\n';
}

std::vector<ArcId> read_ids(std::string_view rest, std::size_t line) {
    std::vector<ArcId> ids;
    std::istringstream in{std::string(rest)};
    std::string tok;
    while (in >> tok) {
        ArcId v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ParseError(line, "bad arc id '" + tok + "'");
        }
        ids.push_back(v);
    }
    return ids;
}

}  // namespace

std::string format_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "dicycle:";
    write_ids(out, cert.dicycle.arcs);
    out << "cycle:";
    write_ids(out, cert.cycle.arcs);
    return out.str();
}

Certificate parse_certificate(std::string_view text) {
    Certificate cert;
    bool have_dicycle = false;
    bool have_cycle = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) {
            view.remove_prefix(1);
        }
        if (view.empty() || view.front() == '#') {
            continue;
        }
        if (view.rfind("dicycle:", 0) == 0) {
            cert.dicycle.arcs = read_ids(view.substr(8), line_no);
            have_dicycle = true;
        } else if (view.rfind("cycle:", 0) == 0) {
            cert.cycle.arcs = read_ids(view.substr(6), line_no);
            have_cycle = true;
        } else {
            throw ParseError(line_no, "expected 'dicycle:' or 'cycle:'");
        }
    }
    if (!have_dicycle || !have_cycle) {
        throw ParseError(line_no, "certificate needs both a dicycle and a cycle line");
    }
    return cert;
}

}  // namespace djc
