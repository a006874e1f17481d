#include "djc/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace djc {

Digraph Digraph::with_vertices(std::size_t n) {
    Digraph d;
    for (std::size_t i = 0; i < n; ++i) {
        d.add_vertex(std::to_string(i));
    }
    return d;
}

VertexId Digraph::add_vertex(std::string name) {
    if (index_.count(name) != 0) {
        throw std::invalid_argument("duplicate vertex '" + name + "'");
    }
    const auto id = static_cast<VertexId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

ArcId Digraph::add_arc(VertexId tail, VertexId head) {
    if (tail >= vertex_count() || head >= vertex_count()) {
        throw std::out_of_range("arc endpoint is not a vertex");
    }
    const auto id = static_cast<ArcId>(arcs_.size());
    arcs_.push_back({tail, head});
    out_[tail].push_back(id);
    in_[head].push_back(id);
    return id;
}

bool Digraph::has_loop(VertexId v) const {
    return std::any_of(out_[v].begin(), out_[v].end(),
                       [&](ArcId a) { return arcs_[a].head == v; });
}

VertexId Digraph::other_end(ArcId a, VertexId v) const {
    const Arc& e = arcs_[a];
    return e.tail == v ? e.head : e.tail;
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
    Digraph d;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (tokens[0] == "v") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, "expected 'v NAME'");
            }
            if (d.find_vertex(tokens[1])) {
                throw ParseError(line_no, "duplicate vertex '" + std::string(tokens[1]) + "'");
            }
            d.add_vertex(std::string(tokens[1]));
        } else if (tokens[0] == "a") {
            if (tokens.size() != 3) {
                throw ParseError(line_no, "expected 'a TAIL HEAD'");
            }
            auto tail = d.find_vertex(tokens[1]);
            auto head = d.find_vertex(tokens[2]);
            if (!tail || !head) {
                throw ParseError(line_no, "undeclared vertex '" +
                                              std::string(!tail ? tokens[1] : tokens[2]) + "'");
            }
            d.add_arc(*tail, *head);
        } else {
            throw ParseError(line_no, "unknown record '" + std::string(tokens[0]) + "'");
        }
        if (end == text.size()) {
            break;
        }
    }
    return d;
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out << "v " << d.name(v) << '\n';
    }
    for (const Arc& a : d.arcs()) {
        out << "a " << d.name(a.tail) << ' ' << d.name(a.head) << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

Digraph read_digraph_file(const std::filesystem::path& path) {
    return parse_digraph(read_text_file(path));
}

void write_digraph_file(const std::filesystem::path& path, const Digraph& d) {
    write_text_file(path, format_digraph(d));
}

DerivedGraph subgraph(const Digraph& d, const VertexMask& keep_vertex,
                      const std::vector<bool>& keep_arc) {
    DerivedGraph out;
    std::vector<VertexId> renumber(d.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (keep_vertex[v]) {
            renumber[v] = out.graph.add_vertex(d.name(v));
            out.vertex_origin.push_back(v);
        }
    }
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        const Arc& e = d.arc(a);
        if (keep_arc[a] && renumber[e.tail] != kNoVertex && renumber[e.head] != kNoVertex) {
            out.graph.add_arc(renumber[e.tail], renumber[e.head]);
            out.arc_origin.push_back(a);
        }
    }
    return out;
}

DerivedGraph induced_subgraph(const Digraph& d, const VertexMask& keep_vertex) {
    return subgraph(d, keep_vertex, std::vector<bool>(d.arc_count(), true));
}

}  // namespace djc
