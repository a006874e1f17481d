#ifndef DJC_DIGRAPH_HPP
#define DJC_DIGRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace djc {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

/// Per-vertex flags indexed by VertexId.
using VertexMask = std::vector<bool>;

struct Arc {
    VertexId tail;
    VertexId head;

    bool is_loop() const { return tail == head; }
};

/// Finite multidigraph with named vertices and densely numbered arcs.
/// Loops and parallel arcs are allowed; a loop is listed once among the
/// out-arcs and once among the in-arcs of its vertex.
class Digraph {
public:
    Digraph() = default;

    /// Digraph with vertices named "0" .. "n-1" and no arcs.
    static Digraph with_vertices(std::size_t n);

    VertexId add_vertex(std::string name);
    ArcId add_arc(VertexId tail, VertexId head);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    const Arc& arc(ArcId a) const { return arcs_[a]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::span<const ArcId> out_arcs(VertexId v) const { return out_[v]; }
    std::span<const ArcId> in_arcs(VertexId v) const { return in_[v]; }

    std::size_t out_degree(VertexId v) const { return out_[v].size(); }
    std::size_t in_degree(VertexId v) const { return in_[v].size(); }
    bool has_loop(VertexId v) const;

    /// Endpoint of `a` that is not `v` (or `v` itself for a loop).
    VertexId other_end(ArcId a, VertexId v) const;

    const std::string& name(VertexId v) const { return names_[v]; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Text format: `# comment`, `v NAME`, `a TAIL HEAD`. Arc ids follow the
/// order of `a` lines.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& d);

Digraph read_digraph_file(const std::filesystem::path& path);
void write_digraph_file(const std::filesystem::path& path, const Digraph& d);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// A derived digraph together with the vertices and arcs it came from.
struct DerivedGraph {
    Digraph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<ArcId> arc_origin;
};

/// Keeps the vertices flagged in `keep_vertex` and the arcs flagged in
/// `keep_arc` whose endpoints both survive. Relative order is preserved.
DerivedGraph subgraph(const Digraph& d, const VertexMask& keep_vertex,
                      const std::vector<bool>& keep_arc);

DerivedGraph induced_subgraph(const Digraph& d, const VertexMask& keep_vertex);

}  // namespace djc

#endif  // DJC_DIGRAPH_HPP
