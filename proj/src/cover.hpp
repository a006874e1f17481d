#ifndef DJC_SRC_COVER_HPP
#define DJC_SRC_COVER_HPP

#include "djc/digraph.hpp"
#include "djc/structures.hpp"

#include <string>
#include <vector>

namespace djc::detail {

/// Tracks which vertices and arcs a decomposition has accounted for, so
/// that exact coverage can be checked at the end.
class Cover {
public:
    explicit Cover(const Digraph& d)
        : d_(d), vertex_(d.vertex_count(), 0), arc_(d.arc_count(), 0) {}

    bool vertex(VertexId v) {
        if (v >= vertex_.size()) {
            return fail("vertex " + std::to_string(v) + " out of range");
        }
        if (vertex_[v]++) {
            return fail("vertex " + d_.name(v) + " used twice");
        }
        return true;
    }

    bool arc(ArcId a) {
        if (a >= arc_.size()) {
            return fail("arc " + std::to_string(a) + " out of range");
        }
        if (arc_[a]++) {
            return fail("arc " + std::to_string(a) + " used twice");
        }
        return true;
    }

    /// A directed path from `from` to `to` (kNoVertex = any) whose inner
    /// vertices have in- and out-degree 1; claims its arcs and inner vertices.
    bool link(const Link& l, VertexId from, VertexId to) {
        if (l.empty()) {
            return fail("empty link");
        }
        for (ArcId a : l) {
            if (a >= arc_.size()) {
                return fail("arc " + std::to_string(a) + " out of range");
            }
        }
        if ((from != kNoVertex && d_.arc(l.front()).tail != from) ||
            (to != kNoVertex && d_.arc(l.back()).head != to)) {
            return fail("link " + std::to_string(l.front()) + " has the wrong ends");
        }
        for (std::size_t k = 0; k < l.size(); ++k) {
            if (!arc(l[k])) {
                return false;
            }
            if (k + 1 < l.size()) {
                VertexId mid = d_.arc(l[k]).head;
                if (d_.arc(l[k + 1]).tail != mid) {
                    return fail("link " + std::to_string(l.front()) + " is not a path");
                }
                if (d_.in_degree(mid) != 1 || d_.out_degree(mid) != 1) {
                    return fail("inner link vertex " + d_.name(mid) + " has other arcs");
                }
                if (!vertex(mid)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Directed path given by vertices and arcs; claims everything except
    /// `skip`.
    bool path(const std::vector<VertexId>& vs, const std::vector<ArcId>& as,
              VertexId skip = kNoVertex) {
        if (vs.empty() || as.size() + 1 != vs.size()) {
            return fail("malformed path");
        }
        for (VertexId v : vs) {
            if (v != skip && !vertex(v)) {
                return false;
            }
        }
        for (std::size_t k = 0; k < as.size(); ++k) {
            if (!arc(as[k])) {
                return false;
            }
            if (d_.arc(as[k]).tail != vs[k] || d_.arc(as[k]).head != vs[k + 1]) {
                return fail("path arc " + std::to_string(as[k]) + " does not join its vertices");
            }
        }
        return true;
    }

    bool complete() {
        for (VertexId v = 0; v < vertex_.size(); ++v) {
            if (vertex_[v] != 1) {
                return fail("vertex " + d_.name(v) + " not covered");
            }
        }
        for (ArcId a = 0; a < arc_.size(); ++a) {
            if (arc_[a] != 1) {
                return fail("arc " + std::to_string(a) + " not covered");
            }
        }
        return true;
    }

    bool fail(std::string why) {
        if (error_.empty()) {
            error_ = std::move(why);
        }
        return false;
    }

    const std::string& error() const { return error_; }

    Check result() const { return error_.empty() ? Check{} : Check::fail(error_); }

private:
    const Digraph& d_;
    std::vector<int> vertex_;
    std::vector<int> arc_;
    std::string error_;
};

inline VertexId link_tail(const Digraph& d, const Link& l) { return d.arc(l.front()).tail; }
inline VertexId link_head(const Digraph& d, const Link& l) { return d.arc(l.back()).head; }

}  // namespace djc::detail

#endif  // DJC_SRC_COVER_HPP
