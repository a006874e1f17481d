#include "djc/oracle.hpp"

#include "djc/traversal.hpp"

#include <deque>
#include <limits>

namespace djc {

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

// dist[v] = fewest arcs from v to s using only vertices >= s.
std::vector<std::size_t> distances_to(const Digraph& d, VertexId s) {
    std::vector<std::size_t> dist(d.vertex_count(), kFar);
    dist[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (ArcId a : d.in_arcs(v)) {
            VertexId w = d.arc(a).tail;
            if (w >= s && dist[w] == kFar) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

class ChordlessSearch {
public:
    ChordlessSearch(const Digraph& d, std::size_t cap, const std::function<bool(const Dicycle&)>& visit)
        : d_(d), cap_(cap), visit_(visit), pos_(d.vertex_count(), kFar) {}

    EnumerationStats run() {
        const std::size_t n = d_.vertex_count();
        std::vector<std::vector<std::size_t>> dist(n);
        for (VertexId s = 0; s < n; ++s) {
            dist[s] = distances_to(d_, s);
        }
        for (std::size_t len = 1; len <= n && !halted_; ++len) {
            for (VertexId s = 0; s < n && !halted_; ++s) {
                if (len == 1) {
                    for (ArcId a : d_.out_arcs(s)) {
                        if (d_.arc(a).head == s) {
                            emit({a});
                            break;
                        }
                    }
                    continue;
                }
                if (d_.has_loop(s)) {
                    continue;
                }
                dist_ = &dist[s];
                len_ = len;
                path_.assign(1, s);
                arcs_.clear();
                pos_[s] = 0;
                extend();
                pos_[s] = kFar;
            }
        }
        stats_.exhausted = !halted_;
        return stats_;
    }

private:
    void emit(std::vector<ArcId> arcs) {
        if (stats_.produced == cap_) {
            halted_ = true;
            return;
        }
        ++stats_.produced;
        if (visit_(Dicycle{std::move(arcs)})) {
            stats_.stopped = true;
            halted_ = true;
        }
    }

    // Can w join the path as vertex number k (0-based) without a chord?
    bool admissible(VertexId w, std::size_t k) const {
        VertexId s = path_[0];
        for (ArcId a : d_.out_arcs(w)) {
            VertexId h = d_.arc(a).head;
            if (h == w) {
                return false;
            }
            if (pos_[h] == kFar) {
                continue;
            }
            if (h != s || k + 1 < len_) {
                return false;
            }
        }
        for (ArcId a : d_.in_arcs(w)) {
            VertexId t = d_.arc(a).tail;
            if (pos_[t] != kFar && pos_[t] != k - 1) {
                return false;
            }
        }
        return true;
    }

    void extend() {
        if (halted_) {
            return;
        }
        const std::size_t k = path_.size();
        VertexId last = path_.back();
        VertexId s = path_[0];
        if (k == len_) {
            for (ArcId a : d_.out_arcs(last)) {
                if (d_.arc(a).head == s) {
                    std::vector<ArcId> cycle = arcs_;
                    cycle.push_back(a);
                    emit(std::move(cycle));
                    return;
                }
            }
            return;
        }
        VertexId prev_head = kNoVertex;
        std::vector<bool> tried_heads;
        for (ArcId a : d_.out_arcs(last)) {
            VertexId w = d_.arc(a).head;
            if (w <= s || pos_[w] != kFar || w == prev_head) {
                continue;
            }
            // Only the smallest arc id per head is used.
            bool repeat = false;
            for (ArcId b : d_.out_arcs(last)) {
                if (b == a) {
                    break;
                }
                if (d_.arc(b).head == w) {
                    repeat = true;
                    break;
                }
            }
            if (repeat) {
                continue;
            }
            prev_head = w;
            std::size_t remaining = len_ - k;  // arcs still needed from w back to s
            if ((*dist_)[w] == kFar || (*dist_)[w] > remaining) {
                continue;
            }
            if (!admissible(w, k)) {
                continue;
            }
            pos_[w] = k;
            path_.push_back(w);
            arcs_.push_back(a);
            extend();
            arcs_.pop_back();
            path_.pop_back();
            pos_[w] = kFar;
            if (halted_) {
                return;
            }
        }
    }

    const Digraph& d_;
    std::size_t cap_;
    const std::function<bool(const Dicycle&)>& visit_;
    std::vector<std::size_t> pos_;
    const std::vector<std::size_t>* dist_ = nullptr;
    std::size_t len_ = 0;
    std::vector<VertexId> path_;
    std::vector<ArcId> arcs_;
    EnumerationStats stats_;
    bool halted_ = false;
};

}  // namespace

EnumerationStats for_each_chordless_dicycle(const Digraph& d, std::size_t cap,
                                            const std::function<bool(const Dicycle&)>& visit) {
    ChordlessSearch search(d, cap, visit);
    return search.run();
}

ChordlessEnumeration enumerate_chordless_dicycles(const Digraph& d, std::size_t cap) {
    ChordlessEnumeration out;
    auto stats = for_each_chordless_dicycle(d, cap, [&](const Dicycle& c) {
        out.cycles.push_back(c);
        return false;
    });
    out.exhausted = stats.exhausted;
    return out;
}

ChordlessEnumeration enumerate_all_dicycles(const Digraph& d, std::size_t cap) {
    ChordlessEnumeration out;
    const std::size_t n = d.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<ArcId> arcs;
    bool halted = false;
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId s, VertexId v) {
        for (ArcId a : d.out_arcs(v)) {
            if (halted) {
                return;
            }
            VertexId w = d.arc(a).head;
            if (w == s) {
                if (out.cycles.size() == cap) {
                    halted = true;
                    return;
                }
                arcs.push_back(a);
                out.cycles.push_back(Dicycle{arcs});
                arcs.pop_back();
            } else if (w > s && !on_path[w]) {
                on_path[w] = true;
                arcs.push_back(a);
                dfs(s, w);
                arcs.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (VertexId s = 0; s < n && !halted; ++s) {
        on_path[s] = true;
        dfs(s, s);
        on_path[s] = false;
    }
    out.exhausted = !halted;
    return out;
}

namespace {

std::optional<Certificate> certificate_for(const Digraph& d, const Dicycle& b) {
    VertexMask used = arc_vertex_mask(d, b.arcs);
    if (auto c = find_undirected_cycle(d, used)) {
        return Certificate{b, *c};
    }
    return std::nullopt;
}

}  // namespace

OracleOutcome oracle_solve(const Digraph& d, std::size_t cap) {
    OracleOutcome out;
    auto stats = for_each_chordless_dicycle(d, cap, [&](const Dicycle& b) {
        out.certificate = certificate_for(d, b);
        return out.certificate.has_value();
    });
    if (out.certificate) {
        out.kind = OracleOutcome::Kind::Yes;
    } else {
        out.kind = stats.exhausted ? OracleOutcome::Kind::No : OracleOutcome::Kind::Exceeded;
    }
    return out;
}

OracleOutcome oracle_solve_all_dicycles(const Digraph& d, std::size_t cap) {
    OracleOutcome out;
    auto all = enumerate_all_dicycles(d, cap);
    for (const Dicycle& b : all.cycles) {
        out.certificate = certificate_for(d, b);
        if (out.certificate) {
            out.kind = OracleOutcome::Kind::Yes;
            return out;
        }
    }
    out.kind = all.exhausted ? OracleOutcome::Kind::No : OracleOutcome::Kind::Exceeded;
    return out;
}

DisjointDicycles oracle_two_disjoint_dicycles(const Digraph& d, std::size_t cap) {
    DisjointDicycles out;
    auto all = enumerate_chordless_dicycles(d, cap);
    std::vector<VertexMask> masks;
    for (const Dicycle& c : all.cycles) {
        masks.push_back(arc_vertex_mask(d, c.arcs));
    }
    for (std::size_t i = 0; i < all.cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < all.cycles.size(); ++j) {
            bool disjoint = true;
            for (ArcId a : all.cycles[j].arcs) {
                if (masks[i][d.arc(a).tail]) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) {
                out.kind = DisjointDicycles::Kind::Found;
                out.pair = std::make_pair(all.cycles[i], all.cycles[j]);
                return out;
            }
        }
    }
    out.kind = all.exhausted ? DisjointDicycles::Kind::None : DisjointDicycles::Kind::Exceeded;
    return out;
}

}  // namespace djc
