#include "djc/transversal.hpp"

#include "djc/parallel.hpp"
#include "djc/traversal.hpp"

#include <stdexcept>

namespace djc {

std::string to_string(TauClass t) {
    switch (t) {
        case TauClass::Zero:
            return "0";
        case TauClass::One:
            return "1";
        case TauClass::Two:
            return "2";
        case TauClass::AtLeastThree:
            return ">=3";
    }
    return "?";
}

bool is_transversal(const Digraph& d, const std::vector<VertexId>& s) {
    VertexMask removed(d.vertex_count(), false);
    for (VertexId v : s) {
        if (v >= d.vertex_count()) {
            throw std::out_of_range("vertex id " + std::to_string(v) + " does not exist");
        }
        removed[v] = true;
    }
    return is_acyclic(d, removed);
}

TauInfo compute_tau_capped(const Digraph& d, unsigned threads) {
    TauInfo info;
    if (is_acyclic(d)) {
        return info;
    }
    const std::size_t n = d.vertex_count();
    std::vector<VertexId> looped;
    for (VertexId v = 0; v < n; ++v) {
        if (d.has_loop(v)) {
            looped.push_back(v);
        }
    }
    if (looped.size() >= 3) {
        info.tau = TauClass::AtLeastThree;
        return info;
    }
    auto scc = strong_components(d);
    if (scc.nontrivial_count() >= 3) {
        info.tau = TauClass::AtLeastThree;
        return info;
    }

    // A looped vertex lies in every transversal; a vertex outside the
    // nontrivial components lies on no dicycle.
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        if (scc.nontrivial[scc.component[v]]) {
            candidates.push_back(v);
        }
    }

    std::vector<VertexId> singles;
    if (looped.size() == 1) {
        singles = looped;
    } else if (looped.empty() && scc.nontrivial_count() == 1) {
        singles = candidates;
    }
    std::vector<char> works(singles.size(), 0);
    find_first(
        singles.size(),
        [&](std::size_t i) {
            VertexMask removed(n, false);
            removed[singles[i]] = true;
            works[i] = is_acyclic(d, removed) ? 1 : 0;
            return false;
        },
        threads);
    for (std::size_t i = 0; i < singles.size(); ++i) {
        if (works[i]) {
            info.one_transversals.push_back(singles[i]);
        }
    }
    if (!info.one_transversals.empty()) {
        info.tau = TauClass::One;
        return info;
    }

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            VertexId u = candidates[i];
            VertexId v = candidates[j];
            bool covers_loops = true;
            for (VertexId l : looped) {
                covers_loops = covers_loops && (l == u || l == v);
            }
            if (!covers_loops) {
                continue;
            }
            if (scc.nontrivial_count() == 2 && scc.component[u] == scc.component[v]) {
                continue;
            }
            pairs.emplace_back(u, v);
        }
    }
    auto hit = find_first(
        pairs.size(),
        [&](std::size_t i) {
            VertexMask removed(n, false);
            removed[pairs[i].first] = true;
            removed[pairs[i].second] = true;
            return is_acyclic(d, removed);
        },
        threads);
    if (hit) {
        info.tau = TauClass::Two;
        info.two_transversal = pairs[*hit];
    } else {
        info.tau = TauClass::AtLeastThree;
    }
    return info;
}

}  // namespace djc
