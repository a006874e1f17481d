#ifndef DJC_TRANSVERSAL_HPP
#define DJC_TRANSVERSAL_HPP

#include "djc/digraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace djc {

enum class TauClass { Zero, One, Two, AtLeastThree };

std::string to_string(TauClass t);

/// Dicycle transversal number capped at three, with witnesses.
struct TauInfo {
    TauClass tau = TauClass::Zero;
    /// Every vertex whose removal leaves the digraph acyclic (tau == One).
    std::vector<VertexId> one_transversals;
    /// Lexicographically first transversal pair (tau == Two).
    std::optional<std::pair<VertexId, VertexId>> two_transversal;
};

/// True iff d minus `s` is acyclic. Throws std::out_of_range for ids that
/// are not vertices.
bool is_transversal(const Digraph& d, const std::vector<VertexId>& s);

/// `threads` > 1 tests candidates concurrently; the answer does not change.
TauInfo compute_tau_capped(const Digraph& d, unsigned threads = 1);

}  // namespace djc

#endif  // DJC_TRANSVERSAL_HPP
