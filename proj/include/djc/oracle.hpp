#ifndef DJC_ORACLE_HPP
#define DJC_ORACLE_HPP

#include "djc/cycles.hpp"
#include "djc/digraph.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace djc {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Outcome of a capped enumeration.
struct EnumerationStats {
    std::size_t produced = 0;
    bool exhausted = false;  // every cycle was produced
    bool stopped = false;    // the visitor asked to stop
};

/// Visits induced dicycles (no arc joins two cycle vertices except the
/// cycle's own steps), shortest first. Parallel copies of a step are
/// represented by the smallest arc id. `visit` returns true to stop.
EnumerationStats for_each_chordless_dicycle(const Digraph& d, std::size_t cap,
                                            const std::function<bool(const Dicycle&)>& visit);

struct ChordlessEnumeration {
    std::vector<Dicycle> cycles;
    bool exhausted = false;
};

ChordlessEnumeration enumerate_chordless_dicycles(const Digraph& d, std::size_t cap);

/// Every simple dicycle, with parallel arcs told apart. Reference only:
/// the count is exponential in general.
ChordlessEnumeration enumerate_all_dicycles(const Digraph& d, std::size_t cap);

struct OracleOutcome {
    enum class Kind { Yes, No, Exceeded };
    Kind kind = Kind::No;
    std::optional<Certificate> certificate;
};

OracleOutcome oracle_solve(const Digraph& d, std::size_t cap = kDefaultOracleCap);

/// Same decision using every dicycle rather than the induced ones.
OracleOutcome oracle_solve_all_dicycles(const Digraph& d, std::size_t cap = kDefaultOracleCap);

struct DisjointDicycles {
    enum class Kind { Found, None, Exceeded };
    Kind kind = Kind::None;
    std::optional<std::pair<Dicycle, Dicycle>> pair;
};

DisjointDicycles oracle_two_disjoint_dicycles(const Digraph& d,
                                              std::size_t cap = kDefaultOracleCap);

}  // namespace djc

#endif  // DJC_ORACLE_HPP
