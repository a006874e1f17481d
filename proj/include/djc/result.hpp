#ifndef DJC_RESULT_HPP
#define DJC_RESULT_HPP

#include "djc/cycles.hpp"

#include <optional>
#include <string>

namespace djc {

/// Answer of a solver for one instance.
struct SolveResult {
    enum class Kind { Yes, No, Exceeded };
    Kind kind = Kind::No;
    std::optional<Certificate> certificate;
    /// Which branch of the algorithm decided, e.g. "tau2-vault".
    std::string route;
    /// Times a constructed certificate failed and a search took over.
    std::size_t fallbacks = 0;

    static SolveResult yes(Certificate c, std::string route) {
        return SolveResult{Kind::Yes, std::move(c), std::move(route), 0};
    }
    static SolveResult no(std::string route) {
        return SolveResult{Kind::No, std::nullopt, std::move(route), 0};
    }
};

std::string to_string(SolveResult::Kind k);

}  // namespace djc

#endif  // DJC_RESULT_HPP
