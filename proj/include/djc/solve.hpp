#ifndef DJC_SOLVE_HPP
#define DJC_SOLVE_HPP

#include "djc/digraph.hpp"
#include "djc/oracle.hpp"
#include "djc/result.hpp"
#include "djc/transversal.hpp"

#include <string>

namespace djc {

struct SolveOptions {
    /// Bound on dicycles the oracle may enumerate where it is used.
    std::size_t oracle_cap = kDefaultOracleCap;
    /// Number of transversal vertices above which the tau = 1 solver warns.
    std::size_t k_budget = 8;
    unsigned threads = 1;
};

struct SolveReport {
    SolveResult result;
    /// Not computed (Zero) for the acyclic and two-scc routes.
    TauInfo tau;
    std::string warning;
};

/// Acyclic -> No; two nontrivial strong components -> Yes; transversal
/// number at least 3 -> Yes with a certificate from the oracle; 2 and 1 go
/// to their solvers.
SolveReport solve(const Digraph& d, const SolveOptions& options = {});

/// 0 for Yes, 1 for No, 3 for Exceeded.
int exit_code(SolveResult::Kind k);

/// `key: value` lines: sizes, transversal number and transversal vertices,
/// strong components, intercyclicity and, for a single strong component
/// with transversal number 2, the recognized family.
std::string classify_report(const Digraph& d, unsigned threads = 1);

}  // namespace djc

#endif  // DJC_SOLVE_HPP
