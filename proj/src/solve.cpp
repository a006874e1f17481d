#include "djc/solve.hpp"

#include "djc/linkage.hpp"
#include "djc/structures.hpp"
#include "djc/tau1.hpp"
#include "djc/tau2.hpp"
#include "djc/traversal.hpp"

#include <stdexcept>

namespace djc {

namespace {

VertexMask outside(const StrongComponents& scc, std::size_t comp) {
    VertexMask removed(scc.component.size(), true);
    for (VertexId v : scc.members[comp]) {
        removed[v] = false;
    }
    return removed;
}

std::vector<std::size_t> nontrivial_components(const StrongComponents& scc) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        if (scc.nontrivial[c]) {
            out.push_back(c);
        }
    }
    return out;
}

std::string names(const Digraph& d, const std::vector<VertexId>& vs) {
    std::string out;
    for (VertexId v : vs) {
        out += (out.empty() ? "" : ",") + d.name(v);
    }
    return out;
}

}  // namespace

SolveReport solve(const Digraph& d, const SolveOptions& options) {
    SolveReport report;
    if (is_acyclic(d)) {
        report.result = SolveResult::no("acyclic");
        return report;
    }
    StrongComponents scc = strong_components(d);
    std::vector<std::size_t> big = nontrivial_components(scc);
    if (big.size() >= 2) {
        auto b = find_dicycle(d, outside(scc, big[0]));
        auto c = find_dicycle(d, outside(scc, big[1]));
        report.result = SolveResult::yes(Certificate{*b, UndirectedCycle{c->arcs}}, "two-scc");
        return report;
    }

    report.tau = compute_tau_capped(d, options.threads);
    switch (report.tau.tau) {
        case TauClass::Zero:
            throw std::logic_error("solve: cyclic digraph with transversal number 0");
        case TauClass::AtLeastThree: {
            OracleOutcome o = oracle_solve(d, options.oracle_cap);
            if (o.kind == OracleOutcome::Kind::Exceeded) {
                report.result = SolveResult{SolveResult::Kind::Exceeded, std::nullopt, "tau3", 0};
            } else if (o.kind == OracleOutcome::Kind::No) {
                throw std::logic_error("solve: oracle found no certificate at transversal number 3");
            } else {
                report.result = SolveResult::yes(*o.certificate, "tau3");
            }
            return report;
        }
        case TauClass::Two:
            report.result = solve_tau2(d, report.tau, options.oracle_cap);
            return report;
        case TauClass::One: {
            Tau1Result r = solve_tau1_detailed(d, report.tau, Tau1Options{options.k_budget, true});
            report.result = std::move(r.result);
            report.warning = std::move(r.warning);
            return report;
        }
    }
    return report;
}

int exit_code(SolveResult::Kind k) {
    switch (k) {
        case SolveResult::Kind::Yes:
            return 0;
        case SolveResult::Kind::No:
            return 1;
        case SolveResult::Kind::Exceeded:
            return 3;
    }
    return 3;
}

std::string classify_report(const Digraph& d, unsigned threads) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) {
        out += key + ": " + value + "\n";
    };
    line("vertices", std::to_string(d.vertex_count()));
    line("arcs", std::to_string(d.arc_count()));
    StrongComponents scc = strong_components(d);
    std::vector<std::size_t> big = nontrivial_components(scc);
    line("nontrivial_components", std::to_string(big.size()));
    for (std::size_t i = 0; i < big.size(); ++i) {
        line("component_" + std::to_string(i + 1), names(d, scc.members[big[i]]));
    }

    TauInfo tau = compute_tau_capped(d, threads);
    line("tau", to_string(tau.tau));
    if (tau.tau == TauClass::One) {
        line("transversals", names(d, tau.one_transversals));
    }
    if (tau.tau == TauClass::Two) {
        line("transversal_pair", names(d, {tau.two_transversal->first, tau.two_transversal->second}));
    }
    if (tau.tau == TauClass::AtLeastThree) {
        return out;
    }
    Intercyclicity inter = is_intercyclic(d, tau);
    line("intercyclic", inter.intercyclic ? "true" : "false");
    if (tau.tau != TauClass::Two || big.size() != 1 || !inter.intercyclic) {
        line("family", "none");
        return out;
    }
    VertexMask core(d.vertex_count(), false);
    for (VertexId v : scc.members[big[0]]) {
        core[v] = true;
    }
    DerivedGraph sub = induced_subgraph(d, core);
    Classification c = recognize_family(sub.graph);
    line("family", to_string(c.family));
    if (c.family == Family::None) {
        return out;
    }
    line("niche", c.has_niche ? "true" : "false");
    if (c.vault) {
        line("ell", std::to_string(c.vault->ell()));
    }
    if (c.multiwheel) {
        line("kind", c.multiwheel->kind == MultiwheelDecomposition::Kind::Plain ? "plain" : "split");
        line("p", std::to_string(c.multiwheel->p(sub.graph)));
    }
    return out;
}

}  // namespace djc
