#include "djc/cycles.hpp"
#include "djc/digraph.hpp"
#include "djc/generators.hpp"
#include "djc/hardness.hpp"
#include "djc/oracle.hpp"
#include "djc/parallel.hpp"
#include "djc/solve.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace djc;

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 4;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

// Certificate to a file when asked, else inline after the report.
void emit_certificate(const Certificate& c, const std::string& path) {
    if (path.empty()) {
        std::cout << format_certificate(c);
    } else {
        write_text_file(path, format_certificate(c));
        std::cout << "certificate: " << path << "\n";
    }
}

struct Common {
    std::string graph;
    std::string out;
    std::size_t cap = kDefaultOracleCap;
    std::size_t k_budget = 8;
    bool parallel = false;
    bool timing = false;
};

int cmd_solve(const Common& o) {
    Digraph d = read_digraph_file(o.graph);
    SolveOptions options;
    options.oracle_cap = o.cap;
    options.k_budget = o.k_budget;
    options.threads = o.parallel ? default_thread_count() : 1;
    const auto start = std::chrono::steady_clock::now();
    SolveReport r = solve(d, options);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    if (!r.warning.empty()) {
        std::cerr << "warning: " << r.warning << "\n";
    }
    std::cout << "verdict: " << to_string(r.result.kind) << "\n";
    std::cout << "route: " << r.result.route << "\n";
    if (r.result.route != "two-scc") {
        std::cout << "tau: " << to_string(r.tau.tau) << "\n";
    }
    std::cout << "fallbacks: " << r.result.fallbacks << "\n";
    if (o.timing) {
        std::cout << "time_ms: " << ms.count() << "\n";
    }
    if (r.result.certificate) {
        emit_certificate(*r.result.certificate, o.out);
    }
    return exit_code(r.result.kind);
}

int cmd_oracle(const Common& o) {
    Digraph d = read_digraph_file(o.graph);
    OracleOutcome r = oracle_solve(d, o.cap);
    switch (r.kind) {
        case OracleOutcome::Kind::Yes:
            std::cout << "verdict: yes\n";
            emit_certificate(*r.certificate, o.out);
            return 0;
        case OracleOutcome::Kind::No:
            std::cout << "verdict: no\n";
            return 1;
        case OracleOutcome::Kind::Exceeded:
            std::cout << "verdict: exceeded\n";
            return 3;
    }
    return kExitInternal;
}

int cmd_verify(const std::string& graph, const std::string& cert) {
    Digraph d = read_digraph_file(graph);
    Certificate c = parse_certificate(read_text_file(cert));
    std::string problem;
    try {
        problem = certificate_problem(d, c);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (problem.empty()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid: " << problem << "\n";
    return 1;
}

int cmd_reduce(const std::string& cnf, const std::string& out) {
    CnfFormula f = parse_dimacs(read_text_file(cnf));
    Digraph d = bipartite_to_digraph(sat_to_bipartite(f));
    emit(format_digraph(d), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disjoint dicycle and undirected cycle: solver and tools"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool with_graph) {
        if (with_graph) {
            sub->add_option("graph", common.graph, "Digraph file")->required();
        }
        sub->add_option("-o,--output", common.out, "Output file (default: stdout)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Decide the instance and print a report");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--cap", common.cap, "Oracle enumeration cap");
    solve_cmd->add_option("--k-budget", common.k_budget,
                          "Transversal vertex count above which a warning is printed");
    solve_cmd->add_flag("--parallel", common.parallel, "Use all hardware threads");
    solve_cmd->add_flag("--timing", common.timing, "Print the solve time");

    auto* classify_cmd = app.add_subcommand("classify", "Print structural information");
    classify_cmd->add_option("graph", common.graph, "Digraph file")->required();
    classify_cmd->add_flag("--parallel", common.parallel, "Use all hardware threads");

    std::string cert_file;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a digraph");
    verify_cmd->add_option("graph", common.graph, "Digraph file")->required();
    verify_cmd->add_option("certificate", cert_file, "Certificate file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Decide by brute-force enumeration");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--cap", common.cap, "Enumeration cap");

    // Generators. Every one takes --seed and -o.
    std::uint64_t seed = 1;
    std::size_t externals = 0;
    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    auto gen_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Random seed");
        sub->add_option("-o,--output", common.out, "Output file (default: stdout)");
    };
    auto with_externals = [&](CLI::App* sub) {
        sub->add_option("--externals", externals, "External trees attached to the core");
    };

    VaultSpec vault;
    auto* gen_vault = gen->add_subcommand("vault", "Vault (niche-free unless --niche)");
    gen_vault->add_option("--l,--ell", vault.ell, "Number of walls")->check(CLI::Range(3, 1000));
    gen_vault->add_option("--wall", vault.wall, "Vertices per wall")->check(CLI::Range(1, 1000));
    gen_vault->add_flag("--vary-walls", vault.vary_walls, "Draw wall lengths from [1, wall]");
    gen_vault->add_option("--mult", vault.mult, "Cross links per wall pair, at most");
    gen_vault->add_flag("--niche", vault.niche, "Plant a niche");
    gen_vault->add_option("--subdivisions", vault.subdivisions, "Random link subdivisions");
    gen_common(gen_vault);
    with_externals(gen_vault);

    MultiwheelSpec wheel;
    auto* gen_wheel = gen->add_subcommand("multiwheel", "Multiwheel");
    gen_wheel->add_option("--p", wheel.p, "Rim vertices")->check(CLI::Range(2, 1000));
    gen_wheel->add_option("--spokes", wheel.spokes, "Spokes each way per rim vertex");
    gen_wheel->add_flag("--vary-spokes", wheel.vary_spokes, "Draw spoke counts");
    gen_wheel->add_flag("--split", wheel.split, "Split the center");
    gen_wheel->add_option("--subdivisions", wheel.subdivisions, "Random link subdivisions");
    gen_common(gen_wheel);
    with_externals(gen_wheel);

    TrivaultSpec tri;
    auto* gen_tri = gen->add_subcommand("trivault", "Trivault (niche-free unless --niche)");
    gen_tri->add_option("--size", tri.size, "Leaves per star or vertices per path, at most");
    gen_tri->add_flag("--exact-size", tri.exact_size, "Use --size as is");
    gen_tri->add_option("--identify", tri.identify, "1: identify b_i, c_i; 0: join; -1: random");
    gen_tri->add_option("--extra", tri.extra, "Optional links per part pair, at most");
    gen_tri->add_flag("--niche", tri.niche, "Plant a niche");
    gen_tri->add_option("--subdivisions", tri.subdivisions, "Random link subdivisions");
    gen_common(gen_tri);
    with_externals(gen_tri);

    Tau1Spec t1;
    auto* gen_t1 = gen->add_subcommand("tau1", "Digraph with transversal number 1");
    gen_t1->add_option("--segments", t1.segments, "Skeleton segments");
    gen_t1->add_option("--paths", t1.paths, "Paths per segment, at most");
    gen_t1->add_option("--length", t1.length, "Inner vertices per path, at most");
    gen_t1->add_option("--chords", t1.chords, "Chords per segment, at most");
    gen_t1->add_option("--externals", t1.externals, "Extra vertices, at most");
    gen_common(gen_t1);

    std::size_t vars = 3;
    std::size_t clauses = 3;
    bool aligned = false;
    auto* gen_sat = gen->add_subcommand("sat3", "Random 3-CNF in DIMACS form");
    gen_sat->add_option("--vars", vars, "Variables")->check(CLI::Range(1, 1000000));
    gen_sat->add_option("--clauses", clauses, "Clauses")->check(CLI::Range(1, 1000000));
    gen_sat->add_flag("--aligned", aligned, "One sign per clause");
    gen_common(gen_sat);

    std::size_t vertices = 8;
    std::size_t arcs = 16;
    auto* gen_random = gen->add_subcommand("random", "Uniform random multidigraph");
    gen_random->add_option("--vertices", vertices, "Vertices")->check(CLI::Range(1, 1000000));
    gen_random->add_option("--arcs", arcs, "Arcs");
    gen_common(gen_random);

    std::string cnf_file;
    auto* reduce = app.add_subcommand("reduce", "Reductions");
    reduce->require_subcommand(1);
    auto* reduce_sat = reduce->add_subcommand("sat3", "3-CNF to a digraph with transversal number 1");
    reduce_sat->add_option("cnf", cnf_file, "DIMACS file")->required();
    reduce_sat->add_option("-o,--output", common.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto attach = [&](Digraph g) {
        return externals == 0 ? g : attach_externals(g, externals, 2, 3, seed + 1);
    };

    try {
        if (*solve_cmd) {
            return cmd_solve(common);
        }
        if (*classify_cmd) {
            std::cout << classify_report(read_digraph_file(common.graph),
                                         common.parallel ? default_thread_count() : 1);
            return 0;
        }
        if (*verify_cmd) {
            return cmd_verify(common.graph, cert_file);
        }
        if (*oracle_cmd) {
            return cmd_oracle(common);
        }
        if (*gen_vault) {
            emit(format_digraph(attach(generate_vault(vault, seed).graph)), common.out);
        } else if (*gen_wheel) {
            emit(format_digraph(attach(generate_multiwheel(wheel, seed).graph)), common.out);
        } else if (*gen_tri) {
            emit(format_digraph(attach(generate_trivault(tri, seed).graph)), common.out);
        } else if (*gen_t1) {
            emit(format_digraph(generate_tau1(t1, seed)), common.out);
        } else if (*gen_sat) {
            emit(format_dimacs(random_3cnf(vars, clauses, seed, aligned)), common.out);
        } else if (*gen_random) {
            Rng rng(seed);
            Digraph d = Digraph::with_vertices(vertices);
            for (std::size_t i = 0; i < arcs; ++i) {
                const auto t = static_cast<VertexId>(pick(rng, 0, vertices - 1));
                d.add_arc(t, static_cast<VertexId>(pick(rng, 0, vertices - 1)));
            }
            emit(format_digraph(d), common.out);
        } else if (*reduce_sat) {
            return cmd_reduce(cnf_file, common.out);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
