#include "djc/linkage.hpp"
#include "djc/oracle.hpp"
#include "djc/transversal.hpp"
#include "instances.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace djc;
using namespace djc::testing;

namespace {

bool valid_path(const Digraph& d, const DiPath& p, VertexId s, VertexId t) {
    if (p.vertices.empty() || p.vertices.front() != s || p.vertices.back() != t ||
        p.arcs.size() + 1 != p.vertices.size()) {
        return false;
    }
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        const Arc& a = d.arc(p.arcs[i]);
        if (a.tail != p.vertices[i] || a.head != p.vertices[i + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("two disjoint paths on tiny examples") {
    auto both = two_disjoint_paths_dag(from_arcs(4, {{0, 1}, {2, 3}}), 0, 1, 2, 3);
    REQUIRE(both);
    CHECK(both->first.arcs == std::vector<ArcId>{0});
    CHECK(both->second.arcs == std::vector<ArcId>{1});

    Digraph shared = from_arcs(5, {{0, 4}, {4, 1}, {2, 4}, {4, 3}});
    CHECK_FALSE(two_disjoint_paths_dag(shared, 0, 1, 2, 3));

    auto trivial = two_disjoint_paths_dag(from_arcs(3, {{1, 2}}), 0, 0, 1, 2);
    REQUIRE(trivial);
    CHECK(trivial->first.vertices == std::vector<VertexId>{0});

    CHECK_THROWS_AS(two_disjoint_paths_dag(digon(), 0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("two disjoint paths agree with exhaustive search") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 2 + uniform(rng, 7);
        Digraph d = random_dag(rng, n, 0.2 + 0.5 * (iter % 5) / 5.0);
        for (VertexId s1 = 0; s1 < n; ++s1) {
            for (VertexId t1 = 0; t1 < n; ++t1) {
                for (VertexId s2 = 0; s2 < n; ++s2) {
                    for (VertexId t2 = 0; t2 < n; ++t2) {
                        auto got = two_disjoint_paths_dag(d, s1, t1, s2, t2);
                        bool expected = exhaustive_linkage(d, s1, t1, s2, t2);
                        REQUIRE(got.has_value() == expected);
                        if (got) {
                            CHECK(valid_path(d, got->first, s1, t1));
                            CHECK(valid_path(d, got->second, s2, t2));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("is_intercyclic on the canonical graphs") {
    CHECK(is_intercyclic(k3d(), compute_tau_capped(k3d())).intercyclic);
    CHECK(is_intercyclic(digon(), compute_tau_capped(digon())).intercyclic);
    CHECK(is_intercyclic(c5sq(), compute_tau_capped(c5sq())).intercyclic);
    auto two = is_intercyclic(two_digons(), compute_tau_capped(two_digons()));
    CHECK_FALSE(two.intercyclic);
    Digraph three = from_arcs(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
    CHECK_THROWS_AS(is_intercyclic(three, compute_tau_capped(three)), std::invalid_argument);
}

TEST_CASE("is_intercyclic agrees with the oracle at tau two") {
    std::mt19937_64 rng(53);
    int tested = 0;
    for (int iter = 0; iter < 5000 && tested < 400; ++iter) {
        std::size_t n = 3 + uniform(rng, 8);
        Digraph d = random_multidigraph(rng, n, n + uniform(rng, n + 2));
        TauInfo tau = compute_tau_capped(d);
        if (tau.tau != TauClass::Two) {
            continue;
        }
        ++tested;
        auto got = is_intercyclic(d, tau);
        auto expected = oracle_two_disjoint_dicycles(d);
        CHECK(got.intercyclic == (expected.kind == DisjointDicycles::Kind::None));
        if (!got.intercyclic) {
            const auto& [b1, b2] = *got.disjoint_pair;
            CHECK(is_dicycle(d, b1.arcs));
            CHECK(is_dicycle(d, b2.arcs));
            auto m1 = arc_vertex_mask(d, b1.arcs);
            for (ArcId a : b2.arcs) {
                CHECK_FALSE(m1[d.arc(a).tail]);
            }
        }
    }
    CHECK(tested >= 100);
}
