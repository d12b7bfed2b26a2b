#include <doctest.h>

#include <random>

#include "commring/domination.hpp"
#include "commring/errors.hpp"
#include "commring/ring.hpp"

#include "test_util.hpp"

using namespace commring;

namespace {

SimpleGraph k3_plus_isolated(int isolated) {
    SimpleGraph g(3 + isolated);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

SimpleGraph p2_copies(int copies) {
    SimpleGraph g(2 * copies);
    for (int i = 0; i < copies; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

void check_certificate(const SimpleGraph& g, const DominationCertificate& c) {
    CHECK(int(c.witness.size()) == c.gamma);
    CHECK(verify_dominating(g, c.witness));
}

}  // namespace

TEST_CASE("gamma_bruteforce on the pinned examples") {
    CHECK(gamma_bruteforce(cycle_graph(4)).gamma == 2);
    CHECK(gamma_bruteforce(k3_plus_isolated(4)).gamma == 5);
    CHECK(gamma_bruteforce(p2_copies(2)).gamma == 2);
    CHECK(gamma_bruteforce(complete_graph(5)).gamma == 1);
    CHECK(gamma_bruteforce(empty_graph(3)).gamma == 3);
    CHECK_THROWS_AS(gamma_bruteforce(empty_graph(25)), TooLarge);
}

TEST_CASE("gamma_bruteforce returns the lexicographically first witness") {
    auto cert = gamma_bruteforce(cycle_graph(4));
    CHECK(cert.witness == std::vector<int>{0, 1});
    CHECK(cert.method == DominationCertificate::BruteForce);
}

TEST_CASE("gamma_exact on commuting graphs") {
    CHECK(gamma_exact(commuting_graph(presentation_E(2))).gamma == 3);
    CHECK(gamma_exact(commuting_graph(presentation_E(3))).gamma == 4);
    FiniteRing prod = direct_product({presentation_E(2), presentation_F(2)});
    CHECK(gamma_exact(commuting_graph(prod)).gamma == 3);
}

TEST_CASE("gamma conventions on the empty graph") {
    CHECK(gamma_exact(empty_graph(0)).gamma == 0);
    CHECK(gamma_bruteforce(empty_graph(0)).gamma == 0);
}

TEST_CASE("gamma_bounds") {
    BoundsReport k5 = gamma_bounds(complete_graph(5));
    CHECK(k5.lower == 1);
    CHECK(k5.upper == 1);

    BoundsReport iso3 = gamma_bounds(empty_graph(3));
    CHECK(iso3.lower == 3);
    CHECK(iso3.upper == 3);
    CHECK_FALSE(iso3.isolated_free);

    SimpleGraph g9 = commuting_graph(presentation_E(3));
    BoundsReport b = gamma_bounds(g9);
    CHECK(b.lower <= 4);
    CHECK(b.upper >= 4);
    CHECK(b.isolated_free);
}

TEST_CASE("verify_dominating") {
    SimpleGraph c4 = cycle_graph(4);
    CHECK(verify_dominating(c4, {0, 2}));
    CHECK_FALSE(verify_dominating(c4, {0}));
    CHECK(verify_dominating(c4, {0, 1, 2, 3}));
    CHECK_FALSE(verify_dominating(c4, {7}));  // out of range
}

TEST_CASE("oracle equivalence on corpus graphs") {
    for (const auto& r : test_util::noncommutative_corpus(9)) {
        SimpleGraph g = commuting_graph(r);
        SimpleGraph gbar = complement(g);
        for (const SimpleGraph* graph : {&g, &gbar}) {
            auto fast = gamma_exact(*graph);
            auto slow = gamma_bruteforce(*graph);
            CHECK(fast.gamma == slow.gamma);
            check_certificate(*graph, fast);
            check_certificate(*graph, slow);
        }
    }
}

TEST_CASE("oracle equivalence on random graphs") {
    std::mt19937 rng(20260810);
    for (double p : {0.2, 0.5, 0.8})
        for (int trial = 0; trial < 40; ++trial) {
            SimpleGraph g = test_util::random_graph(12, p, rng);
            auto fast = gamma_exact(g);
            auto slow = gamma_bruteforce(g);
            CHECK(fast.gamma == slow.gamma);
            check_certificate(g, fast);
            check_certificate(g, slow);
        }
}

TEST_CASE("many-component graphs solve fast") {
    // 20 disjoint C4: gamma = 40
    SimpleGraph cycles(80);
    for (int c = 0; c < 20; ++c)
        for (int i = 0; i < 4; ++i)
            cycles.add_edge(4 * c + i, 4 * c + (i + 1) % 4);
    auto cert = gamma_exact(cycles);
    CHECK(cert.gamma == 40);
    CHECK(verify_dominating(cycles, cert.witness));

    CHECK(gamma_exact(commuting_graph(presentation_E(7))).gamma == 8);
}

TEST_CASE("solver determinism") {
    SimpleGraph g = complement(commuting_graph(presentation_E(3)));
    auto a = gamma_exact(g);
    auto b = gamma_exact(g);
    CHECK(a.gamma == b.gamma);
    CHECK(a.witness == b.witness);
}

TEST_CASE("degree-bound properties on random graphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        SimpleGraph g = test_util::random_graph(10, 0.35, rng);
        const int m = g.vertex_count();
        int gamma = gamma_exact(g).gamma;
        BoundsReport b = gamma_bounds(g);
        CHECK(b.lower <= gamma);
        CHECK(gamma <= m - g.max_degree());
        if (g.min_degree() >= 1) {
            CHECK(gamma <= b.upper);
            CHECK(2 * gamma <= m);                       // no isolated vertex
            CHECK(2 * gamma <= m + 2 - g.min_degree());  // min-degree bound
        }
        // gamma = 1 iff a vertex dominates everything
        CHECK((gamma == 1) == (g.max_degree() == m - 1));
        // complement pair bounds
        SimpleGraph gbar = complement(g);
        int gamma_bar = gamma_exact(gbar).gamma;
        CHECK(gamma + gamma_bar <= m + 1);
        CHECK(gamma * gamma_bar <= m);
    }
}

TEST_CASE("gamma = m/2 holds exactly for C4-or-corona component graphs") {
    auto all_good_shape = [](const SimpleGraph& g) {
        for (const auto& comp : components(g)) {
            auto shape = classify_component(g, comp);
            bool good = (shape.tag == ComponentShape::CycleC && shape.a == 4) ||
                        shape.tag == ComponentShape::CoronaHK1 ||
                        shape.tag == ComponentShape::P2;
            if (!good) return false;
        }
        return true;
    };

    // positive instances: C4, 2 P2, P4, triangle corona, C4 + P2
    SimpleGraph corona(6);
    corona.add_edge(0, 1);
    corona.add_edge(1, 2);
    corona.add_edge(2, 0);
    corona.add_edge(0, 3);
    corona.add_edge(1, 4);
    corona.add_edge(2, 5);
    SimpleGraph c4_p2(6);
    c4_p2.add_edge(0, 1);
    c4_p2.add_edge(1, 2);
    c4_p2.add_edge(2, 3);
    c4_p2.add_edge(3, 0);
    c4_p2.add_edge(4, 5);
    for (const SimpleGraph& g :
         {cycle_graph(4), p2_copies(2), path_graph(4), corona, c4_p2}) {
        REQUIRE(g.min_degree() >= 1);
        CHECK(2 * gamma_exact(g).gamma == g.vertex_count());
        CHECK(all_good_shape(g));
    }

    // random isolated-free graphs: both directions of the characterisation
    std::mt19937 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        SimpleGraph g = test_util::random_graph(8, 0.25, rng);
        if (g.min_degree() < 1) continue;
        CHECK((2 * gamma_exact(g).gamma == 8) == all_good_shape(g));
    }
}
