#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamlab/combin.hpp"
#include "hamlab/gen.hpp"
#include "hamlab/solver.hpp"

using namespace hamlab;

TEST_CASE("found on complete, exhausted on the extremal example") {
    auto c12 = Hypergraph::complete(12, 4).materialized();
    auto r = hamiltonian_cycle(c12, 1);
    REQUIRE(r.stats.outcome == SearchStats::Outcome::Found);
    REQUIRE(r.cycle.has_value());
    CHECK(r.cycle->size() == 4);
    CHECK(r.cycle->seq.size() == 12);

    auto h41 = extremal_example(12, 4, 1);
    auto rx = hamiltonian_cycle(h41, 1);
    CHECK(rx.stats.outcome == SearchStats::Outcome::Exhausted);
    CHECK(!rx.cycle.has_value());
}

TEST_CASE("isolated vertex forces exhausted") {
    // complete on 9 minus all edges touching vertex 8
    std::vector<VertexSet> edges;
    std::vector<int> all(9);
    for (int i = 0; i < 9; ++i) all[i] = i;
    for_each_subset(all, 4, [&](const VertexSet& e) {
        if (e.back() != 8) edges.push_back(e);
    });
    auto h = Hypergraph::from_edges(9, 4, edges);
    auto r = hamiltonian_cycle(h, 1);
    CHECK(r.stats.outcome == SearchStats::Outcome::Exhausted);
}

TEST_CASE("symbolic complete backing answers instantly") {
    auto c = Hypergraph::complete(60, 4);
    auto r = hamiltonian_cycle(c, 1);
    REQUIRE(r.stats.outcome == SearchStats::Outcome::Found);
    CHECK(r.cycle->seq.size() == 60);
}

TEST_CASE("divisibility and budget") {
    auto c10 = Hypergraph::complete(10, 4).materialized();
    CHECK_THROWS_AS(hamiltonian_cycle(c10, 1), std::invalid_argument);  // 3 does not divide 10

    auto h = random_mindeg(12, 4, 1, Frac(1, 4), 5).h;
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto r = hamiltonian_cycle(h, 1, tiny);
    CHECK(r.stats.outcome == SearchStats::Outcome::Timeout);
}

TEST_CASE("oracle on named instances") {
    CHECK(hamiltonian_cycle_oracle(Hypergraph::complete(9, 4).materialized(), 1));
    CHECK(!hamiltonian_cycle_oracle(extremal_example(9, 4, 1), 1));
    CHECK(!hamiltonian_cycle_oracle(Hypergraph::from_edges(9, 4, {}), 1));
    CHECK_THROWS_AS(hamiltonian_cycle_oracle(Hypergraph::complete(12, 4), 1), std::length_error);
}

TEST_CASE("solver agrees with the oracle on seeded instances") {
    int checked = 0;
    for (int n : {6, 9}) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            double p = 0.15 + 0.04 * (double)(seed % 10);
            auto h = Hypergraph::bernoulli(n, 4, seed * 71 + n, p).materialized();
            bool oracle = hamiltonian_cycle_oracle(h, 1);
            auto r = hamiltonian_cycle(h, 1);
            REQUIRE(r.stats.outcome != SearchStats::Outcome::Timeout);
            CHECK((r.stats.outcome == SearchStats::Outcome::Found) == oracle);
            ++checked;
        }
    }
    CHECK(checked == 40);
}

TEST_CASE("adding an edge never flips found to exhausted") {
    std::mt19937_64 rng(77);
    int pairs = 0;
    for (uint64_t seed = 0; pairs < 20 && seed < 60; ++seed) {
        auto h = Hypergraph::bernoulli(9, 4, seed, 0.25).materialized();
        // pick an absent edge
        std::vector<int> all(9);
        for (int i = 0; i < 9; ++i) all[i] = i;
        VertexSet missing;
        for_each_subset_until(all, 4, [&](const VertexSet& e) {
            if (!h.contains(e)) {
                missing = e;
                return true;
            }
            return false;
        });
        if (missing.empty()) continue;
        auto edges = h.edges();
        edges.push_back(missing);
        auto h2 = Hypergraph::from_edges(9, 4, edges);
        bool before = hamiltonian_cycle(h, 1).stats.outcome == SearchStats::Outcome::Found;
        bool after = hamiltonian_cycle(h2, 1).stats.outcome == SearchStats::Outcome::Found;
        if (before) CHECK(after);
        ++pairs;
    }
    CHECK(pairs == 20);
}

TEST_CASE("enumerate_paths counting identities") {
    auto single = Hypergraph::from_edges(4, 4, {{0, 1, 2, 3}});
    CHECK(count_paths(single, 1, 1) == 24);  // one edge, every order

    for (uint64_t seed : {3ull, 8ull}) {
        auto h = Hypergraph::bernoulli(8, 4, seed, 0.4).materialized();
        CHECK(count_paths(h, 1, 1) == h.edge_count() * 24);  // |E| * k!
    }

    // cherry edges share 2 vertices, so no 7-vertex 2-edge 1-path exists
    CHECK(count_paths(cherry(4, 1), 1, 2) == 0);

    // two edges sharing exactly one vertex: oracle by brute force over all
    // injective 7-sequences
    auto h2 = Hypergraph::from_edges(7, 4, {{0, 1, 2, 3}, {3, 4, 5, 6}});
    unsigned long long oracle = 0;
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5, 6};
    do {
        VertexSet w1(perm.begin(), perm.begin() + 4);
        VertexSet w2(perm.begin() + 3, perm.begin() + 7);
        std::sort(w1.begin(), w1.end());
        std::sort(w2.begin(), w2.end());
        if (h2.contains(w1) && h2.contains(w2)) ++oracle;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(oracle == 72);  // 2 ordered edge pairs x 3! x 3!
    CHECK(count_paths(h2, 1, 2) == oracle);
}

TEST_CASE("every found witness validates") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto h = random_mindeg(9, 4, 1, Frac(1, 3), seed).h;
        auto r = hamiltonian_cycle(h, 1);
        if (r.stats.outcome == SearchStats::Outcome::Found) {
            REQUIRE(r.cycle.has_value());
            auto chk = validate_cycle(h, r.cycle->seq, 1);
            CHECK(chk.ok());
            CHECK(r.cycle->seq.size() == 9);
        }
    }
}
