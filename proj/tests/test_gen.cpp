#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamlab/combin.hpp"
#include "hamlab/gen.hpp"

using namespace hamlab;

TEST_CASE("extremal example H_{k,l}") {
    auto h = extremal_example(12, 4, 1);
    CHECK(extremal_a_size(12, 4, 1) == 1);
    CHECK(h.edge_count() == 165);  // C(12,4) - C(11,4)
    // naive enumeration oracle
    unsigned long long meets_a = 0;
    std::vector<int> all(12);
    for (int i = 0; i < 12; ++i) all[i] = i;
    for_each_subset(all, 4, [&](const VertexSet& e) {
        if (e.front() == 0) ++meets_a;
    });
    CHECK(h.edge_count() == meets_a);

    CHECK(extremal_a_size(9, 4, 1) == 1);  // ceil(9/6 - 1)
    CHECK(extremal_example(9, 4, 1).min_s_degree(3) == 1);
    CHECK(h.min_s_degree(3) == 1);

    CHECK_THROWS_AS(extremal_example(10, 4, 2), std::invalid_argument);  // l >= k/2
}

TEST_CASE("delta_{k-1} formula holds across the grid") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}, {6, 1}}) {
        for (int n = k; n <= 12; ++n) {
            auto h = extremal_example(n, k, l);
            CHECK(h.min_s_degree(k - 1) == (unsigned long long)extremal_a_size(n, k, l));
        }
    }
}

TEST_CASE("cherry") {
    auto c = cherry(4, 1);
    CHECK(c.n() == 6);
    REQUIRE(c.edge_count() == 2);
    CHECK(c.edges()[0] == VertexSet{0, 1, 2, 3});
    CHECK(c.edges()[1] == VertexSet{2, 3, 4, 5});

    auto c52 = cherry(5, 2);
    CHECK(c52.n() == 6);
    CHECK(set_intersection(c52.edges()[0], c52.edges()[1]).size() == 4);

    for (auto [k, l] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}, {7, 3}, {9, 4}}) {
        auto ch = cherry(k, l);
        CHECK(ch.n() == 2 * k - 2 * l);
        CHECK(set_intersection(ch.edges()[0], ch.edges()[1]).size() == (size_t)(2 * l));
    }
}

TEST_CASE("random_mindeg") {
    // delta_fraction 0: the Bernoulli start is returned untouched
    auto r0 = random_mindeg(10, 4, 1, Frac(0), 42, 0.3);
    CHECK(r0.edges_added == 0);
    CHECK(r0.target == 0);

    // delta_fraction 1: complete hypergraph, flagged unreachable since the
    // target C(n,2) sits above the attainable C(n-k+2,2)
    auto r1 = random_mindeg(9, 4, 1, Frac(1), 7);
    CHECK(r1.h.edge_count() == binom(9, 4));
    CHECK(r1.achieved_delta == binom(7, 2));
    CHECK(!r1.target_reached);

    // determinism across runs
    auto a = random_mindeg(12, 4, 1, Frac(2, 5), 123);
    auto b = random_mindeg(12, 4, 1, Frac(2, 5), 123);
    CHECK(a.h.edges() == b.h.edges());
    CHECK(a.achieved_delta == b.achieved_delta);

    // the target is really met, and measured delta matches the module's claim
    CHECK(a.target_reached);
    CHECK(a.achieved_delta >= a.target);
    CHECK(a.h.min_s_degree(2) == a.achieved_delta);

    auto sat = random_mindeg(6, 4, 1, Frac(1), 1, 0.0);
    CHECK(sat.h.edge_count() == binom(6, 4));
    CHECK(!sat.target_reached);
}

namespace {

// independent brute force over all candidate sets B
std::pair<unsigned long long, VertexSet> brute_min_eb(const Hypergraph& h, int ell) {
    int n = h.n(), k = h.k();
    int bsz = (int)((long long)(2 * (k - ell) - 1) * n / (2 * (k - ell)));
    unsigned long long best = ULLONG_MAX;
    VertexSet best_b;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for_each_subset(all, bsz, [&](const VertexSet& b) {
        unsigned long long e = 0;
        for (const auto& edge : h.edges())
            if (contains_all(b, edge)) ++e;
        if (e < best) {
            best = e;
            best_b = b;
        }
    });
    return {best, best_b};
}

}  // namespace

TEST_CASE("extremality_check exhaustive") {
    auto h41 = extremal_example(12, 4, 1);
    auto v = extremality_check(h41, 1, 0.2, ExtremalityMode::Exhaustive);
    CHECK(v.extremal == ExtremalityVerdict::Answer::Yes);
    REQUIRE(v.witness.has_value());
    CHECK(v.e_b == 0);  // all edges meet A = {0}
    VertexSet expect;
    for (int i = 1; i <= 10; ++i) expect.push_back(i);
    CHECK(*v.witness == expect);  // lexicographically least minimizer
    CHECK(v.tie_count == 11);     // C(11,10) zero-edge sets

    auto c12 = Hypergraph::complete(12, 4).materialized();
    auto no = extremality_check(c12, 1, 0.1, ExtremalityMode::Exhaustive);
    CHECK(no.extremal == ExtremalityVerdict::Answer::No);
    // e(B) = C(10,4) = 210 > 0.1 * 495

    auto always = extremality_check(c12, 1, 1.0, ExtremalityMode::Exhaustive);
    CHECK(always.extremal == ExtremalityVerdict::Answer::Yes);

    CHECK_THROWS_AS(extremality_check(Hypergraph::complete(20, 4).materialized(), 1, 0.5,
                                      ExtremalityMode::Exhaustive),
                    std::length_error);
}

TEST_CASE("exhaustive verdict matches brute force on small instances") {
    for (uint64_t seed : {2ull, 5ull, 9ull}) {
        auto h = Hypergraph::bernoulli(10, 4, seed, 0.35).materialized();
        auto [best, best_b] = brute_min_eb(h, 1);
        for (double xi : {0.05, 0.3, 0.8}) {
            auto v = extremality_check(h, 1, xi, ExtremalityMode::Exhaustive);
            bool expect_yes = (long double)best <= (long double)xi * binom(10, 4);
            CHECK((v.extremal == ExtremalityVerdict::Answer::Yes) == expect_yes);
            if (expect_yes) CHECK(v.e_b == best);
        }
    }
}

TEST_CASE("local search is sound and finds the planted structure") {
    auto h41 = extremal_example(12, 4, 1);
    auto v = extremality_check(h41, 1, 0.2, ExtremalityMode::LocalSearch);
    CHECK(v.extremal == ExtremalityVerdict::Answer::Yes);
    REQUIRE(v.witness.has_value());
    // witness is verified: recompute e(B)
    unsigned long long e = h41.edge_count_within(*v.witness);
    CHECK(e == v.e_b);
    CHECK((long double)e <= 0.2L * binom(12, 4));

    // local search never answers No
    auto c12 = Hypergraph::complete(12, 4).materialized();
    auto inc = extremality_check(c12, 1, 0.01, ExtremalityMode::LocalSearch);
    CHECK(inc.extremal == ExtremalityVerdict::Answer::Inconclusive);
}

TEST_CASE("verdict json line") {
    auto h41 = extremal_example(12, 4, 1);
    auto v = extremality_check(h41, 1, 0.2, ExtremalityMode::Exhaustive);
    auto s = v.json_line();
    CHECK(s.find("\"extremal\":\"yes\"") != std::string::npos);
    CHECK(s.find("\"witness\":[1,2,3,4,5,6,7,8,9,10]") != std::string::npos);
}
