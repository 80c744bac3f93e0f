#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ffj/cayley.hpp"
#include "ffj/closed_forms.hpp"
#include "oracles.hpp"

using ffj::Permutation;

TEST_CASE("connection-set validation", "[cayley]") {
    std::vector<Permutation> with_id = {Permutation(4), ffj::transposition(4, 1, 2)};
    REQUIRE_THROWS_AS(ffj::validate_connection_set(with_id), std::invalid_argument);

    std::vector<Permutation> not_closed = {ffj::from_cycles(4, {{1, 2, 3}})};
    REQUIRE_THROWS_AS(ffj::validate_connection_set(not_closed), std::invalid_argument);

    std::vector<Permutation> mixed = {ffj::transposition(4, 1, 2), ffj::transposition(5, 1, 2)};
    REQUIRE_THROWS_AS(ffj::validate_connection_set(mixed), std::invalid_argument);

    std::vector<Permutation> dup = {ffj::transposition(4, 1, 2), ffj::transposition(4, 1, 2)};
    REQUIRE_THROWS_AS(ffj::validate_connection_set(dup), std::invalid_argument);

    REQUIRE_NOTHROW(ffj::validate_connection_set(ffj::gen_reducible_set(5, 2)));
    REQUIRE_NOTHROW(ffj::validate_connection_set(ffj::gen_prime_set(5)));
}

TEST_CASE("group graph on adjacent swaps", "[cayley]") {
    const auto gens = ffj::gen_reducible_set(4, 1);
    const auto g = ffj::cayley_graph(gens);
    REQUIRE(g.num_vertices() == 24);
    REQUIRE(g.regular_degree() == 3);
    REQUIRE(g.is_connected());
    // Neighbors of a vertex are the left translates by the generators.
    for (std::int64_t r : {std::int64_t{0}, std::int64_t{7}, std::int64_t{23}}) {
        const auto w = ffj::perm_unrank(4, r);
        for (const auto& s : gens) {
            const auto t = ffj::perm_rank(ffj::compose(s, w));
            REQUIRE(g.has_edge(static_cast<int>(r), static_cast<int>(t)));
        }
    }
}

TEST_CASE("point-action count matrix matches frozen literals", "[cayley]") {
    REQUIRE(ffj::schreier_matrix(ffj::gen_reducible_set(4, 2)) == oracle::q4_plain());
    REQUIRE(ffj::schreier_matrix(ffj::gen_prime_set(4)) == oracle::q4_prime());
    REQUIRE(ffj::schreier_matrix(ffj::gen_reducible_set(5, 2)) == oracle::q5_plain());
    REQUIRE(ffj::schreier_matrix(ffj::gen_prime_set(5)) == oracle::q5_prime());
}

TEST_CASE("count matrix matches the closed forms at every checkable order", "[cayley]") {
    for (int n = 4; n <= 7; ++n) {
        REQUIRE(ffj::schreier_matrix(ffj::gen_reducible_set(n, 2))
                == ffj::closed_form_Q(n));
        REQUIRE(ffj::schreier_matrix(ffj::gen_prime_set(n))
                == ffj::closed_form_Qprime(n));
    }
}

TEST_CASE("prefix-image chains", "[cayley]") {
    const auto f = ffj::flag_of(ffj::from_cycles(4, {{1, 2, 3}}));
    // One-line images of (1,2,3) are [2,3,1,4]; prefix image sets grow as
    // {2}, {2,3}, {1,2,3}, {1,2,3,4} in 1-based symbols.
    REQUIRE(f.size() == 4);
    REQUIRE(f[0] == 0b0010u);
    REQUIRE(f[1] == 0b0110u);
    REQUIRE(f[2] == 0b0111u);
    REQUIRE(f[3] == 0b1111u);
}

TEST_CASE("chain-difference graphs", "[cayley]") {
    const auto fj1 = ffj::flag_johnson_graph(4, 1);
    REQUIRE(fj1.num_vertices() == 24);
    REQUIRE(fj1.regular_degree() == 3);

    const auto fj0 = ffj::flag_johnson_graph(4, 0);
    REQUIRE(fj0.num_edges() == 0);

    // Level degrees equal the sizes of the block-deficit sets.
    for (int k = 1; k <= 3; ++k) {
        const auto fj = ffj::flag_johnson_graph(4, k);
        REQUIRE(fj.regular_degree()
                == static_cast<int>(ffj::gen_reducible_set(4, k).size()));
    }
}

TEST_CASE("rank-relabelled correspondence holds level by level", "[cayley]") {
    for (int n = 4; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            const auto rep = ffj::dai_isomorphism_check(n, k);
            INFO(rep.detail);
            REQUIRE(rep.holds);
        }
    REQUIRE_THROWS_AS(ffj::dai_isomorphism_check(7, 1), std::invalid_argument);
}

TEST_CASE("vertex labels are cycle strings in rank order", "[cayley]") {
    const auto labels = ffj::rank_labels(4);
    REQUIRE(labels.size() == 24);
    REQUIRE(labels[0] == "()");
    REQUIRE(labels[1] == "(3,4)");
    const auto g = ffj::symmetric_group(4);
    for (std::size_t i = 0; i < g.size(); ++i)
        REQUIRE(labels[i] == ffj::to_cycle_string(g[i]));
}
