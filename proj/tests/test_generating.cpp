#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "ffj/generating.hpp"
#include "oracles.hpp"

using ffj::Permutation;

TEST_CASE("block count matches the exhaustive partition scan", "[gen]") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& sigma : ffj::symmetric_group(n))
            REQUIRE(ffj::max_reducibility(sigma) == oracle::max_reducibility(sigma));
}

TEST_CASE("block count spot values", "[gen]") {
    REQUIRE(ffj::max_reducibility(Permutation(6)) == 6);
    REQUIRE(ffj::max_reducibility(ffj::transposition(6, 3, 4)) == 5);
    REQUIRE(ffj::max_reducibility(ffj::from_cycles(6, {{1, 6}})) == 1);
    REQUIRE(ffj::max_reducibility(ffj::from_cycles(6, {{1, 3}, {4, 6}})) == 2);
}

TEST_CASE("two-block-deficient set matches the brute-force filter", "[gen]") {
    for (int n = 4; n <= 8; ++n)
        REQUIRE(ffj::gen_reducible_set(n, 2) == oracle::reducible_set(n, 2));
}

TEST_CASE("set sizes follow the closed-form counts", "[gen]") {
    for (int n = 4; n <= 30; ++n) {
        const auto full = ffj::gen_reducible_set(n, 2);
        REQUIRE(static_cast<std::int64_t>(full.size()) ==
                (static_cast<std::int64_t>(n) * n + n - 6) / 2);
        for (const auto& sigma : full)
            REQUIRE(ffj::max_reducibility(sigma) == n - 2);
        REQUIRE(std::adjacent_find(full.begin(), full.end()) == full.end());

        const auto prime = ffj::gen_prime_set(n);
        REQUIRE(static_cast<int>(prime.size()) == n);
        for (const auto& sigma : prime) {
            REQUIRE(sigma(0) != 0);
            REQUIRE(ffj::max_reducibility(sigma) == n - 2);
        }
    }
}

TEST_CASE("moving-1 subfamily matches the brute-force filter", "[gen]") {
    for (int n = 4; n <= 8; ++n)
        REQUIRE(ffj::gen_prime_set(n) == oracle::prime_set(n));
}

TEST_CASE("other block deficits", "[gen]") {
    REQUIRE(ffj::gen_reducible_set(5, 0).empty());
    const auto adj = ffj::gen_reducible_set(6, 1);
    REQUIRE(adj.size() == 5);
    for (int i = 1; i < 6; ++i)
        REQUIRE(std::find(adj.begin(), adj.end(), ffj::transposition(6, i, i + 1)) != adj.end());
    for (int k = 3; k <= 4; ++k)
        REQUIRE(ffj::gen_reducible_set(5, k) == oracle::reducible_set(5, k));
}

TEST_CASE("generating-set guards", "[gen]") {
    REQUIRE_THROWS_AS(ffj::gen_reducible_set(3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::gen_reducible_set(5, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::gen_reducible_set(5, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::gen_reducible_set(9, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::gen_prime_set(3), std::invalid_argument);
}

TEST_CASE("stabiliser split and restrictions", "[gen]") {
    const int n = 6;
    const auto [fixing, moving] = ffj::stab_split(ffj::gen_prime_set(n), n);
    REQUIRE(moving.size() == 1);
    REQUIRE(moving.front() == ffj::from_cycles(n, {{1, 2}, {n - 1, n}}));
    REQUIRE(static_cast<int>(fixing.size()) == n - 1);

    std::vector<Permutation> restricted;
    for (const auto& sigma : fixing) restricted.push_back(ffj::restrict_fixing_last(sigma));
    std::sort(restricted.begin(), restricted.end());
    REQUIRE(restricted == ffj::gen_prime_set(n - 1));

    // Splitting at 1 separates by whether the first symbol moves.
    const auto [fix1, move1] = ffj::stab_split(ffj::gen_reducible_set(n, 2), 1);
    REQUIRE(move1 == ffj::gen_prime_set(n));
    for (const auto& sigma : fix1) {
        const auto r = ffj::restrict_fixing_first(sigma);
        REQUIRE(r.degree() == n - 1);
    }

    REQUIRE_THROWS_AS(ffj::restrict_fixing_first(ffj::transposition(4, 1, 2)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::restrict_fixing_last(ffj::transposition(4, 3, 4)),
                      std::invalid_argument);
}
