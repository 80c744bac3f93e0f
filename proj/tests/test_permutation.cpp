#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "ffj/permutation.hpp"

using ffj::Permutation;

TEST_CASE("identity and basic queries", "[perm]") {
    const Permutation id(5);
    REQUIRE(id.degree() == 5);
    REQUIRE(id.is_identity());
    for (int x = 0; x < 5; ++x) {
        REQUIRE(id(x) == x);
        REQUIRE(id.fixes(x));
    }
    REQUIRE_THROWS_AS(Permutation(0), std::invalid_argument);
}

TEST_CASE("from_images validates bijections", "[perm]") {
    REQUIRE_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation::from_images({0, 3, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation::from_images({-1, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation::from_images({}), std::invalid_argument);
    const auto p = Permutation::from_images({2, 0, 1});
    REQUIRE(p(0) == 2);
    REQUIRE(p(2) == 1);
}

TEST_CASE("one-line input is 1-based", "[perm]") {
    const auto p = Permutation::from_one_line({2, 1, 3});
    REQUIRE(p == ffj::transposition(3, 1, 2));
}

TEST_CASE("compose applies the right factor first", "[perm]") {
    // p = (1,2), q = (2,3) in S_3: (p*q)(2) = p(q(2)) = p(3) = 3 -> images.
    const auto p = ffj::transposition(3, 1, 2);
    const auto q = ffj::transposition(3, 2, 3);
    const auto pq = ffj::compose(p, q);
    // 1-based: pq maps 1 -> 2, 2 -> 3... check against cycle (1,2,3):
    REQUIRE(pq == ffj::from_cycles(3, {{1, 2, 3}}));
    const auto qp = ffj::compose(q, p);
    REQUIRE(qp == ffj::from_cycles(3, {{1, 3, 2}}));
    REQUIRE_FALSE(pq == qp);
}

TEST_CASE("inverse composes to the identity", "[perm]") {
    for (const auto& p : ffj::symmetric_group(5)) {
        REQUIRE(ffj::compose(p, p.inverse()).is_identity());
        REQUIRE(ffj::compose(p.inverse(), p).is_identity());
    }
}

TEST_CASE("cycle decomposition round-trips through text", "[perm]") {
    REQUIRE(ffj::to_cycle_string(Permutation(4)) == "()");
    REQUIRE(ffj::to_cycle_string(ffj::from_cycles(4, {{1, 2}, {3, 4}})) == "(1,2)(3,4)");
    REQUIRE(ffj::to_cycle_string(ffj::from_cycles(5, {{2, 4, 3}})) == "(2,4,3)");
    for (const auto& p : ffj::symmetric_group(5)) {
        const auto text = ffj::to_cycle_string(p);
        REQUIRE(ffj::parse_cycle_string(5, text) == p);
    }
    REQUIRE(ffj::parse_cycle_string(4, "(1 2 3)") == ffj::from_cycles(4, {{1, 2, 3}}));
    REQUIRE_THROWS_AS(ffj::parse_cycle_string(4, "(1,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::parse_cycle_string(4, "(1)"), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("factorial values and guard", "[perm]") {
    REQUIRE(ffj::factorial(0) == 1);
    REQUIRE(ffj::factorial(5) == 120);
    REQUIRE(ffj::factorial(20) == 2432902008176640000LL);
    REQUIRE_THROWS_AS(ffj::factorial(21), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::factorial(-1), std::invalid_argument);
}

TEST_CASE("rank and unrank are mutually inverse and lexicographic", "[perm]") {
    REQUIRE(ffj::perm_rank(Permutation(6)) == 0);
    const auto group = ffj::symmetric_group(5);
    for (std::size_t i = 0; i < group.size(); ++i) {
        REQUIRE(ffj::perm_rank(group[i]) == static_cast<std::int64_t>(i));
        REQUIRE(ffj::perm_unrank(5, static_cast<std::int64_t>(i)) == group[i]);
    }
    REQUIRE_THROWS_AS(ffj::perm_unrank(4, 24), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::perm_unrank(4, -1), std::invalid_argument);
}

TEST_CASE("symmetric_group enumerates n! elements in rank order", "[perm]") {
    REQUIRE(ffj::symmetric_group(1).size() == 1);
    REQUIRE(ffj::symmetric_group(4).size() == 24);
    const auto g = ffj::symmetric_group(4);
    REQUIRE(std::is_sorted(g.begin(), g.end()));
    REQUIRE_THROWS_AS(ffj::symmetric_group(9), std::invalid_argument);
}
