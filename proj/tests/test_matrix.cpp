#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ffj/closed_forms.hpp"
#include "ffj/matrix.hpp"
#include "oracles.hpp"

using ffj::IntMatrix;
using ffj::RealMatrix;

TEST_CASE("construction, indexing, identity", "[matrix]") {
    IntMatrix m(2, 3);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    REQUIRE(m(1, 2) == 0);
    m(1, 2) = 7;
    REQUIRE(m(1, 2) == 7);
    REQUIRE_FALSE(m.is_square());

    const auto id = IntMatrix::identity(3);
    REQUIRE(id.is_square());
    REQUIRE(id.is_symmetric());
    REQUIRE(id(0, 0) == 1);
    REQUIRE(id(0, 1) == 0);
}

TEST_CASE("arithmetic", "[matrix]") {
    const auto a = oracle::int_matrix({{1, 2}, {3, 4}});
    const auto b = oracle::int_matrix({{5, 6}, {7, 8}});
    REQUIRE(a + b == oracle::int_matrix({{6, 8}, {10, 12}}));
    REQUIRE(b - a == oracle::int_matrix({{4, 4}, {4, 4}}));
    REQUIRE(a * b == oracle::int_matrix({{19, 22}, {43, 50}}));
    REQUIRE(a * 3 == oracle::int_matrix({{3, 6}, {9, 12}}));
    REQUIRE(ffj::transpose(a) == oracle::int_matrix({{1, 3}, {2, 4}}));
    REQUIRE(a.row_sum(1) == 7);
}

TEST_CASE("laplacian form has zero row sums", "[matrix]") {
    const auto lap = ffj::laplacian(oracle::q5_plain());
    for (int i = 0; i < 5; ++i) REQUIRE(lap.row_sum(i) == 0);
    REQUIRE(lap(0, 0) == 12 - 7);
    REQUIRE(lap(0, 1) == -3);
    REQUIRE(lap(2, 2) == 12 - 2);
    REQUIRE_THROWS_AS(ffj::laplacian(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("exchange matrix reverses coordinates", "[matrix]") {
    const auto j = ffj::exchange_matrix<std::int64_t>(4);
    REQUIRE(j * j == IntMatrix::identity(4));
    REQUIRE(j(0, 3) == 1);
    REQUIRE(j(0, 0) == 0);
}

TEST_CASE("principal submatrix extraction", "[matrix]") {
    const auto m = oracle::q5_plain();
    const auto keep = ffj::complement_indices(5, {0, 1, 4});
    REQUIRE(keep == std::vector<int>{2, 3});
    const auto sub = ffj::submatrix_keep(m, keep);
    REQUIRE(sub == oracle::int_matrix({{2, 3}, {3, 4}}));
    REQUIRE_THROWS_AS(ffj::complement_indices(5, {5}), std::invalid_argument);
}

TEST_CASE("conversion and magnitude helpers", "[matrix]") {
    const auto r = ffj::to_real(oracle::int_matrix({{-3, 2}, {2, 1}}));
    REQUIRE(r(0, 0) == -3.0);
    REQUIRE(ffj::max_abs_entry(r) == 3.0);
    REQUIRE(r.is_symmetric());
}

TEST_CASE("closed-form builders match the frozen literals", "[matrix]") {
    REQUIRE(ffj::closed_form_Q(4) == oracle::q4_plain());
    REQUIRE(ffj::closed_form_Qprime(4) == oracle::q4_prime());
    REQUIRE(ffj::closed_form_Q(5) == oracle::q5_plain());
    REQUIRE(ffj::closed_form_Qprime(5) == oracle::q5_prime());
    REQUIRE_THROWS_AS(ffj::closed_form_Q(3), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::closed_form_Qprime(3), std::invalid_argument);
}

TEST_CASE("closed-form row sums equal the set sizes", "[matrix]") {
    for (int n = 4; n <= 60; ++n) {
        const auto q = ffj::closed_form_Q(n);
        const auto qp = ffj::closed_form_Qprime(n);
        for (int i = 0; i < n; ++i) {
            REQUIRE(q.row_sum(i) == ffj::plain_degree(n));
            REQUIRE(qp.row_sum(i) == ffj::prime_degree(n));
        }
        REQUIRE(q.is_symmetric());
        REQUIRE(qp.is_symmetric());
    }
}

TEST_CASE("variant helpers", "[matrix]") {
    REQUIRE(ffj::parse_variant("plain") == ffj::Variant::plain);
    REQUIRE(ffj::parse_variant("prime") == ffj::Variant::prime);
    REQUIRE_THROWS_AS(ffj::parse_variant("bogus"), std::invalid_argument);
    REQUIRE(std::string(ffj::variant_name(ffj::Variant::plain)) == "plain");
    REQUIRE(ffj::quotient_degree(7, ffj::Variant::prime) == 7);
    REQUIRE(ffj::quotient_degree(7, ffj::Variant::plain) == 25);
    REQUIRE(ffj::closed_form_quotient(5, ffj::Variant::prime) == oracle::q5_prime());
}
