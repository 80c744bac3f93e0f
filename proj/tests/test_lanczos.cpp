#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ffj/cayley.hpp"
#include "ffj/eig.hpp"
#include "ffj/graph.hpp"
#include "ffj/lanczos.hpp"

namespace {

double dense_lambda2(const ffj::SparseGraph& g) {
    return ffj::symmetric_eigen(ffj::adjacency_matrix(g), false).lambda(2);
}

}  // namespace

TEST_CASE("matches the dense solver on subset-intersection graphs", "[lanczos]") {
    for (const auto& [n, k] : {std::pair{6, 3}, std::pair{7, 2}, std::pair{8, 2}}) {
        const auto g = ffj::johnson_graph(n, k);
        const auto r = ffj::lambda2_sparse(g, 42);
        REQUIRE(r.value == Catch::Approx(dense_lambda2(g)).margin(1e-7));
        REQUIRE(r.residual <= 1e-8 * g.regular_degree());
    }
}

TEST_CASE("matches the closed form on subset-intersection graphs", "[lanczos]") {
    // Second-largest adjacency eigenvalue of J(n,k) is (k-1)(n-k-1) - 1.
    const auto g = ffj::johnson_graph(7, 2);
    const auto r = ffj::lambda2_sparse(g, 42);
    REQUIRE(r.value == Catch::Approx(3.0).margin(1e-7));
}

TEST_CASE("complete graph: the deflated operator is a single eigenspace", "[lanczos]") {
    const auto r = ffj::lambda2_sparse(ffj::complete_graph(30), 42);
    REQUIRE(r.value == Catch::Approx(-1.0).margin(1e-9));
}

TEST_CASE("matches the dense solver on group graphs", "[lanczos]") {
    const auto g = ffj::cayley_graph(ffj::gen_reducible_set(5, 2));
    const auto r = ffj::lambda2_sparse(g, 42);
    REQUIRE(r.value == Catch::Approx(dense_lambda2(g)).margin(1e-7));

    const auto gp = ffj::cayley_graph(ffj::gen_prime_set(5));
    const auto rp = ffj::lambda2_sparse(gp, 42);
    REQUIRE(rp.value == Catch::Approx(dense_lambda2(gp)).margin(1e-7));
}

TEST_CASE("deterministic under a fixed seed", "[lanczos]") {
    const auto g = ffj::johnson_graph(8, 3);
    const auto a = ffj::lambda2_sparse(g, 42);
    const auto b = ffj::lambda2_sparse(g, 42);
    REQUIRE(a.value == b.value);
    REQUIRE(a.residual == b.residual);
    REQUIRE(a.iterations == b.iterations);
    const auto c = ffj::lambda2_sparse(g, 7);
    REQUIRE(c.value == Catch::Approx(a.value).margin(1e-7));
}

TEST_CASE("rejects graphs outside its contract", "[lanczos]") {
    REQUIRE_THROWS_AS(ffj::lambda2_sparse(ffj::path_graph(4), 42), std::invalid_argument);
    const auto split = ffj::SparseGraph::from_edges(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(ffj::lambda2_sparse(split, 42), std::invalid_argument);
    REQUIRE_THROWS_AS(ffj::lambda2_sparse(ffj::SparseGraph::from_edges(1, {}), 42),
                      std::invalid_argument);
}
