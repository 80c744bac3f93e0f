#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ffj/verify.hpp"

using ffj::Variant;
using ffj::VerificationReport;

namespace {

double margin(const VerificationReport& rep, const std::string& name) {
    for (const auto& [key, value] : rep.margins)
        if (key == name) return value;
    FAIL("margin " << name << " missing from suite " << rep.suite);
    return 0.0;
}

void require_pass(const VerificationReport& rep) {
    INFO(rep.suite << " n=" << rep.n << ": " << rep.detail);
    REQUIRE(rep.passed());
    REQUIRE(rep.status == "pass");
}

}  // namespace

TEST_CASE("report plumbing", "[verify]") {
    VerificationReport rep;
    rep.suite = "x";
    REQUIRE(rep.passed());
    rep.margin("a", 1.5);
    rep.fail("first reason");
    rep.fail("second reason");
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.status == "fail");
    REQUIRE(rep.detail == "first reason");
    REQUIRE(rep.margins.size() == 1);
}

TEST_CASE("quotient construction agreement", "[verify]") {
    for (int n = 4; n <= 6; ++n) require_pass(ffj::verify_quotient_forms(n));
    REQUIRE_THROWS_AS(ffj::verify_quotient_forms(9), std::invalid_argument);
}

TEST_CASE("graph vs quotient top eigenvalue", "[verify]") {
    for (int n = 4; n <= 5; ++n)
        for (const Variant v : {Variant::plain, Variant::prime}) {
            const auto rep = ffj::verify_aldous(n, v);
            require_pass(rep);
            const std::string tag = ffj::variant_name(v);
            REQUIRE(margin(rep, "deviation") <= margin(rep, "tolerance"));
            REQUIRE(margin(rep, tag + "_lambda2_graph") > 0.0);
        }
    REQUIRE_THROWS_WITH(ffj::verify_aldous(9, Variant::plain),
                        "n out of implemented brute-force range");
    REQUIRE_THROWS_AS(ffj::verify_aldous(3, Variant::plain), std::invalid_argument);
}

TEST_CASE("deterministic margins under a fixed seed", "[verify]") {
    const auto a = ffj::verify_aldous(6, Variant::plain, 42);
    const auto b = ffj::verify_aldous(6, Variant::plain, 42);
    REQUIRE(a.margins == b.margins);
}

TEST_CASE("recursion inequalities hold with strict slack", "[verify]") {
    const auto reports = ffj::verify_theorem2(5, 40);
    REQUIRE(reports.size() == 36);
    for (const auto& rep : reports) {
        require_pass(rep);
        REQUIRE(margin(rep, "prime_slack") > 1e-9);
        REQUIRE(margin(rep, "plain_slack") > 1e-9);
    }
    REQUIRE_THROWS_AS(ffj::verify_theorem2(4, 40), std::invalid_argument);
}

TEST_CASE("recursion slack equals the one-step monotone drop", "[verify]") {
    // Recursion reports cover steps n-1 -> n for n in [6, 20]; the monotone
    // suite reports the same steps when started one order earlier.
    const auto rec = ffj::verify_theorem2(6, 20);
    const auto mono = ffj::verify_prop_monotone(5, 20, Variant::prime);
    REQUIRE(rec.size() == mono.size());
    for (std::size_t i = 0; i < rec.size(); ++i) {
        REQUIRE(rec[i].n == mono[i].n);
        REQUIRE(margin(rec[i], "prime_slack")
                == Catch::Approx(margin(mono[i], "drop")).margin(1e-9));
    }
}

TEST_CASE("one-step monotonicity", "[verify]") {
    for (const Variant v : {Variant::plain, Variant::prime})
        for (const auto& rep : ffj::verify_prop_monotone(4, 30, v)) {
            require_pass(rep);
            REQUIRE(margin(rep, "drop") > 1e-9);
        }
}

TEST_CASE("second-eigenvector structure of the prime Laplacian", "[verify]") {
    for (int n = 9; n <= 14; ++n) {
        const auto rep = ffj::verify_lemma7(n);
        require_pass(rep);
        const double theta = margin(rep, "theta");
        REQUIRE(theta > 0.0);
        REQUIRE(theta <= std::numbers::pi / 3.0 + 1e-12);
        REQUIRE(margin(rep, "recurrence") <= 1e-8);
        REQUIRE(margin(rep, "boundary") <= 1e-8);
        REQUIRE(margin(rep, "closed_form") <= 1e-8);
    }
    REQUIRE_THROWS_AS(ffj::verify_lemma7(8), std::invalid_argument);
}

TEST_CASE("second eigenvector of the full Laplacian is simple, monotone, skew", "[verify]") {
    for (const auto& rep : ffj::verify_corollary1(4, 30)) {
        require_pass(rep);
        REQUIRE(margin(rep, "gap") > 1e-10);
        REQUIRE(margin(rep, "min_difference") >= -1e-9);
        REQUIRE(margin(rep, "skew_defect") <= 1e-8);
    }
}

TEST_CASE("covering split bounds", "[verify]") {
    for (int n = 5; n <= 6; ++n) {
        const auto rep = ffj::verify_covering_bound(n);
        require_pass(rep);
        REQUIRE(margin(rep, "prime_slack") >= -1e-9);
        REQUIRE(margin(rep, "plain_slack") >= -1e-9);
    }
    REQUIRE_THROWS_AS(ffj::verify_covering_bound(7), std::invalid_argument);
}

TEST_CASE("stabiliser split of the moving-1 family", "[verify]") {
    for (int n = 4; n <= 6; ++n) {
        const auto rep = ffj::verify_matching_split(n);
        require_pass(rep);
        REQUIRE(margin(rep, "matching_edges")
                == Catch::Approx(static_cast<double>(ffj::factorial(n) / 2)));
    }
}

TEST_CASE("bound sweeps pass on short ranges", "[verify]") {
    for (const auto& rep : ffj::verify_prime_bound(6, 40)) {
        require_pass(rep);
        REQUIRE(margin(rep, "bound_slack") >= -1e-9);
        if (rep.n >= 9) REQUIRE(margin(rep, "mu2") <= 1.0 + 1e-9);
    }
    for (const auto& rep : ffj::verify_plain_bound(4, 40)) {
        require_pass(rep);
        REQUIRE(margin(rep, "rayleigh_rel_err") <= 1e-10);
        if (rep.n >= 5) REQUIRE(margin(rep, "mu2") <= 4.0 + 1e-9);
    }
}

TEST_CASE("shifted-quotient psd sweeps", "[verify]") {
    for (const auto& rep : ffj::verify_psd_shift(4, 30)) require_pass(rep);
}

TEST_CASE("identity sweeps", "[verify]") {
    for (const auto& rep : ffj::verify_decomposition(4, 30)) require_pass(rep);
    for (const auto& rep : ffj::verify_quadratic_form(4, 10, 42, 50)) {
        require_pass(rep);
        REQUIRE(margin(rep, "vectors_checked") == 50.0);
    }
}

TEST_CASE("lift and containment at enumerable orders", "[verify]") {
    for (int n = 4; n <= 5; ++n) require_pass(ffj::verify_lift_containment(n));
}

TEST_CASE("flag correspondence at enumerable orders", "[verify]") {
    for (int n = 4; n <= 5; ++n) {
        const auto rep = ffj::verify_flag_correspondence(n);
        require_pass(rep);
        REQUIRE(margin(rep, "levels_checked") == static_cast<double>(n - 1));
    }
}
