#pragma once

// Claim-level verification suites.  Each suite composes the lower modules
// into a pass/fail report with named numeric margins, so a regression in
// any identity or inequality surfaces as a concrete number, not a diff.
// Strict ">" claims pass only with slack above 1e-9; matrix identities are
// exact; eigenvalue agreement tolerances scale with the graph degree.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "closed_forms.hpp"
#include "eig.hpp"
#include "generating.hpp"
#include "graph.hpp"
#include "lanczos.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "structure.hpp"

namespace ffj {

struct VerificationReport {
    std::string suite;
    int n = 0;
    std::string status = "pass";  // pass | fail | skipped
    std::vector<std::pair<std::string, double>> margins;
    double runtime_ms = 0.0;
    std::string detail;  // failure context, empty on pass

    bool passed() const { return status == "pass"; }
    void fail(std::string why) {
        status = "fail";
        if (detail.empty()) detail = std::move(why);
    }
    void margin(const std::string& name, double value) {
        margins.emplace_back(name, value);
    }
};

// Eigen-structure of a quotient Laplacian's second eigenpair: the vector,
// its consecutive differences, and the angle substitution 2 cos(theta) =
// 2 - mu that linearises the interior recurrence when mu lies in (0, 1].
struct FiedlerData {
    int n = 0;
    double mu = 0.0;
    std::vector<double> v;  // unit, orthogonal to ones, last entry >= 0
    std::vector<double> d;  // d[i] = v[i+1] - v[i]
    std::optional<double> theta;  // set iff 0 < mu <= 1; then theta in (0, pi/3]
};

inline FiedlerData build_fiedler_data(int n, Variant variant) {
    const FiedlerResult f = fiedler(laplacian(closed_form_quotient(n, variant)));
    FiedlerData out;
    out.n = n;
    out.mu = f.mu2;
    out.v = f.v;
    for (std::size_t i = 0; i + 1 < out.v.size(); ++i)
        out.d.push_back(out.v[i + 1] - out.v[i]);
    if (f.mu2 > 0.0 && f.mu2 <= 1.0) out.theta = std::acos(1.0 - 0.5 * f.mu2);
    return out;
}

namespace detail {

class SuiteTimer {
public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Second-largest adjacency eigenvalue: dense solve for small graphs, the
// certified sparse path above that size.
inline double second_largest_adjacency(const SparseGraph& g, std::uint64_t seed) {
    if (g.num_vertices() <= 720)
        return symmetric_eigen(adjacency_matrix(g), false).lambda(2);
    return lambda2_sparse(g, seed).value;
}

// Removes `small` from `big` as multisets (both ascending), matching each
// entry within tol; nullopt when some entry has no match.  The leftover
// list keeps ascending order.
inline std::optional<std::vector<double>> multiset_subtract(
    const std::vector<double>& big, const std::vector<double>& small, double tol) {
    std::vector<bool> used(big.size(), false);
    std::size_t p = 0;
    for (const double s : small) {
        while (p < big.size() && big[p] < s - tol) ++p;
        if (p >= big.size() || big[p] > s + tol) return std::nullopt;
        used[p] = true;
        ++p;
    }
    std::vector<double> leftover;
    leftover.reserve(big.size() - small.size());
    for (std::size_t i = 0; i < big.size(); ++i)
        if (!used[i]) leftover.push_back(big[i]);
    return leftover;
}

inline std::vector<Permutation> variant_generators(int n, Variant variant) {
    return variant == Variant::prime ? gen_prime_set(n) : gen_reducible_set(n, 2);
}

}  // namespace detail

// The point-stabiliser quotient matrix three ways: closed form, generator
// action counts, and the equitable-partition quotient of the actual graph.
// All three must agree entry-for-entry as integers, for both generating
// sets.
inline VerificationReport verify_quotient_forms(int n) {
    if (n < 4 || n > 8)
        throw std::invalid_argument("verify_quotient_forms: n must lie in 4..8");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "quotient-forms";
    rep.n = n;
    for (const Variant variant : {Variant::plain, Variant::prime}) {
        const std::vector<Permutation> gens = detail::variant_generators(n, variant);
        const IntMatrix closed = closed_form_quotient(n, variant);
        const IntMatrix counted = schreier_matrix(gens);
        if (!(counted == closed)) {
            rep.fail(std::string(variant_name(variant))
                     + ": generator-count matrix differs from closed form");
            break;
        }
        const SparseGraph g = cayley_graph(gens);
        const QuotientResult qr = quotient_if_equitable(g, coset_partition(n));
        if (!qr.equitable) {
            rep.fail(std::string(variant_name(variant))
                     + ": coset partition not equitable: " + qr.witness->describe());
            break;
        }
        if (!(qr.quotient == closed)) {
            rep.fail(std::string(variant_name(variant))
                     + ": partition quotient differs from closed form");
            break;
        }
    }
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// The headline eigenvalue identity: the graph on all of S_n and its
// n-vertex quotient share the same second-largest eigenvalue, within
// 1e-8 of the degree.
inline VerificationReport verify_aldous(int n, Variant variant,
                                        std::uint64_t seed = 42,
                                        double tol_override = -1.0) {
    if (n < 4 || n > 7)
        throw std::invalid_argument("n out of implemented brute-force range");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "aldous";
    rep.n = n;
    const std::vector<Permutation> gens = detail::variant_generators(n, variant);
    const SparseGraph g = cayley_graph(gens);
    const double lam_graph = detail::second_largest_adjacency(g, seed);
    const double lam_quotient =
        symmetric_eigen(closed_form_quotient(n, variant), false).lambda(2);
    const double deviation = std::abs(lam_graph - lam_quotient);
    const double tol = tol_override >= 0.0
        ? tol_override
        : 1e-8 * static_cast<double>(quotient_degree(n, variant));
    rep.margin(std::string(variant_name(variant)) + "_lambda2_graph", lam_graph);
    rep.margin(std::string(variant_name(variant)) + "_lambda2_quotient", lam_quotient);
    rep.margin("deviation", deviation);
    rep.margin("tolerance", tol);
    if (deviation > tol) {
        std::ostringstream os;
        os << variant_name(variant) << ": eigenvalues differ by " << deviation
           << " (allowed " << tol << ")";
        rep.fail(os.str());
    }
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// Strict growth of the quotient second eigenvalue: for each n in range,
// lambda_2' must beat its predecessor by more than 1, and lambda_2 must
// beat its predecessor by more than the same-order lambda_2'.  Both are
// computed in Laplacian form, where the margins are plain mu_2 differences
// and no large-number cancellation occurs.
inline std::vector<VerificationReport> verify_theorem2(int n_min, int n_max) {
    if (n_min < 5 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_theorem2: range must lie within 5..300");
    const int m_lo = n_min - 1;
    const int count = n_max - m_lo + 1;
    std::vector<double> mu_prime(static_cast<std::size_t>(count));
    std::vector<double> mu_plain(static_cast<std::size_t>(count));
    std::vector<double> cost_ms(static_cast<std::size_t>(count));
    parallel_for(m_lo, n_max + 1, [&](int m) {
        detail::SuiteTimer timer;
        const std::size_t at = static_cast<std::size_t>(m - m_lo);
        mu_prime[at] = symmetric_eigen(laplacian(closed_form_Qprime(m)), false).mu(2);
        mu_plain[at] = symmetric_eigen(laplacian(closed_form_Q(m)), false).mu(2);
        cost_ms[at] = timer.elapsed_ms();
    });

    std::vector<VerificationReport> out;
    out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        const std::size_t at = static_cast<std::size_t>(n - m_lo);
        VerificationReport rep;
        rep.suite = "gap-recursion";
        rep.n = n;
        const double slack_prime = mu_prime[at - 1] - mu_prime[at];
        const double slack_plain = (mu_plain[at - 1] - mu_plain[at]) + mu_prime[at];
        rep.margin("prime_slack", slack_prime);
        rep.margin("plain_slack", slack_plain);
        if (!(slack_prime > 1e-9)) {
            std::ostringstream os;
            os << "prime step inequality slack " << slack_prime << " not above 1e-9";
            rep.fail(os.str());
        }
        if (!(slack_plain > 1e-9)) {
            std::ostringstream os;
            os << "plain step inequality slack " << slack_plain << " not above 1e-9";
            rep.fail(os.str());
        }
        rep.runtime_ms = cost_ms[at];
        out.push_back(std::move(rep));
    }
    return out;
}

// Strict decrease of mu_2 of the quotient Laplacian as the order grows.
// The report for n covers the step from n-1 to n.
inline std::vector<VerificationReport> verify_prop_monotone(int n_min, int n_max,
                                                            Variant variant) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_prop_monotone: range must lie within 4..300");
    const int count = n_max - n_min + 1;
    std::vector<double> mu(static_cast<std::size_t>(count));
    std::vector<double> cost_ms(static_cast<std::size_t>(count));
    parallel_for(n_min, n_max + 1, [&](int m) {
        detail::SuiteTimer timer;
        const std::size_t at = static_cast<std::size_t>(m - n_min);
        mu[at] = symmetric_eigen(laplacian(closed_form_quotient(m, variant)), false).mu(2);
        cost_ms[at] = timer.elapsed_ms();
    });

    std::vector<VerificationReport> out;
    for (int n = n_min + 1; n <= n_max; ++n) {
        const std::size_t at = static_cast<std::size_t>(n - n_min);
        VerificationReport rep;
        rep.suite = std::string("monotone-") + variant_name(variant);
        rep.n = n;
        const double drop = mu[at - 1] - mu[at];
        rep.margin("drop", drop);
        rep.margin("mu2", mu[at]);
        if (!(drop > 1e-9)) {
            std::ostringstream os;
            os << variant_name(variant) << " mu_2 drop " << drop
               << " from order " << n - 1 << " to " << n << " not above 1e-9";
            rep.fail(os.str());
        }
        rep.runtime_ms = cost_ms[at];
        out.push_back(std::move(rep));
    }
    return out;
}

// Fine structure of the arrowhead quotient's Fiedler vector for n >= 9,
// where mu_2 <= 1: the interior three-term recurrence, the boundary row,
// the trigonometric closed form for the third entry, and the resulting
// bound on the first difference.
inline VerificationReport verify_lemma7(int n) {
    if (n < 9)
        throw std::invalid_argument("verify_lemma7: needs n >= 9");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "fiedler-form";
    rep.n = n;
    const FiedlerData fd = build_fiedler_data(n, Variant::prime);
    if (fd.mu > 1.0) {
        std::ostringstream os;
        os << "mu_2 = " << fd.mu << " exceeds 1 at n = " << n
           << ", contradicting the interlacing bound";
        throw std::runtime_error(os.str());
    }
    const double mu = fd.mu;
    const double theta = fd.theta.value();
    const std::vector<double>& v = fd.v;
    const double tol = 1e-8;  // v has unit norm

    double recurrence = 0.0;  // rows 4..n-1, 1-based
    for (int r = 3; r + 1 < n; ++r)
        recurrence = std::max(
            recurrence,
            std::abs(v[static_cast<std::size_t>(r + 1)]
                     - ((2.0 - mu) * v[static_cast<std::size_t>(r)]
                        - v[static_cast<std::size_t>(r - 1)])));
    const double boundary =
        std::abs(v[static_cast<std::size_t>(n - 2)]
                 - (1.0 - mu) * v[static_cast<std::size_t>(n - 1)]);
    const double phase = std::cos((2.0 * n - 5.0) * theta / 2.0);
    const double closed_form =
        std::abs(v[2] * std::cos(theta / 2.0) - phase * v[static_cast<std::size_t>(n - 1)]);
    const double first_step = std::abs(v[1] - v[0]);
    const double first_step_bound =
        2.0 * mu * std::abs(phase) * std::abs(v[static_cast<std::size_t>(n - 1)])
        / (static_cast<double>(n) * std::cos(theta / 2.0));
    const double bound_slack = first_step_bound - first_step;

    rep.margin("mu", mu);
    rep.margin("theta", theta);
    rep.margin("recurrence", recurrence);
    rep.margin("boundary", boundary);
    rep.margin("closed_form", closed_form);
    rep.margin("bound_slack", bound_slack);
    if (recurrence > tol) rep.fail("interior recurrence residual above tolerance");
    if (boundary > tol) rep.fail("boundary row residual above tolerance");
    if (closed_form > tol) rep.fail("third-entry closed form residual above tolerance");
    if (bound_slack < -tol) rep.fail("first-difference bound violated");
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// Shape of the full quotient's Fiedler vector: mu_2 simple (gap above
// 1e-10), entries non-decreasing up to -1e-9, and skew-symmetric under the
// exchange reversal within 1e-8.
inline std::vector<VerificationReport> verify_corollary1(int n_min, int n_max) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_corollary1: range must lie within 4..300");
    const int count = n_max - n_min + 1;
    std::vector<VerificationReport> out(static_cast<std::size_t>(count));
    parallel_for(n_min, n_max + 1, [&](int n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "fiedler-shape";
        rep.n = n;
        const FiedlerResult f = fiedler(laplacian(closed_form_Q(n)));
        double min_difference = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < f.v.size(); ++i)
            min_difference = std::min(min_difference, f.v[i + 1] - f.v[i]);
        double skew2 = 0.0;
        for (std::size_t i = 0; i < f.v.size(); ++i) {
            const double s = f.v[i] + f.v[f.v.size() - 1 - i];
            skew2 += s * s;
        }
        const double skew_defect = std::sqrt(skew2);
        rep.margin("gap", f.gap);
        rep.margin("min_difference", min_difference);
        rep.margin("skew_defect", skew_defect);
        if (!(f.gap > 1e-10)) rep.fail("spectral gap above mu_2 not above 1e-10");
        if (!(min_difference >= -1e-9)) rep.fail("vector entries not monotone");
        if (!(skew_defect <= 1e-8)) rep.fail("vector not skew-symmetric under reversal");
        rep.runtime_ms = timer.elapsed_ms();
        out[static_cast<std::size_t>(n - n_min)] = std::move(rep);
    });
    return out;
}

// Spectrum split through the coset quotient: every full-graph eigenvalue
// that is not a quotient eigenvalue must obey the stabiliser-plus-moving
// bound for the natural split of each generating set.
inline VerificationReport verify_covering_bound(int n, double match_tol = 1e-7) {
    if (n < 5 || n > 6)
        throw std::invalid_argument("verify_covering_bound: n must be 5 or 6");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "covering";
    rep.n = n;
    for (const Variant variant : {Variant::prime, Variant::plain}) {
        const std::string tag = variant_name(variant);
        const std::vector<Permutation> gens = detail::variant_generators(n, variant);
        const SparseGraph g = cayley_graph(gens);
        const std::vector<double> spec_graph =
            symmetric_eigen(adjacency_matrix(g), false).values();
        const std::vector<double> spec_quotient =
            symmetric_eigen(closed_form_quotient(n, variant), false).values();
        const std::optional<std::vector<double>> leftover =
            detail::multiset_subtract(spec_graph, spec_quotient, match_tol);
        if (!leftover) {
            rep.fail(tag + ": quotient spectrum not contained in graph spectrum");
            break;
        }
        // The bound concerns eigenvalues outside the quotient's value set, so
        // every copy of a matched value is screened out, not just one per
        // quotient eigenvalue.
        std::vector<double> residual;
        for (const double x : spec_graph) {
            bool matched = false;
            for (const double q : spec_quotient)
                if (std::abs(x - q) <= match_tol) {
                    matched = true;
                    break;
                }
            if (!matched) residual.push_back(x);
        }

        double bound = 0.0;
        if (variant == Variant::prime) {
            // Split at the last point: the generators fixing it restrict to
            // the order-(n-1) set; the one moving generator forms a perfect
            // matching whose largest non-degree eigenvalue is 1.
            const SparseGraph stab = cayley_graph(gen_prime_set(n - 1));
            bound = symmetric_eigen(adjacency_matrix(stab), false).lambda(2) + 1.0;
        } else {
            // Split at the first point: the fixing generators relabel to the
            // order-(n-1) full set, whose lambda_2 equals the quotient's;
            // the moving generators form the same-order restricted set.
            bound = symmetric_eigen(closed_form_Q(n - 1), false).lambda(2)
                  + symmetric_eigen(closed_form_Qprime(n), false).lambda(2);
        }
        const double worst = residual.empty() ? -std::numeric_limits<double>::infinity()
                                              : residual.back();
        const double slack = bound - worst;
        rep.margin(tag + "_bound", bound);
        rep.margin(tag + "_worst_residual", worst);
        rep.margin(tag + "_slack", slack);
        if (slack < -1e-9) {
            std::ostringstream os;
            os << tag << ": residual eigenvalue " << worst << " exceeds bound " << bound;
            rep.fail(os.str());
        }
    }
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// The restricted generating set splits at the last point into a stabiliser
// part that is exactly the order-(n-1) restricted set, and a single moving
// involution whose graph is a perfect matching on n! vertices.
inline VerificationReport verify_matching_split(int n) {
    if (n < 4 || n > 7)
        throw std::invalid_argument("verify_matching_split: n must lie in 4..7");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "matching";
    rep.n = n;

    const std::vector<Permutation> gens = gen_prime_set(n);
    const auto [fixing, moving] = stab_split(gens, n);

    const SparseGraph moved = cayley_graph(moving);
    const std::int64_t order = factorial(n);
    if (moved.num_vertices() != order
        || static_cast<std::int64_t>(moved.num_edges()) * 2 != order
        || moved.regular_degree() != 1)
        rep.fail("moving part is not a perfect matching");

    std::vector<Permutation> restricted;
    restricted.reserve(fixing.size());
    for (const Permutation& s : fixing) restricted.push_back(restrict_fixing_last(s));
    std::sort(restricted.begin(), restricted.end());

    std::vector<Permutation> expected;
    if (n >= 5) {
        expected = gen_prime_set(n - 1);
    } else {
        // The order-3 restricted set falls below the generator constructors'
        // domain; it consists of the two 3-cycles and the long transposition.
        expected.push_back(from_cycles(3, {{1, 2, 3}}));
        expected.push_back(from_cycles(3, {{1, 3, 2}}));
        expected.push_back(from_cycles(3, {{1, 3}}));
    }
    std::sort(expected.begin(), expected.end());
    if (restricted != expected)
        rep.fail("stabiliser part does not restrict to the order-(n-1) set");
    else if (!graphs_equal(cayley_graph(restricted), cayley_graph(expected)))
        rep.fail("restricted stabiliser graph differs");

    rep.margin("matching_edges", static_cast<double>(moved.num_edges()));
    rep.margin("stabiliser_size", static_cast<double>(restricted.size()));
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// Interlacing bound on the arrowhead quotient: deleting rows {1,2,3,n}
// (1-based) of the Laplacian must leave exactly 2I minus a path adjacency,
// and mu_2 must respect the interlacing consequence 2 - 2cos(2pi/(n-3)),
// tightening to 1 from n = 9 on.
inline std::vector<VerificationReport> verify_prime_bound(int n_min, int n_max) {
    if (n_min < 6 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_prime_bound: range must lie within 6..300");
    std::vector<VerificationReport> out(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(n_min, n_max + 1, [&](int n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "prime-bound";
        rep.n = n;
        const IntMatrix lap = laplacian(closed_form_Qprime(n));
        const std::vector<int> deleted = {0, 1, 2, n - 1};
        const InterlacingResultInt res = interlacing_check(lap, deleted);
        if (!res.report.holds)
            rep.fail("interlacing violated: " + res.report.detail);
        const IntMatrix path_form =
            IntMatrix::identity(n - 4) * 2 - adjacency_matrix(path_graph(n - 4));
        rep.margin("submatrix_exact", res.submatrix == path_form ? 1.0 : 0.0);
        if (!(res.submatrix == path_form))
            rep.fail("deleted submatrix is not 2I minus the path adjacency");
        const double mu2 = symmetric_eigen(lap, false).mu(2);
        const double bound = prime_mu2_upper_bound(n);
        rep.margin("mu2", mu2);
        rep.margin("bound_slack", bound - mu2);
        if (!(mu2 <= bound + 1e-9))
            rep.fail("mu_2 exceeds the trigonometric bound");
        if (n >= 9) {
            rep.margin("one_slack", 1.0 - mu2);
            if (!(mu2 <= 1.0 + 1e-9)) rep.fail("mu_2 exceeds 1");
        }
        rep.runtime_ms = timer.elapsed_ms();
        out[static_cast<std::size_t>(n - n_min)] = std::move(rep);
    });
    return out;
}

// Rayleigh-quotient bound on the full quotient: the linear test vector
// evaluates to exactly (n-2)(n+7), giving mu_2 <= 12(n-2)(n+7)/(n(n^2-1)),
// which stays below 4 from n = 5 on.
inline std::vector<VerificationReport> verify_plain_bound(int n_min, int n_max) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_plain_bound: range must lie within 4..300");
    std::vector<VerificationReport> out(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(n_min, n_max + 1, [&](int n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "plain-bound";
        rep.n = n;
        const IntMatrix lap = laplacian(closed_form_Q(n));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] = i + 1 - 0.5 * (n + 1);
        double rayleigh = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j)
                row += static_cast<double>(lap(i, j)) * x[static_cast<std::size_t>(j)];
            rayleigh += x[static_cast<std::size_t>(i)] * row;
        }
        const double expected = static_cast<double>(n - 2) * (n + 7);
        const double rel_err = std::abs(rayleigh - expected) / expected;
        rep.margin("rayleigh_rel_err", rel_err);
        if (rel_err > 1e-10) rep.fail("linear test vector Rayleigh value is off");
        const double mu2 = symmetric_eigen(lap, false).mu(2);
        const double bound = plain_mu2_upper_bound(n);
        rep.margin("mu2", mu2);
        rep.margin("bound_slack", bound - mu2);
        if (!(mu2 <= bound + 1e-9))
            rep.fail("mu_2 exceeds the Rayleigh bound");
        if (n >= 5) {
            rep.margin("four_slack", 4.0 - mu2);
            if (!(mu2 <= 4.0 + 1e-9)) rep.fail("mu_2 exceeds 4");
        }
        rep.runtime_ms = timer.elapsed_ms();
        out[static_cast<std::size_t>(n - n_min)] = std::move(rep);
    });
    return out;
}

// Degree-shifted quotients are positive semidefinite of rank exactly n-1:
// (degree I) - Q has one zero eigenvalue (the all-ones direction) and no
// negative ones, for both variants.
inline std::vector<VerificationReport> verify_psd_shift(int n_min, int n_max) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_psd_shift: range must lie within 4..300");
    std::vector<VerificationReport> out(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(n_min, n_max + 1, [&](int n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "psd-shift";
        rep.n = n;
        for (const Variant variant : {Variant::plain, Variant::prime}) {
            const IntMatrix shifted =
                IntMatrix::identity(n) * quotient_degree(n, variant)
                - closed_form_quotient(n, variant);
            const StructureReport sr = psd_rank_check(shifted, n - 1);
            rep.margin(std::string(variant_name(variant)) + "_psd",
                       sr.holds ? 1.0 : 0.0);
            if (!sr.holds)
                rep.fail(std::string(variant_name(variant)) + ": " + sr.detail);
        }
        rep.runtime_ms = timer.elapsed_ms();
        out[static_cast<std::size_t>(n - n_min)] = std::move(rep);
    });
    return out;
}

// The exact order-(n+1) Laplacian decompositions, both variants, as integer
// identities.
inline std::vector<VerificationReport> verify_decomposition(int n_min, int n_max) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_decomposition: range must lie within 4..300");
    std::vector<VerificationReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "decomposition";
        rep.n = n;
        for (const Variant variant : {Variant::prime, Variant::plain}) {
            const StructureReport sr = decomposition_check(n, variant);
            rep.margin(std::string(variant_name(variant)) + "_exact",
                       sr.holds ? 1.0 : 0.0);
            if (!sr.holds)
                rep.fail(std::string(variant_name(variant)) + ": " + sr.describe());
        }
        rep.runtime_ms = timer.elapsed_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

// The pentadiagonal quadratic-form identity on seeded random vectors.
inline std::vector<VerificationReport> verify_quadratic_form(int n_min, int n_max,
                                                             std::uint64_t seed = 42,
                                                             int vectors_per_n = 1000) {
    if (n_min < 4 || n_max > 300 || n_min > n_max)
        throw std::invalid_argument("verify_quadratic_form: range must lie within 4..300");
    std::vector<VerificationReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        detail::SuiteTimer timer;
        VerificationReport rep;
        rep.suite = "quadratic-form";
        rep.n = n;
        const IntMatrix lap = laplacian(closed_form_Q(n));
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        std::vector<double> y(static_cast<std::size_t>(n));
        int checked = 0;
        for (int t = 0; t < vectors_per_n; ++t) {
            for (double& c : y) c = unit(rng);
            const StructureReport sr = quadratic_form_check(lap, y);
            if (!sr.holds) {
                rep.fail(sr.describe());
                break;
            }
            ++checked;
        }
        rep.margin("vectors_checked", checked);
        rep.runtime_ms = timer.elapsed_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

// Lift identity and spectrum containment through the coset partition on the
// actual graph: A S = S Q exactly, and the quotient spectrum sits inside
// the graph spectrum within 1e-7.
inline VerificationReport verify_lift_containment(int n, double match_tol = 1e-7) {
    if (n < 4 || n > 6)
        throw std::invalid_argument("verify_lift_containment: n must lie in 4..6");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "lift";
    rep.n = n;
    for (const Variant variant : {Variant::plain, Variant::prime}) {
        const std::string tag = variant_name(variant);
        const SparseGraph g = cayley_graph(detail::variant_generators(n, variant));
        const Partition pi = coset_partition(n);
        const IntMatrix q = closed_form_quotient(n, variant);
        if (!lift_identity_holds(g, pi, q)) {
            rep.fail(tag + ": lift identity A S = S Q fails");
            continue;
        }
        const std::vector<double> spec_graph =
            symmetric_eigen(adjacency_matrix(g), false).values();
        const std::vector<double> spec_quotient = symmetric_eigen(q, false).values();
        const ContainmentResult cr =
            spectrum_containment(spec_quotient, spec_graph, match_tol);
        rep.margin(tag + "_worst_match_gap", cr.worst_gap);
        if (!cr.contained)
            rep.fail(tag + ": quotient eigenvalue " +
                     std::to_string(spec_quotient[static_cast<std::size_t>(cr.failing_index)])
                     + " missing from graph spectrum");
    }
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

// Edge-by-edge correspondence between the chain graph on full flags and the
// graph on S_n generated by the matching block-count class, for every k.
inline VerificationReport verify_flag_correspondence(int n) {
    if (n < 4 || n > 6)
        throw std::invalid_argument("verify_flag_correspondence: n must lie in 4..6");
    detail::SuiteTimer timer;
    VerificationReport rep;
    rep.suite = "flag-correspondence";
    rep.n = n;
    int checked = 0;
    for (int k = 1; k < n; ++k) {
        const IsomorphismReport iso = dai_isomorphism_check(n, k);
        if (!iso.holds) {
            std::ostringstream os;
            os << "k = " << k << ": " << iso.detail;
            rep.fail(os.str());
            break;
        }
        ++checked;
    }
    rep.margin("levels_checked", checked);
    rep.runtime_ms = timer.elapsed_ms();
    return rep;
}

}  // namespace ffj
