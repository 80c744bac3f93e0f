#pragma once

// Closed forms of the two quotient matrices under the image-of-1 coset
// partition, together with the degree constants and the two analytic upper
// bounds on the second-smallest Laplacian eigenvalue.  All entries are
// exact integers; both builders are cross-checked against schreier_matrix
// in the test suite.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "matrix.hpp"

namespace ffj {

enum class Variant { plain, prime };

inline const char* variant_name(Variant v) {
    return v == Variant::plain ? "plain" : "prime";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "plain") return Variant::plain;
    if (s == "prime") return Variant::prime;
    throw std::invalid_argument("variant must be 'plain' or 'prime'");
}

// Row sum of the plain quotient matrix: |R_n(2)| = (n^2+n-6)/2.
inline std::int64_t plain_degree(int n) {
    return (static_cast<std::int64_t>(n) * n + n - 6) / 2;
}

// Row sum of the prime quotient matrix: |R'_n(2)| = n.
inline std::int64_t prime_degree(int n) { return n; }

// Pentadiagonal quotient of the plain connection set: off-diagonals n-2 and
// 2; diagonal (n^2-n-6)/2 at both ends, (n^2-3n-2)/2 one step in, and
// (n^2-3n-6)/2 in the interior.
inline IntMatrix closed_form_Q(int n) {
    if (n < 4) throw std::invalid_argument("closed_form_Q: needs n >= 4");
    IntMatrix q(n, n);
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || i == n - 1)
            q(i, i) = (nn - n - 6) / 2;
        else if (i == 1 || i == n - 2)
            q(i, i) = (nn - 3 * n - 2) / 2;
        else
            q(i, i) = (nn - 3 * n - 6) / 2;
        if (i + 1 < n) {
            q(i, i + 1) = n - 2;
            q(i + 1, i) = n - 2;
        }
        if (i + 2 < n) {
            q(i, i + 2) = 2;
            q(i + 2, i) = 2;
        }
    }
    return q;
}

// Quotient of the prime connection set: an arrowhead on the first three
// indices joined to a tridiagonal tail.
inline IntMatrix closed_form_Qprime(int n) {
    if (n < 4) throw std::invalid_argument("closed_form_Qprime: needs n >= 4");
    IntMatrix q(n, n);
    q(0, 1) = n - 2;
    q(1, 0) = n - 2;
    q(0, 2) = 2;
    q(2, 0) = 2;
    q(1, 1) = 1;
    q(1, 2) = 1;
    q(2, 1) = 1;
    q(2, 2) = n - 4;
    q(2, 3) = 1;
    q(3, 2) = 1;
    for (int i = 3; i < n - 1; ++i) {
        q(i, i) = n - 2;
        q(i, i + 1) = 1;
        q(i + 1, i) = 1;
    }
    q(n - 1, n - 1) = n - 1;
    return q;
}

inline IntMatrix closed_form_quotient(int n, Variant v) {
    return v == Variant::plain ? closed_form_Q(n) : closed_form_Qprime(n);
}

inline std::int64_t quotient_degree(int n, Variant v) {
    return v == Variant::plain ? plain_degree(n) : prime_degree(n);
}

// Interlacing bound: deleting rows/columns {1,2,3,n} of the prime Laplacian
// leaves twice the identity minus a path adjacency, so the second-smallest
// eigenvalue is at most the path's second point, 2 - 2cos(2pi/(n-3)).
inline double prime_mu2_upper_bound(int n) {
    if (n < 6) throw std::invalid_argument("prime_mu2_upper_bound: needs n >= 6");
    return 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / (n - 3));
}

// Rayleigh bound from the centered linear test vector x_i = i - (n+1)/2:
// the quadratic form evaluates to (n-2)(n+7) and the norm to n(n^2-1)/12.
inline double plain_mu2_upper_bound(int n) {
    if (n < 4) throw std::invalid_argument("plain_mu2_upper_bound: needs n >= 4");
    return 12.0 * (n - 2.0) * (n + 7.0) / (n * (static_cast<double>(n) * n - 1.0));
}

}  // namespace ffj
