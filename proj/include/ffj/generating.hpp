#pragma once

// Generating sets for the symmetric group built from interval-block
// structure.  A permutation splits into blocks at every prefix {1..t} it
// stabilises; the connection sets used throughout are the permutations with
// a prescribed block count, plus the sub-family of those moving the symbol 1.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace ffj {

// Number of t in {1..n} with sigma({1..t}) = {1..t}; equivalently the number
// of blocks in the finest invariant decomposition of {1..n} into contiguous
// intervals.  Identity -> n, an adjacent transposition -> n-1.  Every set of
// cut points is a subset of the greedy one, so the greedy scan is exact.
inline int max_reducibility(const Permutation& sigma) {
    const int n = sigma.degree();
    int prefix_max = -1;
    int count = 0;
    for (int t = 0; t < n; ++t) {
        prefix_max = std::max(prefix_max, sigma(t));
        if (prefix_max == t) ++count;
    }
    return count;
}

// R_n(k): permutations of S_n with exactly n-k blocks, sorted by rank.
// k = 0 selects only the identity, which connection sets exclude, so the
// result is empty.  k = 1 gives the adjacent transpositions.  k = 1 and
// k = 2 are built explicitly and work at any n; other k fall back to
// scanning S_n and are guarded to n <= 8.
inline std::vector<Permutation> gen_reducible_set(int n, int k) {
    if (n < 4) throw std::invalid_argument("gen_reducible_set: needs n >= 4");
    if (k < 0 || k >= n) throw std::invalid_argument("gen_reducible_set: need 0 <= k < n");
    std::vector<Permutation> out;
    if (k == 0) {
        return out;
    } else if (k == 1) {
        for (int i = 1; i < n; ++i) out.push_back(transposition(n, i, i + 1));
    } else if (k == 2) {
        // One 3-block: the interval [i, i+2] permuted without an inner cut.
        for (int i = 1; i <= n - 2; ++i) {
            out.push_back(from_cycles(n, {{i, i + 2}}));
            out.push_back(from_cycles(n, {{i, i + 1, i + 2}}));
            out.push_back(from_cycles(n, {{i, i + 2, i + 1}}));
        }
        // Two disjoint 2-blocks.
        for (int i = 1; i + 2 <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                out.push_back(from_cycles(n, {{i, i + 1}, {j, j + 1}}));
    } else {
        if (n > 8) throw std::invalid_argument("gen_reducible_set: k > 2 is brute force, needs n <= 8");
        for (const auto& sigma : symmetric_group(n))
            if (max_reducibility(sigma) == n - k) out.push_back(sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The members of gen_reducible_set(n, 2) that move the symbol 1: the three
// permutations supported on {1,2,3} together with (1,2)(j-1,j) for
// 4 <= j <= n.  Exactly n elements.
inline std::vector<Permutation> gen_prime_set(int n) {
    if (n < 4) throw std::invalid_argument("gen_prime_set: needs n >= 4");
    std::vector<Permutation> out;
    out.push_back(from_cycles(n, {{1, 2, 3}}));
    out.push_back(from_cycles(n, {{1, 3, 2}}));
    out.push_back(from_cycles(n, {{1, 3}}));
    for (int j = 4; j <= n; ++j)
        out.push_back(from_cycles(n, {{1, 2}, {j - 1, j}}));
    std::sort(out.begin(), out.end());
    return out;
}

// Splits a connection set by whether the 1-based symbol `point` is fixed.
// Returns {fixing, moving}.
inline std::pair<std::vector<Permutation>, std::vector<Permutation>>
stab_split(const std::vector<Permutation>& gens, int point) {
    std::pair<std::vector<Permutation>, std::vector<Permutation>> out;
    for (const auto& g : gens) {
        if (g.fixes(point - 1))
            out.first.push_back(g);
        else
            out.second.push_back(g);
    }
    return out;
}

// Restriction of a permutation fixing 1 to the symbols {2..n}, relabelled
// down to S_{n-1}.
inline Permutation restrict_fixing_first(const Permutation& sigma) {
    const int n = sigma.degree();
    if (n < 2 || !sigma.fixes(0))
        throw std::invalid_argument("restrict_fixing_first: permutation must fix 1");
    std::vector<int> im(static_cast<std::size_t>(n - 1));
    for (int x = 1; x < n; ++x) im[static_cast<std::size_t>(x - 1)] = sigma(x) - 1;
    return Permutation::from_images(std::move(im));
}

// Restriction of a permutation fixing n to the symbols {1..n-1}; the labels
// already live in S_{n-1}.
inline Permutation restrict_fixing_last(const Permutation& sigma) {
    const int n = sigma.degree();
    if (n < 2 || !sigma.fixes(n - 1))
        throw std::invalid_argument("restrict_fixing_last: permutation must fix n");
    std::vector<int> im(static_cast<std::size_t>(n - 1));
    for (int x = 0; x + 1 < n; ++x) im[static_cast<std::size_t>(x)] = sigma(x);
    return Permutation::from_images(std::move(im));
}

}  // namespace ffj
