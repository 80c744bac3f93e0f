#pragma once

// Graphs on the symmetric group: Cayley graphs under the left action
// (g adjacent to sigma*g), the flag graph whose vertices are complete
// chains of nested prefix-image sets, and the rank-level isomorphism
// between the two.  Everything here enumerates S_n, so degrees are
// guarded to desk scale.

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "generating.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "permutation.hpp"

namespace ffj {

// Throws unless the set is identity-free, inverse-closed, duplicate-free,
// and of uniform degree; these are the conditions for an undirected
// loop-free Cayley graph.
inline void validate_connection_set(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw std::invalid_argument("connection set: empty");
    const int n = gens.front().degree();
    std::vector<Permutation> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw std::invalid_argument("connection set: duplicate element");
    for (const auto& g : gens) {
        if (g.degree() != n) throw std::invalid_argument("connection set: mixed degrees");
        if (g.is_identity()) throw std::invalid_argument("connection set: contains identity");
        const Permutation gi = g.inverse();
        if (!std::binary_search(sorted.begin(), sorted.end(), gi))
            throw std::invalid_argument("connection set: not closed under inverses");
    }
}

constexpr int kMaxEnumeratedDegree = 8;

// Cay(S_n, gens): vertex rank(g) joins vertex rank(sigma * g).
inline SparseGraph cayley_graph(const std::vector<Permutation>& gens) {
    validate_connection_set(gens);
    const int n = gens.front().degree();
    if (n > kMaxEnumeratedDegree)
        throw std::invalid_argument("cayley_graph: n out of enumerable range");
    const auto group = symmetric_group(n);
    const int nv = static_cast<int>(group.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(nv) * gens.size());
    for (int u = 0; u < nv; ++u)
        for (const auto& s : gens) {
            const int v = static_cast<int>(perm_rank(compose(s, group[static_cast<std::size_t>(u)])));
            edges.emplace_back(u, v);
        }
    return SparseGraph::from_edges(nv, std::move(edges));
}

// Quotient of Cay(S_n, gens) over the partition by image of the symbol 1:
// entry (i, j) counts the generators mapping i to j (1-based symbols,
// 0-based matrix indices).  Needs no group enumeration, so it works at any n.
inline IntMatrix schreier_matrix(const std::vector<Permutation>& gens) {
    validate_connection_set(gens);
    const int n = gens.front().degree();
    IntMatrix q(n, n);
    for (const auto& s : gens)
        for (int i = 0; i < n; ++i) ++q(i, s(i));
    return q;
}

// The complete chain of prefix-image sets of w, as bitmasks: level t holds
// w({1..t+1}) for t = 0..n-1.
inline std::vector<std::uint32_t> flag_of(const Permutation& w) {
    const int n = w.degree();
    if (n > 31) throw std::invalid_argument("flag_of: degree too large for bitmask");
    std::vector<std::uint32_t> f(static_cast<std::size_t>(n), 0);
    std::uint32_t acc = 0;
    for (int t = 0; t < n; ++t) {
        acc |= (1u << w(t));
        f[static_cast<std::size_t>(t)] = acc;
    }
    return f;
}

// Graph on all complete chains F_1 c F_2 c ... c F_n = {1..n}; two chains
// are adjacent when they disagree at exactly k levels.  Vertex i is the
// chain of prefix images of the permutation of rank i.  k = 0 yields the
// edgeless graph, since differing in zero levels means equality.
inline SparseGraph flag_johnson_graph(int n, int k) {
    if (n < 1 || n > kMaxEnumeratedDegree)
        throw std::invalid_argument("flag_johnson_graph: n out of enumerable range");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("flag_johnson_graph: need 0 <= k < n");
    const auto group = symmetric_group(n);
    const int nv = static_cast<int>(group.size());
    if (k == 0) return SparseGraph::from_edges(nv, {});
    std::vector<std::uint32_t> flags;
    flags.reserve(static_cast<std::size_t>(nv) * static_cast<std::size_t>(n));
    for (const auto& w : group) {
        auto f = flag_of(w);
        for (int t = 0; t + 1 < n; ++t) {
            if (std::popcount(f[static_cast<std::size_t>(t)]) != t + 1
                || (f[static_cast<std::size_t>(t)] & ~f[static_cast<std::size_t>(t) + 1]) != 0)
                throw std::logic_error("flag_johnson_graph: malformed chain");
        }
        flags.insert(flags.end(), f.begin(), f.end());
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nv; ++u) {
        const std::uint32_t* fu = flags.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n);
        for (int v = u + 1; v < nv; ++v) {
            const std::uint32_t* fv = flags.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n);
            int differ = 0;
            int common = 0;
            for (int t = 0; t < n; ++t) {
                differ += (fu[t] != fv[t]);
                common += (fu[t] == fv[t]);
            }
            if (differ == k) {
                // Cross-check the equivalent shared-subset criterion.
                if (common != n - k)
                    throw std::logic_error("flag_johnson_graph: chain comparison mismatch");
                edges.emplace_back(u, v);
            }
        }
    }
    return SparseGraph::from_edges(nv, std::move(edges));
}

struct IsomorphismReport {
    bool holds = false;
    std::string detail;
};

// Checks that rank(g) -> rank(g^{-1}) maps Cay(S_n, R_n(k)) onto the chain
// graph above edge for edge.  Both graphs have the same vertex and edge
// counts, so injectivity on edges settles it.  Note the inversion: mapping
// g to its own chain fails, because an edge pair (g, sigma g) has
// chain-difference count max_reducibility(g^{-1} sigma g), and conjugation
// does not preserve block counts.  Mapping g to the chain of g^{-1} gives
// difference count n - max_reducibility(sigma) = k as required.
inline IsomorphismReport dai_isomorphism_check(int n, int k) {
    if (n < 4 || n > 6)
        throw std::invalid_argument("dai_isomorphism_check: needs 4 <= n <= 6");
    if (k < 1 || k >= n)
        throw std::invalid_argument("dai_isomorphism_check: need 1 <= k < n");
    IsomorphismReport rep;
    const auto cay = cayley_graph(gen_reducible_set(n, k));
    const auto fj = flag_johnson_graph(n, k);
    if (cay.num_vertices() != fj.num_vertices()) {
        rep.detail = "vertex counts differ";
        return rep;
    }
    if (cay.num_edges() != fj.num_edges()) {
        std::ostringstream os;
        os << "edge counts differ: " << cay.num_edges() << " vs " << fj.num_edges();
        rep.detail = os.str();
        return rep;
    }
    const auto group = symmetric_group(n);
    std::vector<int> inv(group.size());
    for (std::size_t i = 0; i < group.size(); ++i)
        inv[i] = static_cast<int>(perm_rank(group[i].inverse()));
    for (int u = 0; u < cay.num_vertices(); ++u)
        for (int v : cay.neighbors(u)) {
            if (u > v) continue;
            if (!fj.has_edge(inv[static_cast<std::size_t>(u)], inv[static_cast<std::size_t>(v)])) {
                std::ostringstream os;
                os << "edge (" << u << "," << v << ") has no image";
                rep.detail = os.str();
                return rep;
            }
        }
    rep.holds = true;
    std::ostringstream os;
    os << cay.num_edges() << " edges matched";
    rep.detail = os.str();
    return rep;
}

// Cycle-notation labels for the vertices of a graph on S_n, in rank order.
inline std::vector<std::string> rank_labels(int n) {
    const auto group = symmetric_group(n);
    std::vector<std::string> labels;
    labels.reserve(group.size());
    for (const auto& g : group) labels.push_back(to_cycle_string(g));
    return labels;
}

}  // namespace ffj
