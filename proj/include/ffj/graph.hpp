#pragma once

// Undirected graphs in compressed sparse row form.  Vertex ids are dense
// 0-based ints; for graphs on S_n the id of a vertex is the lexicographic
// rank of its permutation.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace ffj {

class SparseGraph {
public:
    // Builds from an undirected edge list; duplicates collapse, loops and
    // out-of-range endpoints are rejected.
    static SparseGraph from_edges(int num_vertices, std::vector<std::pair<int, int>> edges) {
        if (num_vertices < 0) throw std::invalid_argument("SparseGraph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
                throw std::invalid_argument("SparseGraph: endpoint out of range");
            if (u == v) throw std::invalid_argument("SparseGraph: loop edge");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        SparseGraph g;
        g.n_ = num_vertices;
        std::vector<std::size_t> deg(static_cast<std::size_t>(num_vertices), 0);
        for (const auto& [u, v] : edges) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
        for (int i = 0; i < num_vertices; ++i)
            g.offsets_[static_cast<std::size_t>(i) + 1] =
                g.offsets_[static_cast<std::size_t>(i)] + deg[static_cast<std::size_t>(i)];
        g.adj_.resize(g.offsets_.back());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : edges) {
            g.adj_[cursor[static_cast<std::size_t>(u)]++] = v;
            g.adj_[cursor[static_cast<std::size_t>(v)]++] = u;
        }
        // Rows come out sorted because the edge list was sorted by (min,max),
        // except that a vertex's neighbors from its "v" role interleave; sort
        // each row to keep lookups binary-searchable.
        for (int i = 0; i < num_vertices; ++i) {
            auto b = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(i)]);
            auto e = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(i) + 1]);
            std::sort(b, e);
        }
        return g;
    }

    int num_vertices() const { return n_; }

    std::size_t num_edges() const { return adj_.size() / 2; }

    int degree(int v) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1]
                              - offsets_[static_cast<std::size_t>(v)]);
    }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
                adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }

    bool has_edge(int u, int v) const {
        const auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Common degree if the graph is regular, -1 otherwise.
    int regular_degree() const {
        if (n_ == 0) return -1;
        const int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return -1;
        return d;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int visited = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++visited;
                    q.push(w);
                }
            }
        }
        return visited == n_;
    }

    // y = A x.
    void matvec(const std::vector<double>& x, std::vector<double>& y) const {
        y.assign(static_cast<std::size_t>(n_), 0.0);
        for (int u = 0; u < n_; ++u) {
            double s = 0.0;
            for (int w : neighbors(u)) s += x[static_cast<std::size_t>(w)];
            y[static_cast<std::size_t>(u)] = s;
        }
    }

private:
    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<int> adj_;
};

// Dense 0/1 adjacency matrix; only sensible for small graphs.
inline IntMatrix adjacency_matrix(const SparseGraph& g) {
    const int n = g.num_vertices();
    IntMatrix a(n, n);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) a(u, w) = 1;
    return a;
}

// Same vertex set and identical sorted adjacency lists.
inline bool graphs_equal(const SparseGraph& a, const SparseGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    for (int u = 0; u < a.num_vertices(); ++u) {
        const auto na = a.neighbors(u);
        const auto nb = b.neighbors(u);
        if (na.size() != nb.size()) return false;
        for (std::size_t k = 0; k < na.size(); ++k)
            if (na[k] != nb[k]) return false;
    }
    return true;
}

inline SparseGraph path_graph(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return SparseGraph::from_edges(m, std::move(edges));
}

inline SparseGraph complete_graph(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    return SparseGraph::from_edges(m, std::move(edges));
}

// k-subsets of {1..n} in lexicographic order, as bitmasks.
inline std::vector<std::uint32_t> k_subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int p : pick) mask |= (1u << p);
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Vertices are the k-subsets of {1..n} in lexicographic order; two subsets
// are adjacent when they share k-1 elements.
inline SparseGraph johnson_graph(int n, int k) {
    if (n < 1 || n > 16) throw std::invalid_argument("johnson_graph: n out of range");
    if (k < 1 || k >= n) throw std::invalid_argument("johnson_graph: need 1 <= k < n");
    const auto subsets = k_subsets(n, k);
    const int nv = static_cast<int>(subsets.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (std::popcount(subsets[static_cast<std::size_t>(i)]
                              & subsets[static_cast<std::size_t>(j)]) == k - 1)
                edges.emplace_back(i, j);
    return SparseGraph::from_edges(nv, std::move(edges));
}

// Plain-text export: header "p <V> <E>" then one "u v" line per undirected
// edge with u < v, vertices 0-based.
inline void write_edge_list(std::ostream& os, const SparseGraph& g) {
    os << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) os << u << ' ' << v << '\n';
}

// Label sidecar: one "index label" line per vertex.
inline void write_labels(std::ostream& os, const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        os << i << ' ' << labels[i] << '\n';
}

}  // namespace ffj
