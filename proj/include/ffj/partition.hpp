#pragma once

// Vertex partitions, equitability, and quotient matrices.  A partition is
// equitable when every vertex of a part sees the same number of neighbors
// in each part; the induced quotient matrix then lifts: A S = S Q for the
// 0/1 part-indicator matrix S, and the quotient spectrum embeds in the
// graph spectrum.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"
#include "permutation.hpp"

namespace ffj {

class Partition {
public:
    // part_of[v] = part id of vertex v; ids must cover 0..max contiguously.
    explicit Partition(std::vector<int> part_of) : part_of_(std::move(part_of)) {
        int maxp = -1;
        for (int p : part_of_) {
            if (p < 0) throw std::invalid_argument("Partition: negative part id");
            if (p > maxp) maxp = p;
        }
        num_parts_ = maxp + 1;
        sizes_.assign(static_cast<std::size_t>(num_parts_), 0);
        for (int p : part_of_) ++sizes_[static_cast<std::size_t>(p)];
        for (std::int64_t s : sizes_)
            if (s == 0) throw std::invalid_argument("Partition: empty part");
    }

    int num_parts() const { return num_parts_; }
    int num_vertices() const { return static_cast<int>(part_of_.size()); }
    int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
    std::int64_t part_size(int p) const { return sizes_[static_cast<std::size_t>(p)]; }

private:
    std::vector<int> part_of_;
    int num_parts_ = 0;
    std::vector<std::int64_t> sizes_;
};

// Partition of S_n (vertices = ranks) by the image of the symbol 1: part i
// collects the g with g(1) = i+1.  Parts have size (n-1)! each.
inline Partition coset_partition(int n) {
    const auto group = symmetric_group(n);
    std::vector<int> part_of(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) part_of[i] = group[i](0);
    return Partition(std::move(part_of));
}

struct EquitableWitness {
    int part = 0;         // part whose vertices disagree
    int vertex_a = 0;     // reference vertex
    int vertex_b = 0;     // disagreeing vertex
    int target_part = 0;  // part where the neighbor counts differ

    std::string describe() const {
        std::ostringstream os;
        os << "vertices " << vertex_a << " and " << vertex_b << " of part " << part
           << " see different neighbor counts in part " << target_part;
        return os.str();
    }
};

struct QuotientResult {
    bool equitable = false;
    IntMatrix quotient;                      // valid iff equitable
    std::optional<EquitableWitness> witness; // set iff not equitable
};

// Tests equitability by comparing every vertex's per-part neighbor profile
// against the first vertex of its part, and returns the quotient on success.
inline QuotientResult quotient_if_equitable(const SparseGraph& g, const Partition& pi) {
    if (g.num_vertices() != pi.num_vertices())
        throw std::invalid_argument("quotient_if_equitable: size mismatch");
    const int p = pi.num_parts();
    QuotientResult res;
    std::vector<int> reference_vertex(static_cast<std::size_t>(p), -1);
    IntMatrix q(p, p);
    std::vector<std::int64_t> profile(static_cast<std::size_t>(p));
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::fill(profile.begin(), profile.end(), 0);
        for (int w : g.neighbors(v)) ++profile[static_cast<std::size_t>(pi.part_of(w))];
        const int part = pi.part_of(v);
        if (reference_vertex[static_cast<std::size_t>(part)] < 0) {
            reference_vertex[static_cast<std::size_t>(part)] = v;
            for (int j = 0; j < p; ++j) q(part, j) = profile[static_cast<std::size_t>(j)];
        } else {
            for (int j = 0; j < p; ++j) {
                if (q(part, j) != profile[static_cast<std::size_t>(j)]) {
                    res.witness = EquitableWitness{
                        part, reference_vertex[static_cast<std::size_t>(part)], v, j};
                    return res;
                }
            }
        }
    }
    res.equitable = true;
    res.quotient = std::move(q);
    return res;
}

// Exact check of A S = S Q: for every vertex v and part j, the number of
// neighbors of v in part j must equal Q(part(v), j).
inline bool lift_identity_holds(const SparseGraph& g, const Partition& pi, const IntMatrix& q) {
    if (q.rows() != pi.num_parts() || q.cols() != pi.num_parts()) return false;
    if (g.num_vertices() != pi.num_vertices()) return false;
    const int p = pi.num_parts();
    std::vector<std::int64_t> profile(static_cast<std::size_t>(p));
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::fill(profile.begin(), profile.end(), 0);
        for (int w : g.neighbors(v)) ++profile[static_cast<std::size_t>(pi.part_of(w))];
        for (int j = 0; j < p; ++j)
            if (profile[static_cast<std::size_t>(j)] != q(pi.part_of(v), j)) return false;
    }
    return true;
}

struct ContainmentResult {
    bool contained = false;
    double worst_gap = 0.0;     // largest matched |difference|
    int failing_index = -1;     // index into `small` when not contained
};

// Multiset containment of `small` in `big` (both ascending) within tol,
// by the greedy two-pointer match.
inline ContainmentResult spectrum_containment(const std::vector<double>& small,
                                              const std::vector<double>& big,
                                              double tol) {
    ContainmentResult res;
    std::size_t p = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        while (p < big.size() && big[p] < small[i] - tol) ++p;
        if (p == big.size() || big[p] > small[i] + tol) {
            res.failing_index = static_cast<int>(i);
            return res;
        }
        res.worst_gap = std::max(res.worst_gap, std::abs(big[p] - small[i]));
        ++p;
    }
    res.contained = true;
    return res;
}

}  // namespace ffj
