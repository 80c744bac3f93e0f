#pragma once

// Permutations of {1,...,n} in one-line notation (0-based storage, 1-based
// text I/O), with Lehmer-code ranking used as the vertex index space for
// all graphs on S_n.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffj {

class Permutation {
public:
    // Identity on n symbols.
    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
        std::iota(images_.begin(), images_.end(), 0);
    }

    // images[i] = image of symbol i, both 0-based. Must be a bijection.
    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        p.images_ = std::move(images);
        p.check_bijection();
        return p;
    }

    // One-line notation with 1-based entries, e.g. {2,1,3} for the swap (1,2).
    static Permutation from_one_line(const std::vector<int>& one_based) {
        std::vector<int> im(one_based.size());
        for (std::size_t i = 0; i < one_based.size(); ++i) im[i] = one_based[i] - 1;
        return from_images(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    // Image of 0-based symbol x.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    // True iff the 0-based symbol x is fixed.
    bool fixes(int x) const { return images_[static_cast<std::size_t>(x)] == x; }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (int i = 0; i < degree(); ++i)
            r.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
        return r;
    }

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    Permutation() = default;

    void check_bijection() const {
        const int n = degree();
        if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> images_;
};

// Left action: (p*q)(x) = p(q(x)). Cayley adjacency pairs g with compose(s, g).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int x = 0; x < p.degree(); ++x) im[static_cast<std::size_t>(x)] = p(q(x));
    return Permutation::from_images(std::move(im));
}

// Transposition of 1-based symbols a, b inside S_n.
inline Permutation transposition(int n, int a, int b) {
    Permutation p(n);
    std::vector<int> im = p.images();
    std::swap(im[static_cast<std::size_t>(a - 1)], im[static_cast<std::size_t>(b - 1)]);
    return Permutation::from_images(std::move(im));
}

// Permutation from disjoint cycles of 1-based symbols.
inline Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    std::vector<int> im = p.images();
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int from = cyc[i] - 1;
            const int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("from_cycles: symbol out of range");
            if (im[static_cast<std::size_t>(from)] != from)
                throw std::invalid_argument("from_cycles: cycles are not disjoint");
            im[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation::from_images(std::move(im));
}

// Cycle decomposition, 1-based symbols, fixed points omitted, each cycle
// starting at its smallest symbol, cycles ordered by smallest symbol.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)] || p(s) == s) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x + 1);
            x = p(x);
        } while (x != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

// Text form "(1,2)(3,4)"; the identity renders as "()".
inline std::string to_cycle_string(const Permutation& p) {
    const auto cycles = cycle_decomposition(p);
    if (cycles.empty()) return "()";
    std::string s;
    for (const auto& cyc : cycles) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

// Parses cycle notation, e.g. "(1,2)(3,4)", "(1 2 3)", or "()".
inline Permutation parse_cycle_string(int n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("parse_cycle_string: expected '('");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("parse_cycle_string: expected symbol");
            cyc.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) { ++i; skip_ws(); }
        }
        if (i == text.size()) throw std::invalid_argument("parse_cycle_string: unterminated cycle");
        ++i;  // ')'
        if (cyc.size() == 1) throw std::invalid_argument("parse_cycle_string: singleton cycle");
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(n, cycles);
}

inline std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of int64 range");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lexicographic (Lehmer) rank; the identity has rank 0.
inline std::int64_t perm_rank(const Permutation& p) {
    const int n = p.degree();
    std::int64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_right = 0;
        for (int j = i + 1; j < n; ++j)
            if (p(j) < p(i)) ++smaller_right;
        r += smaller_right * factorial(n - 1 - i);
    }
    return r;
}

inline Permutation perm_unrank(int n, std::int64_t r) {
    if (n < 1 || r < 0 || r >= factorial(n))
        throw std::invalid_argument("perm_unrank: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::int64_t f = factorial(i);
        const auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        im.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation::from_images(std::move(im));
}

// All of S_n in lexicographic (rank) order. Guarded to desk scale.
inline std::vector<Permutation> symmetric_group(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("symmetric_group: n must be in [1,8]");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
        out.push_back(Permutation::from_images(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace ffj
