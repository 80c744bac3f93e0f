#pragma once

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by the implicit-shift QL iteration, the classic EISPACK
// tred2/tql2 pair.  Eigenvalues come back ascending; eigenvectors are
// optional and certified by explicit residuals against the input matrix.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace ffj {

namespace detail {

// Householder reduction of the symmetric matrix stored in v (flat row-major,
// n x n) to tridiagonal form; d receives the diagonal, e the subdiagonal in
// e[1..n-1].  With accumulate set, v is overwritten with the orthogonal
// transformation; otherwise v's contents are scratch afterwards.
inline void tred2(int n, std::vector<double>& v, std::vector<double>& d,
                  std::vector<double>& e, bool accumulate) {
    auto V = [&](int r, int c) -> double& {
        return v[static_cast<std::size_t>(r) * static_cast<std::size_t>(n)
               + static_cast<std::size_t>(c)];
    };
    d.assign(static_cast<std::size_t>(n), 0.0);
    e.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = V(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (int k = 0; k < i; ++k) scale += std::abs(d[static_cast<std::size_t>(k)]);
        if (scale == 0.0) {
            e[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)];
            for (int j = 0; j < i; ++j) {
                d[static_cast<std::size_t>(j)] = V(i - 1, j);
                V(i, j) = 0.0;
                V(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[static_cast<std::size_t>(k)] /= scale;
                h += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
            }
            double f = d[static_cast<std::size_t>(i - 1)];
            double g = std::sqrt(h);
            if (f > 0.0) g = -g;
            e[static_cast<std::size_t>(i)] = scale * g;
            h -= f * g;
            d[static_cast<std::size_t>(i - 1)] = f - g;
            for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[static_cast<std::size_t>(j)];
                V(j, i) = f;
                g = e[static_cast<std::size_t>(j)] + V(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += V(k, j) * d[static_cast<std::size_t>(k)];
                    e[static_cast<std::size_t>(k)] += V(k, j) * f;
                }
                e[static_cast<std::size_t>(j)] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[static_cast<std::size_t>(j)] /= h;
                f += e[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j)];
            }
            const double hh = f / (h + h);
            for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] -= hh * d[static_cast<std::size_t>(j)];
            for (int j = 0; j < i; ++j) {
                f = d[static_cast<std::size_t>(j)];
                g = e[static_cast<std::size_t>(j)];
                for (int k = j; k <= i - 1; ++k)
                    V(k, j) -= f * e[static_cast<std::size_t>(k)] + g * d[static_cast<std::size_t>(k)];
                d[static_cast<std::size_t>(j)] = V(i - 1, j);
                V(i, j) = 0.0;
            }
        }
        d[static_cast<std::size_t>(i)] = h;
    }

    if (accumulate) {
        for (int i = 0; i < n - 1; ++i) {
            V(n - 1, i) = V(i, i);
            V(i, i) = 1.0;
            const double h = d[static_cast<std::size_t>(i + 1)];
            if (h != 0.0) {
                for (int k = 0; k <= i; ++k) d[static_cast<std::size_t>(k)] = V(k, i + 1) / h;
                for (int j = 0; j <= i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
                    for (int k = 0; k <= i; ++k) V(k, j) -= g * d[static_cast<std::size_t>(k)];
                }
            }
            for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
        }
        for (int j = 0; j < n; ++j) {
            d[static_cast<std::size_t>(j)] = V(n - 1, j);
            V(n - 1, j) = 0.0;
        }
        V(n - 1, n - 1) = 1.0;
    } else {
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = V(j, j);
    }
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e) with e[1..n-1] holding the
// subdiagonal on entry.  Eigenvalues land in d ascending.  With accumulate
// set, the rotations are applied to the columns of v (flat row-major n x n),
// so v's columns end as eigenvectors of whatever v's columns spanned.
inline void tql2(int n, std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& v, bool accumulate) {
    auto V = [&](int r, int c) -> double& {
        return v[static_cast<std::size_t>(r) * static_cast<std::size_t>(n)
               + static_cast<std::size_t>(c)];
    };
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(n - 1)] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::ldexp(1.0, -52);
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[static_cast<std::size_t>(l)])
                            + std::abs(e[static_cast<std::size_t>(l)]));
        int m = l;
        while (m < n && std::abs(e[static_cast<std::size_t>(m)]) > eps * tst1) ++m;

        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 64) throw std::runtime_error("tql2: no convergence");
                double g = d[static_cast<std::size_t>(l)];
                double p = (d[static_cast<std::size_t>(l + 1)] - g)
                         / (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(p, 1.0);
                if (p < 0.0) r = -r;
                d[static_cast<std::size_t>(l)] = e[static_cast<std::size_t>(l)] / (p + r);
                d[static_cast<std::size_t>(l + 1)] = e[static_cast<std::size_t>(l)] * (p + r);
                const double dl1 = d[static_cast<std::size_t>(l + 1)];
                double h = g - d[static_cast<std::size_t>(l)];
                for (int i = l + 2; i < n; ++i) d[static_cast<std::size_t>(i)] -= h;
                f += h;

                p = d[static_cast<std::size_t>(m)];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                const double el1 = e[static_cast<std::size_t>(l + 1)];
                double s = 0.0;
                double s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[static_cast<std::size_t>(i)];
                    h = c * p;
                    r = std::hypot(p, e[static_cast<std::size_t>(i)]);
                    e[static_cast<std::size_t>(i + 1)] = s * r;
                    s = e[static_cast<std::size_t>(i)] / r;
                    c = p / r;
                    p = c * d[static_cast<std::size_t>(i)] - s * g;
                    d[static_cast<std::size_t>(i + 1)] = h + s * (c * g + s * d[static_cast<std::size_t>(i)]);
                    if (accumulate) {
                        for (int k = 0; k < n; ++k) {
                            h = V(k, i + 1);
                            V(k, i + 1) = s * V(k, i) + c * h;
                            V(k, i) = c * V(k, i) - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[static_cast<std::size_t>(l)] / dl1;
                e[static_cast<std::size_t>(l)] = s * p;
                d[static_cast<std::size_t>(l)] = c * p;
            } while (std::abs(e[static_cast<std::size_t>(l)]) > eps * tst1);
        }
        d[static_cast<std::size_t>(l)] += f;
        e[static_cast<std::size_t>(l)] = 0.0;
    }

    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        double p = d[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            if (d[static_cast<std::size_t>(j)] < p) {
                k = j;
                p = d[static_cast<std::size_t>(j)];
            }
        if (k != i) {
            d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(i)];
            d[static_cast<std::size_t>(i)] = p;
            if (accumulate)
                for (int j = 0; j < n; ++j) std::swap(V(j, i), V(j, k));
        }
    }
}

}  // namespace detail

class Spectrum {
public:
    Spectrum(std::vector<double> values, std::vector<double> vectors_flat,
             std::vector<double> residuals)
        : values_(std::move(values)), vectors_(std::move(vectors_flat)),
          residuals_(std::move(residuals)) {}

    int size() const { return static_cast<int>(values_.size()); }

    // Ascending.
    const std::vector<double>& values() const { return values_; }

    bool has_vectors() const { return !vectors_.empty(); }

    // k-th smallest eigenvalue, 1-based.
    double mu(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }

    // k-th largest eigenvalue, 1-based.
    double lambda(int k) const {
        return values_.at(values_.size() - static_cast<std::size_t>(k));
    }

    // Eigenvector for values()[j] (0-based), unit 2-norm.
    std::vector<double> eigenvector(int j) const {
        if (!has_vectors()) throw std::logic_error("Spectrum: vectors not computed");
        const auto n = static_cast<std::size_t>(size());
        std::vector<double> out(n);
        for (std::size_t k = 0; k < n; ++k)
            out[k] = vectors_[k * n + static_cast<std::size_t>(j)];
        return out;
    }

    // ||A x_j - values[j] x_j||_2 for eigenpair j; empty without vectors.
    const std::vector<double>& residuals() const { return residuals_; }

    double max_residual() const {
        double best = 0.0;
        for (double r : residuals_) best = std::max(best, r);
        return best;
    }

private:
    std::vector<double> values_;
    std::vector<double> vectors_;
    std::vector<double> residuals_;
};

inline Spectrum symmetric_eigen(const RealMatrix& a, bool want_vectors) {
    if (!a.is_square()) throw std::invalid_argument("symmetric_eigen: square matrix required");
    const int n = a.rows();
    if (n == 0) return Spectrum({}, {}, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i))
                throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");

    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)
              + static_cast<std::size_t>(j)] = a(i, j);

    std::vector<double> d;
    std::vector<double> e;
    detail::tred2(n, v, d, e, want_vectors);
    detail::tql2(n, d, e, v, want_vectors);

    std::vector<double> residuals;
    if (want_vectors) {
        residuals.assign(static_cast<std::size_t>(n), 0.0);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                x[static_cast<std::size_t>(k)] =
                    v[static_cast<std::size_t>(k) * static_cast<std::size_t>(n)
                      + static_cast<std::size_t>(j)];
            double norm2 = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = -d[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)];
                for (int k = 0; k < n; ++k) s += a(i, k) * x[static_cast<std::size_t>(k)];
                norm2 += s * s;
            }
            residuals[static_cast<std::size_t>(j)] = std::sqrt(norm2);
        }
    } else {
        v.clear();
    }
    return Spectrum(std::move(d), std::move(v), std::move(residuals));
}

inline Spectrum symmetric_eigen(const IntMatrix& a, bool want_vectors) {
    return symmetric_eigen(to_real(a), want_vectors);
}

// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal
// `alpha` and subdiagonal `beta` (beta.size() == alpha.size() - 1).
inline Spectrum tridiagonal_eigen(const std::vector<double>& alpha,
                                  const std::vector<double>& beta,
                                  bool want_vectors) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) return Spectrum({}, {}, {});
    if (beta.size() + 1 != alpha.size())
        throw std::invalid_argument("tridiagonal_eigen: subdiagonal length mismatch");
    std::vector<double> d = alpha;
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i - 1)];
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)
              + static_cast<std::size_t>(i)] = 1.0;
    }
    detail::tql2(n, d, e, v, want_vectors);

    std::vector<double> residuals;
    if (want_vectors) {
        residuals.assign(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) {
            double norm2 = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = alpha[static_cast<std::size_t>(i)]
                         * v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)
                             + static_cast<std::size_t>(j)];
                if (i > 0)
                    s += beta[static_cast<std::size_t>(i - 1)]
                       * v[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n)
                           + static_cast<std::size_t>(j)];
                if (i + 1 < n)
                    s += beta[static_cast<std::size_t>(i)]
                       * v[static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(n)
                           + static_cast<std::size_t>(j)];
                s -= d[static_cast<std::size_t>(j)]
                   * v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)
                       + static_cast<std::size_t>(j)];
                norm2 += s * s;
            }
            residuals[static_cast<std::size_t>(j)] = std::sqrt(norm2);
        }
    }
    return Spectrum(std::move(d), std::move(v), std::move(residuals));
}

struct FiedlerResult {
    double mu2 = 0.0;       // second-smallest eigenvalue
    std::vector<double> v;  // unit 2-norm, sign-normalized
    double gap = 0.0;       // mu3 - mu2; +infinity for 2x2 input
    bool sign_flagged = false;
};

// Second-smallest eigenpair of a matrix in Laplacian form (zero row sums).
// The sign convention makes the last entry nonnegative; when the last entry
// is negligible, the first significant entry is made negative instead and
// the result is flagged.  Throws when mu2 is within 1e-12 of zero, which
// for a graph Laplacian means a disconnected structure.
inline FiedlerResult fiedler(const RealMatrix& m) {
    if (!m.is_square() || m.rows() < 2)
        throw std::invalid_argument("fiedler: need a square matrix of order >= 2");
    const double scale = std::max(1.0, max_abs_entry(m));
    for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m.row_sum(i)) > 1e-9 * scale)
            throw std::invalid_argument("fiedler: matrix rows must sum to zero");
    const Spectrum s = symmetric_eigen(m, true);
    FiedlerResult f;
    f.mu2 = s.mu(2);
    if (std::abs(f.mu2) <= 1e-12)
        throw std::runtime_error("fiedler: second-smallest eigenvalue is numerically zero");
    f.gap = s.size() >= 3 ? s.mu(3) - s.mu(2)
                          : std::numeric_limits<double>::infinity();
    f.v = s.eigenvector(1);
    if (std::abs(f.v.back()) >= 1e-12) {
        if (f.v.back() < 0.0)
            for (double& x : f.v) x = -x;
    } else {
        f.sign_flagged = true;
        for (double x : f.v) {
            if (std::abs(x) >= 1e-12) {
                if (x > 0.0)
                    for (double& y : f.v) y = -y;
                break;
            }
        }
    }
    return f;
}

inline FiedlerResult fiedler(const IntMatrix& m) { return fiedler(to_real(m)); }

}  // namespace ffj
