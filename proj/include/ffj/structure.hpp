#pragma once

// Structural predicates and identities on quotient matrices: banded
// monotonicity (Robinson), centrosymmetry and the exchange matrix,
// eigenbasis symmetry classes, Cauchy interlacing for principal
// submatrices, positive-semidefiniteness with prescribed rank, and the
// exact rank-one decompositions behind the order-(n+1) recursions.
// Integer-sourced identities are checked exactly; tolerances appear only
// where eigensolver output is involved.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "eig.hpp"
#include "matrix.hpp"

namespace ffj {

struct StructureReport {
    std::string predicate;
    bool holds = true;
    bool has_index_witness = false;
    int witness_i = -1;
    int witness_j = -1;
    std::string detail;

    std::string describe() const {
        std::ostringstream os;
        os << predicate << ": " << (holds ? "holds" : "fails");
        if (!holds && has_index_witness)
            os << " at (" << witness_i << ", " << witness_j << ")";
        if (!detail.empty()) os << " [" << detail << "]";
        return os.str();
    }
};

// Off-diagonal entries must not increase with distance from the diagonal,
// scanning each row towards the right on both sides.  Adjacent comparisons
// suffice by transitivity.  Witness: (row, col) where entry at col is
// strictly smaller than the entry one step further from the diagonal.
template <typename T>
StructureReport is_robinson(const MatrixT<T>& m) {
    StructureReport rep;
    rep.predicate = "robinson";
    if (!m.is_square() || !m.is_symmetric())
        throw std::invalid_argument("is_robinson: symmetric square matrix required");
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < i; ++j) {
            if (m(i, j) > m(i, j + 1)) {
                rep.holds = false;
                rep.has_index_witness = true;
                rep.witness_i = i;
                rep.witness_j = j;
                std::ostringstream os;
                os << "row " << i << ": entry " << m(i, j) << " at column " << j
                   << " exceeds entry " << m(i, j + 1) << " nearer the diagonal";
                rep.detail = os.str();
                return rep;
            }
        }
        for (int j = i + 1; j + 1 < n; ++j) {
            if (m(i, j) < m(i, j + 1)) {
                rep.holds = false;
                rep.has_index_witness = true;
                rep.witness_i = i;
                rep.witness_j = j + 1;
                std::ostringstream os;
                os << "row " << i << ": entry " << m(i, j + 1) << " at column " << j + 1
                   << " exceeds entry " << m(i, j) << " nearer the diagonal";
                rep.detail = os.str();
                return rep;
            }
        }
    }
    return rep;
}

// M is centrosymmetric iff M[i][j] = M[n-1-i][n-1-j] for all entries,
// equivalently M commutes with the exchange matrix.  Exact for integer
// input; absolute tolerance 1e-12 for real input.
inline StructureReport is_centrosymmetric(const IntMatrix& m) {
    StructureReport rep;
    rep.predicate = "centrosymmetric";
    if (!m.is_square())
        throw std::invalid_argument("is_centrosymmetric: square matrix required");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) != m(n - 1 - i, n - 1 - j)) {
                rep.holds = false;
                rep.has_index_witness = true;
                rep.witness_i = i;
                rep.witness_j = j;
                rep.detail = "entry differs from its antipode";
                return rep;
            }
    return rep;
}

inline StructureReport is_centrosymmetric(const RealMatrix& m, double tol = 1e-12) {
    StructureReport rep;
    rep.predicate = "centrosymmetric";
    if (!m.is_square())
        throw std::invalid_argument("is_centrosymmetric: square matrix required");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m(i, j) - m(n - 1 - i, n - 1 - j)) > tol) {
                rep.holds = false;
                rep.has_index_witness = true;
                rep.witness_i = i;
                rep.witness_j = j;
                rep.detail = "entry differs from its antipode";
                return rep;
            }
    return rep;
}

struct SymmetryGroup {
    double eigenvalue = 0.0;  // cluster representative (mean)
    int multiplicity = 0;
    int symmetric_count = 0;  // basis vectors with Jv = v
    int skew_count = 0;       // basis vectors with Jv = -v
    std::vector<std::vector<double>> basis;  // orthonormal, symmetric first
};

struct SymmetryClassification {
    std::vector<SymmetryGroup> groups;  // ascending by eigenvalue
    int total_symmetric = 0;
    int total_skew = 0;
};

namespace detail {

// Modified Gram-Schmidt with a second pass; drops candidates whose
// remainder falls below drop_tol.  Inputs need not be normalised.
inline std::vector<std::vector<double>> orthonormalise(
    const std::vector<std::vector<double>>& candidates, double drop_tol) {
    std::vector<std::vector<double>> basis;
    for (std::vector<double> w : candidates) {
        for (int pass = 0; pass < 2; ++pass)
            for (const std::vector<double>& b : basis) {
                double c = 0.0;
                for (std::size_t k = 0; k < w.size(); ++k) c += b[k] * w[k];
                for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * b[k];
            }
        double nrm = 0.0;
        for (double x : w) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm < drop_tol) continue;
        for (double& x : w) x /= nrm;
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace detail

// Splits an orthonormal eigenbasis of a centrosymmetric matrix into vectors
// satisfying Jv = v or Jv = -v.  Eigenvalues are clustered within
// 1e-8 * (largest absolute entry), each cluster's eigenvectors are projected
// onto the two eigenspaces of J, and the projections are re-orthonormalised.
// Throws when some eigenvector's projections are both negligible, which can
// only mean the eigensolver returned garbage.
inline SymmetryClassification eigenbasis_symmetry_classify(const RealMatrix& m) {
    {
        const StructureReport rep = is_centrosymmetric(m);
        if (!rep.holds)
            throw std::invalid_argument(
                "eigenbasis_symmetry_classify: matrix is not centrosymmetric");
    }
    const int n = m.rows();
    const double scale = std::max(1.0, max_abs_entry(m));
    const double cluster_tol = 1e-8 * scale;
    const Spectrum s = symmetric_eigen(m, true);

    SymmetryClassification out;
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && s.values()[static_cast<std::size_t>(hi)]
                             - s.values()[static_cast<std::size_t>(hi - 1)] <= cluster_tol)
            ++hi;

        std::vector<std::vector<double>> sym_parts, skew_parts;
        double mean = 0.0;
        for (int j = lo; j < hi; ++j) {
            mean += s.values()[static_cast<std::size_t>(j)];
            const std::vector<double> v = s.eigenvector(j);
            std::vector<double> sym(v.size()), skew(v.size());
            for (int k = 0; k < n; ++k) {
                const double a = v[static_cast<std::size_t>(k)];
                const double b = v[static_cast<std::size_t>(n - 1 - k)];
                sym[static_cast<std::size_t>(k)] = 0.5 * (a + b);
                skew[static_cast<std::size_t>(k)] = 0.5 * (a - b);
            }
            double ns = 0.0, na = 0.0;
            for (int k = 0; k < n; ++k) {
                ns += sym[static_cast<std::size_t>(k)] * sym[static_cast<std::size_t>(k)];
                na += skew[static_cast<std::size_t>(k)] * skew[static_cast<std::size_t>(k)];
            }
            if (std::sqrt(ns) < 1e-8 && std::sqrt(na) < 1e-8)
                throw std::runtime_error(
                    "eigenbasis_symmetry_classify: both projections degenerate");
            sym_parts.push_back(std::move(sym));
            skew_parts.push_back(std::move(skew));
        }

        SymmetryGroup grp;
        grp.multiplicity = hi - lo;
        grp.eigenvalue = mean / static_cast<double>(hi - lo);
        std::vector<std::vector<double>> sym_basis =
            detail::orthonormalise(sym_parts, 1e-6);
        std::vector<std::vector<double>> skew_basis =
            detail::orthonormalise(skew_parts, 1e-6);
        grp.symmetric_count = static_cast<int>(sym_basis.size());
        grp.skew_count = static_cast<int>(skew_basis.size());
        if (grp.symmetric_count + grp.skew_count != grp.multiplicity)
            throw std::runtime_error(
                "eigenbasis_symmetry_classify: symmetry split does not span the eigenspace");
        for (auto& b : sym_basis) grp.basis.push_back(std::move(b));
        for (auto& b : skew_basis) grp.basis.push_back(std::move(b));
        out.total_symmetric += grp.symmetric_count;
        out.total_skew += grp.skew_count;
        out.groups.push_back(std::move(grp));
        lo = hi;
    }
    return out;
}

inline SymmetryClassification eigenbasis_symmetry_classify(const IntMatrix& m) {
    return eigenbasis_symmetry_classify(to_real(m));
}

struct InterlacingResult {
    StructureReport report;
    RealMatrix submatrix;
};

// Cauchy interlacing for the principal submatrix that deletes the given
// 0-based rows/columns: mu_k(M) <= mu_k(B) <= mu_{k+|deleted|}(M) for all
// valid k, allowing slack 1e-9 * (largest absolute entry) for eigensolver
// rounding.  The submatrix comes back for inspection either way.
inline InterlacingResult interlacing_check(const RealMatrix& m,
                                           const std::vector<int>& deleted) {
    if (!m.is_square())
        throw std::invalid_argument("interlacing_check: square matrix required");
    const std::vector<int> keep = complement_indices(m.rows(), deleted);
    InterlacingResult res;
    res.report.predicate = "interlacing";
    res.submatrix = submatrix_keep(m, keep);
    if (keep.empty() || deleted.empty()) return res;  // vacuous or trivial

    const Spectrum big = symmetric_eigen(m, false);
    const Spectrum small = symmetric_eigen(res.submatrix, false);
    const double slack = 1e-9 * std::max(1.0, max_abs_entry(m));
    const int r = static_cast<int>(deleted.size());
    for (int k = 1; k <= small.size(); ++k) {
        const double lower = big.mu(k);
        const double upper = big.mu(k + r);
        const double mid = small.mu(k);
        if (mid < lower - slack || mid > upper + slack) {
            res.report.holds = false;
            res.report.has_index_witness = true;
            res.report.witness_i = k;
            res.report.witness_j = -1;
            std::ostringstream os;
            os << "mu_" << k << "(submatrix) = " << mid << " outside ["
               << lower << ", " << upper << "]";
            res.report.detail = os.str();
            return res;
        }
    }
    return res;
}

struct InterlacingResultInt {
    StructureReport report;
    IntMatrix submatrix;  // exact principal submatrix
};

inline InterlacingResultInt interlacing_check(const IntMatrix& m,
                                              const std::vector<int>& deleted) {
    InterlacingResult real_res = interlacing_check(to_real(m), deleted);
    InterlacingResultInt res;
    res.report = std::move(real_res.report);
    res.submatrix = submatrix_keep(m, complement_indices(m.rows(), deleted));
    return res;
}

// True iff every eigenvalue is >= -thr and exactly (order - expected_rank)
// eigenvalues lie at or below thr, with thr = 1e-9 * (largest absolute
// entry).  The zero bucket uses a closed inequality so the zero matrix with
// expected rank 0 passes.
inline StructureReport psd_rank_check(const RealMatrix& m, int expected_rank) {
    StructureReport rep;
    rep.predicate = "psd_rank";
    if (!m.is_square() || expected_rank < 0 || expected_rank > m.rows())
        throw std::invalid_argument("psd_rank_check: bad arguments");
    const double thr = 1e-9 * max_abs_entry(m);
    const Spectrum s = symmetric_eigen(m, false);
    int zeros = 0;
    for (int k = 1; k <= s.size(); ++k) {
        const double mu = s.mu(k);
        if (mu < -thr) {
            rep.holds = false;
            rep.has_index_witness = true;
            rep.witness_i = k;
            std::ostringstream os;
            os << "mu_" << k << " = " << mu << " below -" << thr;
            rep.detail = os.str();
            return rep;
        }
        if (mu <= thr) ++zeros;
    }
    if (zeros != m.rows() - expected_rank) {
        rep.holds = false;
        std::ostringstream os;
        os << "found " << zeros << " near-zero eigenvalues, expected "
           << m.rows() - expected_rank;
        rep.detail = os.str();
    }
    return rep;
}

inline StructureReport psd_rank_check(const IntMatrix& m, int expected_rank) {
    return psd_rank_check(to_real(m), expected_rank);
}

// coeff * (e_i - e_j)(e_i - e_j)^T as an integer matrix of the given order.
inline IntMatrix rank_one_difference(int order, int i, int j, std::int64_t coeff) {
    if (i < 0 || j < 0 || i >= order || j >= order || i == j)
        throw std::invalid_argument("rank_one_difference: bad indices");
    IntMatrix m(order, order);
    m(i, i) = coeff;
    m(j, j) = coeff;
    m(i, j) = -coeff;
    m(j, i) = -coeff;
    return m;
}

// The summands whose total equals the order-(n+1) quotient Laplacian built
// on top of the order-n one: the padded smaller Laplacian plus rank-one
// boundary corrections (prime), or plus a full chain of rank-ones with
// weighted boundary terms (plain).
inline std::vector<IntMatrix> decomposition_terms(int n, Variant variant) {
    if (n < 4) throw std::invalid_argument("decomposition_terms: need n >= 4");
    const int order = n + 1;
    std::vector<IntMatrix> terms;

    const IntMatrix small = laplacian(closed_form_quotient(n, variant));
    IntMatrix padded(order, order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) padded(i, j) = small(i, j);
    terms.push_back(std::move(padded));

    if (variant == Variant::prime) {
        terms.push_back(rank_one_difference(order, 0, 1, 1));
        terms.push_back(rank_one_difference(order, n - 1, n, 1));
    } else {
        for (int i = 0; i + 1 < n; ++i)
            terms.push_back(rank_one_difference(order, i, i + 1, 1));
        terms.push_back(rank_one_difference(order, n - 1, n, n - 1));
        terms.push_back(rank_one_difference(order, n - 2, n, 2));
    }
    return terms;
}

// Exact integer identity: the order-(n+1) quotient Laplacian equals the sum
// of decomposition_terms(n, variant).
inline StructureReport decomposition_check(int n, Variant variant) {
    StructureReport rep;
    rep.predicate = variant == Variant::prime ? "decomposition_prime"
                                              : "decomposition_plain";
    const IntMatrix lhs = laplacian(closed_form_quotient(n + 1, variant));
    IntMatrix rhs(n + 1, n + 1);
    for (const IntMatrix& t : decomposition_terms(n, variant)) rhs = rhs + t;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (lhs(i, j) != rhs(i, j)) {
                rep.holds = false;
                rep.has_index_witness = true;
                rep.witness_i = i;
                rep.witness_j = j;
                std::ostringstream os;
                os << "lhs " << lhs(i, j) << " != rhs " << rhs(i, j);
                rep.detail = os.str();
                return rep;
            }
    return rep;
}

// y^T L y against its pentadiagonal expansion
//   (n-2) * sum (y_{i+1} - y_i)^2  +  2 * sum (y_{i+2} - y_i)^2
// for L the Laplacian of the order-n full quotient matrix, within relative
// 1e-10.  The overload taking the Laplacian avoids rebuilding it in bulk runs.
inline StructureReport quadratic_form_check(const IntMatrix& lap,
                                            const std::vector<double>& y) {
    StructureReport rep;
    rep.predicate = "quadratic_form";
    const int n = lap.rows();
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("quadratic_form_check: vector length mismatch");
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += static_cast<double>(lap(i, j)) * y[static_cast<std::size_t>(j)];
        lhs += y[static_cast<std::size_t>(i)] * row;
    }
    double rhs = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double d = y[static_cast<std::size_t>(i + 1)] - y[static_cast<std::size_t>(i)];
        rhs += d * d;
    }
    rhs *= static_cast<double>(n - 2);
    for (int i = 0; i + 2 < n; ++i) {
        const double d = y[static_cast<std::size_t>(i + 2)] - y[static_cast<std::size_t>(i)];
        rhs += 2.0 * d * d;
    }
    const double err = std::abs(lhs - rhs);
    const double denom = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (err > 1e-10 * denom) {
        rep.holds = false;
        std::ostringstream os;
        os << "lhs " << lhs << " vs rhs " << rhs << " (error " << err << ")";
        rep.detail = os.str();
    }
    return rep;
}

inline StructureReport quadratic_form_check(int n, const std::vector<double>& y) {
    return quadratic_form_check(laplacian(closed_form_Q(n)), y);
}

}  // namespace ffj
