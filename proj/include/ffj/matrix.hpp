#pragma once

// Small dense matrices over int64 and double.  Quotient matrices and their
// Laplacians are integral, so the structural checks stay exact; conversion
// to double happens only at the eigensolver boundary.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace ffj {

template <typename T>
class MatrixT {
public:
    MatrixT() = default;
    MatrixT(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T{0}) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("MatrixT: negative size");
    }

    static MatrixT identity(int n) {
        MatrixT m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return a_[idx(i, j)]; }

    bool operator==(const MatrixT&) const = default;

    T row_sum(int i) const {
        T s{0};
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_)
             + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = MatrixT<std::int64_t>;
using RealMatrix = MatrixT<double>;

template <typename T>
MatrixT<T> operator+(const MatrixT<T>& x, const MatrixT<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix add: shape mismatch");
    MatrixT<T> z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j) + y(i, j);
    return z;
}

template <typename T>
MatrixT<T> operator-(const MatrixT<T>& x, const MatrixT<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix subtract: shape mismatch");
    MatrixT<T> z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j) - y(i, j);
    return z;
}

template <typename T>
MatrixT<T> operator*(const MatrixT<T>& x, const MatrixT<T>& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("matrix multiply: shape mismatch");
    MatrixT<T> z(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const T v = x(i, k);
            if (v == T{0}) continue;
            for (int j = 0; j < y.cols(); ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

template <typename T>
MatrixT<T> operator*(const MatrixT<T>& x, std::type_identity_t<T> s) {
    MatrixT<T> z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j) * s;
    return z;
}

template <typename T>
MatrixT<T> transpose(const MatrixT<T>& x) {
    MatrixT<T> z(x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z(j, i) = x(i, j);
    return z;
}

// diag(M 1) - M.
template <typename T>
MatrixT<T> laplacian(const MatrixT<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("laplacian: square matrix required");
    MatrixT<T> z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) z(i, j) = -m(i, j);
        z(i, i) += m.row_sum(i);
    }
    return z;
}

// Anti-diagonal permutation matrix; conjugation by it reverses index order.
template <typename T = std::int64_t>
MatrixT<T> exchange_matrix(int n) {
    MatrixT<T> j(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = T{1};
    return j;
}

// Principal submatrix on the given 0-based indices (strictly increasing).
template <typename T>
MatrixT<T> submatrix_keep(const MatrixT<T>& m, const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    MatrixT<T> z(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) z(i, j) = m(keep[i], keep[j]);
    return z;
}

// Complement helper: indices of {0..n-1} not listed in `drop` (sorted, unique).
inline std::vector<int> complement_indices(int n, const std::vector<int>& drop) {
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (int d : drop) {
        if (d < 0 || d >= n) throw std::invalid_argument("complement_indices: index out of range");
        gone[static_cast<std::size_t>(d)] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!gone[static_cast<std::size_t>(i)]) keep.push_back(i);
    return keep;
}

inline RealMatrix to_real(const IntMatrix& m) {
    RealMatrix z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) z(i, j) = static_cast<double>(m(i, j));
    return z;
}

// Largest absolute entry; convenient exact-scale reference for tolerances.
template <typename T>
double max_abs_entry(const MatrixT<T>& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const double v = std::abs(static_cast<double>(m(i, j)));
            if (v > best) best = v;
        }
    return best;
}

}  // namespace ffj
