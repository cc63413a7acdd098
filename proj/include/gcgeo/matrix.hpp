#pragma once

#include "gcgeo/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace gcgeo {

// Dense matrix over Q(i). Row-major. All shape arithmetic is checked.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    }
    Matrix(int rows, int cols, std::initializer_list<Scalar> entries) : Matrix(rows, cols) {
        if (static_cast<int>(entries.size()) != rows * cols)
            throw error("initializer size mismatch");
        size_t k = 0;
        for (const auto& s : entries) e_[k++] = s;
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    static Matrix zero(int r, int c) { return Matrix(r, c); }
    static Matrix column(const std::vector<Scalar>& v) {
        Matrix m(static_cast<int>(v.size()), 1);
        for (size_t i = 0; i < v.size(); ++i) m.e_[i] = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Scalar& operator()(int i, int j) const { return e_[idx(i, j)]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix conj() const {
        Matrix c(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k].conj();
        return c;
    }
    Matrix conj_transpose() const { return conj().transpose(); }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }
    bool is_real() const {
        for (const auto& s : e_)
            if (!s.is_real()) return false;
        return true;
    }
    bool is_symmetric() const { return is_square() && *this == transpose(); }
    bool is_skew() const { return is_square() && *this == -transpose(); }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator*(const Scalar& s, Matrix m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix block(int i0, int j0, int r, int c) const {
        if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_ || r < 0 || c < 0)
            throw error("block out of range");
        Matrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(int i0, int j0, const Matrix& m) {
        if (i0 < 0 || j0 < 0 || i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
            throw error("set_block out of range");
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }
    Matrix col(int j) const { return block(0, j, rows_, 1); }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw error("hstack row mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols_, b);
        return m;
    }
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw error("vstack col mismatch");
        Matrix m(a.rows_ + b.rows_, a.cols_);
        m.set_block(0, 0, a);
        m.set_block(a.rows_, 0, b);
        return m;
    }
    // Block diagonal sum diag(a, b).
    static Matrix dsum(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
        m.set_block(0, 0, a);
        m.set_block(a.rows_, a.cols_, b);
        return m;
    }

    // In-place reduced row echelon form; returns the pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Scalar inv = (*this)(r, c).inverse();
            for (int j = c; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                Scalar f = (*this)(i, c);
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of the null space, as columns. Shape cols() x dim(ker).
    Matrix kernel() const {
        Matrix m = *this;
        std::vector<int> piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        int nfree = cols_ - static_cast<int>(piv.size());
        Matrix k(cols_, nfree);
        int col = 0;
        for (int f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            k(f, col) = Scalar(1);
            for (size_t r = 0; r < piv.size(); ++r) k(piv[r], col) = -m(static_cast<int>(r), f);
            ++col;
        }
        return k;
    }

    std::optional<Matrix> inverse() const {
        if (!is_square()) throw error("inverse of non-square matrix");
        Matrix aug = hstack(*this, identity(rows_));
        std::vector<int> piv = aug.rref();
        if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
        return aug.block(0, cols_, rows_, cols_);
    }

    std::vector<Scalar> to_flat() const { return e_; }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> e_;
};

// Exact solution set of M x = b: a particular solution plus the kernel,
// or nullopt when the system is inconsistent.
struct AffineSolution {
    Matrix particular;  // cols(M) x 1
    Matrix kernel;      // cols(M) x k
};

inline std::optional<AffineSolution> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows() || b.cols() != 1) throw error("solve: rhs shape mismatch");
    Matrix aug = Matrix::hstack(m, b);
    std::vector<int> piv = aug.rref();
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  // pivot in rhs column
    Matrix x(m.cols(), 1);
    for (size_t r = 0; r < piv.size(); ++r) x(piv[r], 0) = aug(static_cast<int>(r), m.cols());
    return AffineSolution{std::move(x), m.kernel()};
}

// Leading-pivot LDL^T test: a real symmetric matrix is positive definite
// iff symmetric elimination without pivoting meets only positive pivots.
inline bool is_positive_definite(const Matrix& m) {
    if (!m.is_square() || !m.is_real() || !m.is_symmetric()) return false;
    Matrix a = m;
    int n = a.rows();
    for (int k = 0; k < n; ++k) {
        const Scalar& d = a(k, k);
        if (d.is_zero() || d.re() <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Scalar f = a(i, k) / d;
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (int j = k + 1; j < n; ++j) a(k, j) = Scalar(0);
    }
    return true;
}

// Exact inertia (positive, negative, zero counts) of a real symmetric
// matrix by congruence reduction. Zero diagonal with a nonzero row is
// repaired by the congruence x_k -> x_k + x_j before elimination.
inline std::tuple<int, int, int> inertia(const Matrix& m) {
    if (!m.is_square() || !m.is_real() || !m.is_symmetric()) throw error("inertia: not real symmetric");
    Matrix a = m;
    int n = a.rows();
    int pos = 0, neg = 0, zero = 0;
    for (int k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            int j = -1;
            for (int c = k + 1; c < n; ++c)
                if (!a(k, c).is_zero()) {
                    j = c;
                    break;
                }
            if (j < 0) {
                ++zero;
                continue;
            }
            // congruence x_k -> x_k + s x_j; new a(k,k) = 2s a(k,j) + a(j,j),
            // nonzero for s = 1 or s = -1 since a(k,j) != 0
            Scalar s = (Scalar(2) * a(k, j) + a(j, j)).is_zero() ? Scalar(-1) : Scalar(1);
            for (int c = k; c < n; ++c) a(k, c) += s * a(j, c);
            for (int r = k; r < n; ++r) a(r, k) += s * a(r, j);
        }
        const Scalar& d = a(k, k);
        if (d.re() > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < n; ++i) {
            Scalar f = a(i, k) / d;
            for (int j2 = k; j2 < n; ++j2) a(i, j2) -= f * a(k, j2);
        }
        for (int j2 = k + 1; j2 < n; ++j2) a(k, j2) = Scalar(0);
    }
    return {pos, neg, zero};
}

}  // namespace gcgeo
