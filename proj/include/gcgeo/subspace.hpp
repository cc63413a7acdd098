#pragma once

#include "gcgeo/matrix.hpp"

#include <vector>

namespace gcgeo {

// A subspace of Q(i)^n, stored as the unique column-reduced canonical
// basis (the nonzero rows of the RREF of the transposed span, as
// columns). Two subspaces are equal iff their bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(ambient, 0) {}

    // Canonical subspace spanned by the columns of `span`.
    static Subspace span_of(const Matrix& span) {
        Subspace s(span.rows());
        Matrix t = span.transpose();
        std::vector<int> piv = t.rref();
        Matrix b(span.rows(), static_cast<int>(piv.size()));
        for (int r = 0; r < static_cast<int>(piv.size()); ++r)
            for (int c = 0; c < span.rows(); ++c) b(c, r) = t(r, c);
        s.basis_ = std::move(b);
        return s;
    }
    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient) { return span_of(Matrix::identity(ambient)); }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    bool contains(const Matrix& v) const {
        if (v.rows() != ambient_ || v.cols() != 1) throw error("contains: vector shape mismatch");
        return solve(basis_, v).has_value();
    }
    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw error("contains: ambient mismatch");
        for (int j = 0; j < other.dim(); ++j)
            if (!contains(other.basis_.col(j))) return false;
        return true;
    }

    Subspace conj() const { return span_of(basis_.conj()); }
    bool is_conj_invariant() const { return *this == conj(); }
    // A conjugation-invariant subspace has a real canonical basis.
    bool has_real_basis() const { return basis_.is_real(); }

private:
    int ambient_ = 0;
    Matrix basis_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw error("sum: ambient mismatch");
    return Subspace::span_of(Matrix::hstack(a.basis(), b.basis()));
}

// {alpha | alpha(x) = 0 for all x in s}, as columns in the dual basis.
inline Subspace annihilator(const Subspace& s) {
    return Subspace::span_of(s.basis().transpose().kernel());
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw error("intersect: ambient mismatch");
    Matrix conditions = Matrix::vstack(annihilator(a).basis().transpose(),
                                       annihilator(b).basis().transpose());
    return Subspace::span_of(conditions.kernel());
}

inline Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw error("image: shape mismatch");
    return Subspace::span_of(m * s.basis());
}

// {x | m x in s}
inline Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient()) throw error("preimage: shape mismatch");
    return Subspace::span_of((annihilator(s).basis().transpose() * m).kernel());
}

inline Subspace kernel_space(const Matrix& m) { return Subspace::span_of(m.kernel()); }

inline Subspace column_space(const Matrix& m) { return Subspace::span_of(m); }

// Real points of a conjugation-invariant complex subspace: the rational
// subspace R with R^c = s. Spanned by the real and imaginary parts of a
// basis.
inline Subspace real_points(const Subspace& s) {
    const Matrix& b = s.basis();
    Matrix re(b.rows(), b.cols()), im(b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            re(i, j) = Scalar(b(i, j).re());
            im(i, j) = Scalar(b(i, j).im());
        }
    Subspace r = Subspace::span_of(Matrix::hstack(re, im));
    if (r.dim() != s.dim() || !r.has_real_basis())
        throw error("real_points: subspace is not conjugation invariant");
    return r;
}

}  // namespace gcgeo
