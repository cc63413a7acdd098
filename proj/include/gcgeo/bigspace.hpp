#pragma once

#include "gcgeo/subspace.hpp"

namespace gcgeo {

// Convention used throughout: a 2-form sigma and a bivector pi enter all
// formulas through their operator matrices, P_sigma = matrix of
// flat_sigma : W -> W* with (flat_sigma X)(Y) = sigma(X,Y), and
// P_pi = matrix of sharp_pi : W* -> W with beta(sharp_pi alpha) =
// pi(alpha,beta). Both are skew. Transposition is plain transposition,
// also over Q(i); conjugation is always explicit.

// An element (X, alpha) of W + W*, stored as a 2m column.
class PairVector {
public:
    PairVector(Matrix x, Matrix alpha) : x_(std::move(x)), a_(std::move(alpha)) {
        if (x_.cols() != 1 || a_.cols() != 1 || x_.rows() != a_.rows())
            throw error("pair vector parts must be equal-length columns");
    }
    static PairVector from_column(const Matrix& c) {
        if (c.cols() != 1 || c.rows() % 2 != 0) throw error("pair vector column must have even length");
        int m = c.rows() / 2;
        return PairVector(c.block(0, 0, m, 1), c.block(m, 0, m, 1));
    }

    int m() const { return x_.rows(); }
    const Matrix& vec() const { return x_; }
    const Matrix& cov() const { return a_; }
    Matrix to_column() const { return Matrix::vstack(x_, a_); }

private:
    Matrix x_, a_;
};

// The big space W + W* for an m-dimensional W.
struct BigSpace {
    int m;

    explicit BigSpace(int m_) : m(m_) {
        if (m < 1) throw error("big space requires m >= 1");
    }

    // 2 g as a matrix: the anti-diagonal block swap.
    Matrix pairing_matrix2() const {
        Matrix k(2 * m, 2 * m);
        k.set_block(0, m, Matrix::identity(m));
        k.set_block(m, 0, Matrix::identity(m));
        return k;
    }
};

// g((X,alpha),(Y,mu)) = (alpha(Y) + mu(X)) / 2
inline Scalar neutral_pairing(const PairVector& x, const PairVector& y) {
    if (x.m() != y.m()) throw error("neutral pairing: dimension mismatch");
    Scalar s(0);
    for (int i = 0; i < x.m(); ++i)
        s += x.cov()(i, 0) * y.vec()(i, 0) + y.cov()(i, 0) * x.vec()(i, 0);
    return Scalar(Rational(1, 2)) * Matrix(1, 1, {s})(0, 0);
}

// g-orthogonal complement inside the big space.
inline Subspace g_orthogonal(const Subspace& s) {
    if (s.ambient() % 2 != 0) throw error("g_orthogonal: ambient must be even");
    BigSpace w(s.ambient() / 2);
    return kernel_space(s.basis().transpose() * w.pairing_matrix2());
}

enum class Field { real, complex };

// Dirac: half-dimensional and g-isotropic. Over the reals the canonical
// basis must be real.
inline bool is_dirac(const Subspace& d, Field field = Field::complex) {
    if (d.ambient() % 2 != 0) throw error("is_dirac: ambient must be even");
    int m = d.ambient() / 2;
    if (d.dim() != m) return false;
    if (field == Field::real && !d.has_real_basis()) return false;
    BigSpace w(m);
    return (d.basis().transpose() * w.pairing_matrix2() * d.basis()).is_zero();
}

// The shear (X, alpha) -> (X, alpha + flat_B X) as a 2m matrix.
inline Matrix b_field_matrix(const Matrix& b_op) {
    if (!b_op.is_skew()) throw error("b-field operator must be skew");
    int m = b_op.rows();
    Matrix t = Matrix::identity(2 * m);
    t.set_block(m, 0, b_op);
    return t;
}

inline PairVector b_field(const PairVector& x, const Matrix& b_op) {
    if (b_op.rows() != x.m()) throw error("b-field: dimension mismatch");
    return PairVector(x.vec(), x.cov() + b_op * x.vec());
}

// The dual shear (X, alpha) -> (X + sharp_beta alpha, alpha).
inline Matrix beta_field_matrix(const Matrix& beta_op) {
    if (!beta_op.is_skew()) throw error("beta-field operator must be skew");
    int m = beta_op.rows();
    Matrix t = Matrix::identity(2 * m);
    t.set_block(0, m, beta_op);
    return t;
}

// diag(P, (P^T)^{-1}), the GL(m) action on W + W*.
inline Matrix gl_pair_matrix(const Matrix& p) {
    auto pinv_t = p.transpose().inverse();
    if (!pinv_t) throw error("gl_pair_matrix: matrix not invertible");
    return Matrix::dsum(p, *pinv_t);
}

// A linear map f_* : V -> W together with its transpose f^*.
struct LinearMap {
    Matrix f;  // dim W x dim V

    int dim_domain() const { return f.cols(); }
    int dim_codomain() const { return f.rows(); }
    Matrix transpose() const { return f.transpose(); }
    bool is_surjective() const { return f.rank() == f.rows(); }
    bool is_injective() const { return f.rank() == f.cols(); }
    Subspace kernel() const { return kernel_space(f); }
    Subspace image() const { return column_space(f); }
};

// {(X, f^* eta) | (f_* X, eta) in U}
inline Subspace pullback(const Subspace& u, const LinearMap& f) {
    int mv = f.dim_domain(), mw = f.dim_codomain();
    if (u.ambient() != 2 * mw) throw error("pullback: ambient mismatch");
    Matrix into_w(2 * mw, mv + mw);  // (X, eta) -> (f_* X, eta)
    into_w.set_block(0, 0, f.f);
    into_w.set_block(mw, mv, Matrix::identity(mw));
    Matrix into_v(2 * mv, mv + mw);  // (X, eta) -> (X, f^* eta)
    into_v.set_block(0, 0, Matrix::identity(mv));
    into_v.set_block(mv, mv, f.transpose());
    return image(into_v, preimage(into_w, u));
}

// {(f_* X, eta) | (X, f^* eta) in S}
inline Subspace pushforward(const Subspace& s, const LinearMap& f) {
    int mv = f.dim_domain(), mw = f.dim_codomain();
    if (s.ambient() != 2 * mv) throw error("pushforward: ambient mismatch");
    Matrix into_v(2 * mv, mv + mw);
    into_v.set_block(0, 0, Matrix::identity(mv));
    into_v.set_block(mv, mv, f.transpose());
    Matrix into_w(2 * mw, mv + mw);
    into_w.set_block(0, 0, f.f);
    into_w.set_block(mw, mv, Matrix::identity(mw));
    return image(into_w, preimage(into_v, s));
}

// Embeds a subspace of W into the big space as {(v, 0)}.
inline Subspace embed_vectors(const Subspace& s) {
    return Subspace::span_of(Matrix::vstack(s.basis(), Matrix::zero(s.ambient(), s.dim())));
}

// Embeds a subspace of W* into the big space as {(0, alpha)}.
inline Subspace embed_covectors(const Subspace& s) {
    return Subspace::span_of(Matrix::vstack(Matrix::zero(s.ambient(), s.dim()), s.basis()));
}

}  // namespace gcgeo
