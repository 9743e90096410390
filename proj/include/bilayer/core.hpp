#pragma once

#include <complex>

#include "bilayer/errors.hpp"

namespace bilayer {

using cplx = std::complex<double>;

/// 2x2 complex matrix value. Carries potential samples, Fourier symbols and
/// resolvent kernels; only the 2x2 case is ever needed.
struct Mat2C {
    cplx a11{}, a12{}, a21{}, a22{};

    static Mat2C zero() { return {}; }
    static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2C diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

    Mat2C adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    cplx trace() const { return a11 + a22; }
    cplx det() const { return a11 * a22 - a12 * a21; }

    Mat2C operator+(const Mat2C& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2C operator-(const Mat2C& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2C operator*(const Mat2C& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2C operator*(cplx s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    friend Mat2C operator*(cplx s, const Mat2C& m) { return m * s; }

    /// Matrix-vector product (u1, u2) -> M (u1, u2).
    void apply(cplx u1, cplx u2, cplx& v1, cplx& v2) const {
        v1 = a11 * u1 + a12 * u2;
        v2 = a21 * u1 + a22 * u2;
    }

    /// Inverse; the caller guarantees det != 0.
    Mat2C inverse() const {
        const cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
};

/// Pointwise matrix size |M| = sqrt(sum |M_ij|^2).
double frobenius_norm(const Mat2C& m);

/// Polar factorization V = U W with W = sqrt(V^*V) Hermitian PSD and U a
/// contraction (unitary when V is invertible, zero on ker W otherwise).
struct PolarFactors {
    Mat2C w;
    Mat2C u;
};
PolarFactors matrix_abs_polar(const Mat2C& v);

/// Applies f to the eigenvalues of a Hermitian PSD matrix. Used for W^{1/2}
/// and the pseudo-inverse in the polar factorization.
Mat2C hermitian_apply(const Mat2C& a, double (*f)(double));

/// Upper-half-plane branch of mu^2 = k^2 - m^2. On the real axis (Im mu = 0)
/// the root with Re mu >= 0 is returned. Throws BranchPointError at k = +-m.
cplx mu_branch(cplx k, double m);

/// Spectral parameter bundle (k, m, mu).
struct SpectralPoint {
    cplx k;
    double m = 0.0;
    cplx mu;
};

inline SpectralPoint make_spectral_point(cplx k, double m) {
    return {k, m, mu_branch(k, m)};
}

}  // namespace bilayer
