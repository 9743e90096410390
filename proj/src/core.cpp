#include "bilayer/core.hpp"

#include <algorithm>
#include <cmath>

namespace bilayer {

double frobenius_norm(const Mat2C& m) {
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
                     std::norm(m.a22));
}

namespace {

// Eigen decomposition of a Hermitian 2x2 matrix [[a, b], [conj(b), d]].
// Returns eigenvalues l1 >= l2 and the unit eigenvector (v1, v2) for l1;
// the second eigenvector is its orthogonal complement.
struct HermEig {
    double l1, l2;
    cplx v1, v2;
};

HermEig hermitian_eig(const Mat2C& m) {
    const double a = m.a11.real();
    const double d = m.a22.real();
    const cplx b = m.a12;
    const double tr = a + d;
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(b));
    HermEig e;
    e.l1 = 0.5 * (tr + disc);
    e.l2 = 0.5 * (tr - disc);
    // Eigenvector for l1: (b, l1 - a), falling back to an axis vector when
    // the matrix is (nearly) scalar.
    cplx v1 = b;
    cplx v2 = cplx(e.l1 - a, 0.0);
    double n = std::sqrt(std::norm(v1) + std::norm(v2));
    if (n <= disc * 1e-150 || n == 0.0) {
        v1 = 1.0;
        v2 = 0.0;
        n = 1.0;
    }
    e.v1 = v1 / n;
    e.v2 = v2 / n;
    return e;
}

Mat2C from_spectral(const HermEig& e, double f1, double f2) {
    // f1 * v v^* + f2 * w w^* where w is the orthogonal complement of v.
    const cplx v1 = e.v1, v2 = e.v2;
    const cplx w1 = -std::conj(v2), w2 = std::conj(v1);
    return {f1 * v1 * std::conj(v1) + f2 * w1 * std::conj(w1),
            f1 * v1 * std::conj(v2) + f2 * w1 * std::conj(w2),
            f1 * v2 * std::conj(v1) + f2 * w2 * std::conj(w1),
            f1 * v2 * std::conj(v2) + f2 * w2 * std::conj(w2)};
}

}  // namespace

Mat2C hermitian_apply(const Mat2C& a, double (*f)(double)) {
    const HermEig e = hermitian_eig(a);
    return from_spectral(e, f(std::max(e.l1, 0.0)), f(std::max(e.l2, 0.0)));
}

PolarFactors matrix_abs_polar(const Mat2C& v) {
    const Mat2C a = v.adjoint() * v;
    const HermEig e = hermitian_eig(a);
    const double l1 = std::max(e.l1, 0.0);
    const double l2 = std::max(e.l2, 0.0);
    const double s1 = std::sqrt(l1);
    const double s2 = std::sqrt(l2);
    PolarFactors p;
    p.w = from_spectral(e, s1, s2);
    // Pseudo-inverse of W: singular directions (relative to the top
    // eigenvalue) map to zero, which defines U as zero on ker W.
    const double tol = l1 * 1e-28;
    const double i1 = (l1 > tol && l1 > 0.0) ? 1.0 / s1 : 0.0;
    const double i2 = (l2 > tol && l2 > 0.0) ? 1.0 / s2 : 0.0;
    p.u = v * from_spectral(e, i1, i2);
    return p;
}

cplx mu_branch(cplx k, double m) {
    const cplx d = k * k - cplx(m * m, 0.0);
    if (std::abs(d) < 1e-300) {
        throw BranchPointError("mu_branch: k too close to a branch point +-m");
    }
    cplx s = std::sqrt(d);  // principal root, Re s >= 0
    if (s.imag() < 0.0) s = -s;
    if (s.imag() == 0.0 && s.real() < 0.0) s = -s;
    return s;
}

}  // namespace bilayer
