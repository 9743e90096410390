#pragma once

#include "bilayer/core.hpp"

namespace bilayer::specfun {

/// Values of G(z) = H(z) - H(iz) and its first two derivatives, where
/// H = H_0^(1). The log singularities of the two Hankel terms cancel, so
/// G is bounded near zero with G(0+) = 1.
struct GDerivs {
    cplx g;
    cplx g1;
    cplx g2;
};

/// Bessel functions of complex argument. Contracts cover the closed first
/// quadrant with |z| <= 1e3; j1/y1 exist because H0' = -H1 feeds the kernel
/// derivatives.
cplx bessel_j0(cplx z);
cplx bessel_y0(cplx z);
cplx bessel_j1(cplx z);
cplx bessel_y1(cplx z);

/// Hankel function H_n^(1)(z) = J_n(z) + i Y_n(z), n in {0, 1}.
/// Valid for z != 0 with -pi < arg z <= pi.
cplx hankel1(int n, cplx z);

/// Macdonald function K_0(z) for z != 0, |arg z| < pi.
cplx macdonald_k0(cplx z);

/// K_0 through its Laguerre-type integral representation
///   K_0(z) = e^{-z} Gamma(1/2)^{-1} sqrt(pi/(2z))
///            int_0^inf e^{-t} t^{-1/2} (1 + t/(2z))^{-1/2} dt.
/// Slowly convergent near the negative real axis; used as a cross-check
/// against the series/asymptotic evaluation.
cplx macdonald_k0_integral(cplx z);

/// G, G', G'' for z != 0 in the closed first quadrant. Derivatives come
/// from the H1 recurrences (H0' = -H1, H1' = H0 - H1/z), not from numerical
/// differentiation.
GDerivs g_derivs(cplx z);

namespace detail {

/// Switch radius between ascending series and Hankel asymptotics.
inline constexpr double kSeriesSwitch = 12.0;

cplx j0_series(cplx z);
cplx y0_series(cplx z);
cplx j1_series(cplx z);
cplx y1_series(cplx z);
cplx hankel_asymptotic(int kind, int n, cplx z);  // kind 1 or 2
cplx k0_series(cplx z);
cplx k0_asymptotic(cplx z);

}  // namespace detail

}  // namespace bilayer::specfun
