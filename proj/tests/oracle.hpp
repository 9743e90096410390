#pragma once

#include <complex>

// Independent high-precision oracles for the special-function tests. All
// values are computed from ascending series in 256-bit MPFR arithmetic, so
// they share no code path (and no truncation strategy) with the library's
// double-precision series/asymptotic implementation.
namespace oracle {

std::complex<double> bessel_j0(std::complex<double> z);
std::complex<double> bessel_y0(std::complex<double> z);
std::complex<double> macdonald_k0(std::complex<double> z);

}  // namespace oracle
