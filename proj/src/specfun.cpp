#include "bilayer/specfun.hpp"

#include <array>
#include <cmath>

#include "bilayer/quadrature.hpp"

namespace bilayer::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr int kMaxSeriesTerms = 44;
const cplx kI{0.0, 1.0};

// Harmonic numbers H_0..H_47.
const std::array<double, 48>& harmonic() {
    static const std::array<double, 48> h = [] {
        std::array<double, 48> a{};
        a[0] = 0.0;
        for (int k = 1; k < 48; ++k) a[k] = a[k - 1] + 1.0 / k;
        return a;
    }();
    return h;
}

void check_nonzero(cplx z, const char* who) {
    if (z == cplx(0.0, 0.0)) {
        throw DomainError(std::string(who) + ": z = 0 outside the domain");
    }
}

}  // namespace

namespace detail {

cplx j0_series(cplx z) {
    const cplx q = -0.25 * z * z;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / double(k * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

cplx y0_series(cplx z) {
    const cplx q = -0.25 * z * z;
    cplx term = 1.0, sum = 0.0;
    const auto& h = harmonic();
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / double(k * k);
        sum -= h[k] * term;  // (-1)^{k+1} H_k (z^2/4)^k / (k!)^2 with q = -z^2/4
        if (std::abs(term) < 1e-18) break;
    }
    return (2.0 / M_PI) * ((std::log(0.5 * z) + kEulerGamma) * j0_series(z) + sum);
}

cplx j1_series(cplx z) {
    const cplx q = -0.25 * z * z;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / double(k * (k + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 * z * sum;
}

cplx y1_series(cplx z) {
    const cplx q = -0.25 * z * z;
    const auto& h = harmonic();
    cplx term = 1.0, sum = h[1];  // k = 0 contributes H_0 + H_1 = 1
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / double(k * (k + 1));
        sum += (h[k] + h[k + 1]) * term;
        if (std::abs(term) < 1e-18) break;
    }
    return (2.0 / M_PI) *
           ((std::log(0.5 * z) + kEulerGamma) * j1_series(z) - 1.0 / z -
            0.25 * z * sum);
}

// H_n^(1/2)(z) ~ sqrt(2/(pi z)) exp(+-i(z - n pi/2 - pi/4)) sum_k (+-i)^k a_k(n)/z^k
// with a_k(n) the standard Hankel coefficients. Terms are summed until they
// stop decreasing (optimal truncation).
cplx hankel_asymptotic(int kind, int n, cplx z) {
    const cplx iz = (kind == 1) ? kI : -kI;
    cplx sum = 1.0;
    cplx term = 1.0;
    double a = 1.0;  // a_k(n) numerator recurrence
    double last = 1.0;
    for (int k = 0; k < 60; ++k) {
        const double num = (n == 0) ? -(2.0 * k + 1.0) * (2.0 * k + 1.0)
                                    : 4.0 - (2.0 * k + 1.0) * (2.0 * k + 1.0);
        a = num / (8.0 * (k + 1.0));
        term *= iz * a / z;
        const double mag = std::abs(term);
        if (mag >= last) break;  // asymptotic series started diverging
        sum += term;
        last = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    const cplx phase = (kind == 1)
                           ? std::exp(kI * (z - 0.5 * M_PI * n - 0.25 * M_PI))
                           : std::exp(-kI * (z - 0.5 * M_PI * n - 0.25 * M_PI));
    return std::sqrt(2.0 / (M_PI * z)) * phase * sum;
}

cplx k0_series(cplx z) {
    const cplx q = 0.25 * z * z;
    const auto& h = harmonic();
    cplx term = 1.0, i0 = 1.0, sum = 0.0;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        term *= q / double(k * k);
        i0 += term;
        sum += h[k] * term;
        if (std::abs(term) < 1e-18 * (std::abs(i0) + 1.0)) break;
    }
    return -(std::log(0.5 * z) + kEulerGamma) * i0 + sum;
}

cplx k0_asymptotic(cplx z) {
    cplx sum = 1.0, term = 1.0;
    double last = 1.0;
    for (int k = 0; k < 60; ++k) {
        const double num = -(2.0 * k + 1.0) * (2.0 * k + 1.0);
        term *= num / (8.0 * (k + 1.0)) / z;
        const double mag = std::abs(term);
        if (mag >= last) break;
        sum += term;
        last = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    return std::sqrt(0.5 * M_PI / z) * std::exp(-z) * sum;
}

}  // namespace detail

cplx bessel_j0(cplx z) {
    check_nonzero(z, "bessel_j0");
    if (std::abs(z) <= detail::kSeriesSwitch) return detail::j0_series(z);
    return 0.5 * (detail::hankel_asymptotic(1, 0, z) + detail::hankel_asymptotic(2, 0, z));
}

cplx bessel_y0(cplx z) {
    check_nonzero(z, "bessel_y0");
    if (std::abs(z) <= detail::kSeriesSwitch) return detail::y0_series(z);
    return (detail::hankel_asymptotic(1, 0, z) - detail::hankel_asymptotic(2, 0, z)) /
           (2.0 * kI);
}

cplx bessel_j1(cplx z) {
    check_nonzero(z, "bessel_j1");
    if (std::abs(z) <= detail::kSeriesSwitch) return detail::j1_series(z);
    return 0.5 * (detail::hankel_asymptotic(1, 1, z) + detail::hankel_asymptotic(2, 1, z));
}

cplx bessel_y1(cplx z) {
    check_nonzero(z, "bessel_y1");
    if (std::abs(z) <= detail::kSeriesSwitch) return detail::y1_series(z);
    return (detail::hankel_asymptotic(1, 1, z) - detail::hankel_asymptotic(2, 1, z)) /
           (2.0 * kI);
}

cplx hankel1(int n, cplx z) {
    if (n != 0 && n != 1) throw DomainError("hankel1: order must be 0 or 1");
    check_nonzero(z, "hankel1");
    if (std::abs(z) <= detail::kSeriesSwitch) {
        return (n == 0) ? detail::j0_series(z) + kI * detail::y0_series(z)
                        : detail::j1_series(z) + kI * detail::y1_series(z);
    }
    return detail::hankel_asymptotic(1, n, z);
}

cplx macdonald_k0(cplx z) {
    check_nonzero(z, "macdonald_k0");
    if (z.real() < 0.0 && z.imag() == 0.0) {
        throw DomainError("macdonald_k0: arg z = pi outside the domain");
    }
    if (std::abs(z) <= detail::kSeriesSwitch) return detail::k0_series(z);
    return detail::k0_asymptotic(z);
}

cplx macdonald_k0_integral(cplx z) {
    check_nonzero(z, "macdonald_k0_integral");
    if (z.real() < 0.0 && z.imag() == 0.0) {
        throw DomainError("macdonald_k0_integral: arg z = pi outside the domain");
    }
    // Substitution t = s^2 removes the endpoint singularity:
    //   int_0^inf e^{-t} t^{-1/2} (1 + t/(2z))^{-1/2} dt
    //     = 2 int_0^inf e^{-s^2} (1 + s^2/(2z))^{-1/2} ds.
    const cplx inv2z = 0.5 / z;
    const GaussRule& rule = gauss_legendre(20);
    const double s_max = 9.0;
    const int panels = 18;
    const double w = s_max / panels;
    cplx integral = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = p * w;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = lo + 0.5 * w * (rule.nodes[i] + 1.0);
            const cplx f = std::exp(-s * s) / std::sqrt(1.0 + s * s * inv2z);
            integral += 0.5 * w * rule.weights[i] * f;
        }
    }
    integral *= 2.0;
    return std::exp(-z) / std::sqrt(M_PI) * std::sqrt(0.5 * M_PI / z) * integral;
}

GDerivs g_derivs(cplx z) {
    check_nonzero(z, "g_derivs");
    if (z.real() < 0.0 || z.imag() < 0.0) {
        throw DomainError("g_derivs: z outside the closed first quadrant");
    }
    const cplx iz = kI * z;
    const cplx h0z = hankel1(0, z);
    const cplx h1z = hankel1(1, z);
    const cplx h0iz = hankel1(0, iz);
    const cplx h1iz = hankel1(1, iz);
    GDerivs d;
    d.g = h0z - h0iz;
    // d/dz H(iz) = i H'(iz) = -i H1(iz)
    d.g1 = -h1z + kI * h1iz;
    // H1'(w) = H0(w) - H1(w)/w
    d.g2 = -(h0z - h1z / z) - (h0iz - h1iz / iz);
    return d;
}

}  // namespace bilayer::specfun
