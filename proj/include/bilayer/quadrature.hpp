#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace bilayer {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Integrates f over [a, b] with a composite Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order = 16);

}  // namespace bilayer
