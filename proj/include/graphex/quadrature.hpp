#ifndef GRAPHEX_QUADRATURE_HPP
#define GRAPHEX_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace graphex {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    std::size_t max_intervals = 10000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t intervals = 0;
};

using Integrand = std::function<double(double)>;
/// Upper bound on |integral| beyond a cut point.
using TailBound = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. Throws
/// NumericalError when the interval cap is hit before the tolerance is met.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral over (lower, upper) where either end may be infinite. Starts on
/// [a, b] and pushes an infinite end outward (doubling the step) until its
/// tail bound falls below a small fraction of the tolerance.
QuadratureResult integrate_with_tails(const Integrand& f, double a, double b,
                                      const TailBound& left_tail, const TailBound& right_tail,
                                      const QuadratureOptions& options = {});

}  // namespace graphex

#endif  // GRAPHEX_QUADRATURE_HPP
