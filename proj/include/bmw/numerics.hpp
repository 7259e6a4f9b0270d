#ifndef BMW_NUMERICS_HPP
#define BMW_NUMERICS_HPP

// Generic numerical kernels: adaptive quadrature, Richardson-extrapolated
// central differences, Brent root finding, and grid builders. These serve as
// independent ground truth in the test suites and as fallbacks for the
// closed-form paths.

#include <cstddef>
#include <functional>
#include <vector>

namespace bmw {

struct QuadResult {
    double value;
    double abs_error_estimate;
    std::size_t evaluations;
};

/// Integrates f over (lo, hi) by globally adaptive bisection with a nested
/// Gauss(7)/Kronrod(15) pair. The rule is open: f is never evaluated at lo
/// or hi, and a smooth order-9 clustering map concentrates nodes at both
/// endpoints so integrable endpoint singularities converge. hi may be
/// +infinity (mapped through x = lo + t/(1-t)).
///
/// Stops when the accumulated error estimate drops below tol. Throws
/// ConvergenceError if an interval would need splitting beyond depth 60,
/// or if f returns a non-finite value at a node.
QuadResult adaptive_quad(const std::function<double(double)>& f,
                         double lo, double hi, double tol);

/// Derivative of f at x: 4-point central difference at steps h and h/2,
/// Richardson-combined to O(h^6).
double central_diff(const std::function<double(double)>& f, double x, double h);

/// Root of f on a bracketing interval [lo, hi] (f(lo) and f(hi) of opposite
/// sign or zero) by Brent's method. Returns x with |f(x)| small or bracket
/// width <= tol. Throws DomainError on an invalid bracket.
double brent_root(const std::function<double(double)>& f,
                  double lo, double hi, double tol);

/// n equally spaced points from lo to hi inclusive (n >= 2).
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

/// n log-spaced points from lo to hi inclusive (lo > 0, n >= 2).
std::vector<double> log_grid(double lo, double hi, std::size_t n);

} // namespace bmw

#endif
