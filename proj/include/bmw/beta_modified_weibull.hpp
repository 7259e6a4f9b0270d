#ifndef BMW_BETA_MODIFIED_WEIBULL_HPP
#define BMW_BETA_MODIFIED_WEIBULL_HPP

// The six-parameter Beta modified Weibull distribution, obtained by
// composing the baseline CDF G with the Beta(a,b) CDF:
//
//     F(x) = I_{G(x)}(a, b),     f(x) = G^(a-1) (1-G)^(b-1) g(x) / B(a,b).

#include "bmw/inner_weibull.hpp"
#include "bmw/special_functions.hpp"

namespace bmw {

/// Full parameter set: Beta shapes (a, b) plus the four baseline parameters.
struct Bmw6Params {
    BetaShape shape;
    InnerParams inner;

    void check() const;
};

/// F(x) = I_{G(x)}(a,b); 0 at x = 0, nondecreasing.
double cdf(double x, const Bmw6Params& p);

/// 1 - F(x), computed as I_{1-G(x)}(b,a) so the right tail keeps full
/// relative accuracy.
double survival(double x, const Bmw6Params& p);

/// Density for x > 0.
double pdf(double x, const Bmw6Params& p);

/// ln f(x) with every factor in log space; -inf where the density is 0.
double log_pdf(double x, const Bmw6Params& p);

/// f(x)/S(x) for x > 0. Throws OverflowError when the survival function
/// has underflowed to zero at x.
double hazard(double x, const Bmw6Params& p);

/// 1 for tau >= 0; I_{1-exp(-lambda/|tau|)}(a,b) for tau < 0.
double total_mass(const Bmw6Params& p);

/// Quantile: x with |cdf(x) - q| <= 1e-9, for 0 <= q < total_mass(p).
/// quantile(0) = 0 by convention. Throws MassExceededError for
/// q >= total_mass, DomainError for q outside [0,1).
double quantile(double q, const Bmw6Params& p);

} // namespace bmw

#endif
