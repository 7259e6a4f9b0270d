#ifndef BMW_INNER_WEIBULL_HPP
#define BMW_INNER_WEIBULL_HPP

// The four-parameter modified Weibull baseline distribution with survival
// function exp(-Phi(x)), where
//
//     Phi(x) = lambda * [ (1 + (x/beta)^gamma / lambda)^tau - 1 ] / tau,
//
// taken as lambda * ln(1 + (x/beta)^gamma / lambda) in the tau -> 0 limit.
// For tau < 0 the exponent saturates at lambda/|tau|, so the distribution is
// defective: a positive fraction of the mass never fails.

namespace bmw {

/// Baseline parameters. gamma, beta, lambda > 0; tau may have any sign
/// (tau = 0 selects the analytic limit form).
struct InnerParams {
    double gamma;   ///< shape
    double beta;    ///< scale, same units as x
    double lambda;
    double tau;

    /// Throws DomainError unless all fields are finite and
    /// gamma, beta, lambda > 0.
    void check() const;
};

/// The cumulative hazard exponent Phi(x) >= 0, Phi(0) = 0, nondecreasing.
/// Stable through tau = 0 (expm1/log1p form).
double phi_exponent(double x, const InnerParams& p);

/// exp(-Phi(x)); equals 1 at x = 0.
double inner_survival(double x, const InnerParams& p);

/// 1 - exp(-Phi(x)), computed as -expm1(-Phi) for accuracy near zero.
double inner_cdf(double x, const InnerParams& p);

/// Density g(x) for x > 0 (may diverge as x -> 0+ when gamma < 1).
double inner_pdf(double x, const InnerParams& p);

/// ln g(x), finite wherever the density is positive; -inf where it is 0.
double inner_log_pdf(double x, const InnerParams& p);

/// Hazard g(x)/S(x) for x > 0, evaluated in log space so the exponential
/// factors cancel exactly.
double inner_hazard(double x, const InnerParams& p);

/// 1 for tau >= 0; 1 - exp(-lambda/|tau|) for tau < 0.
double inner_total_mass(const InnerParams& p);

/// Closed-form quantile: the x with inner_cdf(x) = y, for
/// 0 <= y < inner_total_mass(p). Throws MassExceededError when y is at or
/// beyond the total mass (possible only for tau < 0), DomainError for
/// y outside [0,1).
double inner_quantile(double y, const InnerParams& p);

/// Quantile in terms of the target exponent s = -ln(1-y): the x with
/// phi_exponent(x) = s. Lets callers that track survival probabilities
/// directly (s large) avoid forming 1-y. Requires s >= 0 and, for tau < 0,
/// s < lambda/|tau|.
double inner_quantile_phi(double s, const InnerParams& p);

} // namespace bmw

#endif
