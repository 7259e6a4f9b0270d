#include "bmw/inner_weibull.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

void InnerParams::check() const {
    const bool ok = gamma > 0.0 && beta > 0.0 && lambda > 0.0
                 && std::isfinite(gamma) && std::isfinite(beta)
                 && std::isfinite(lambda) && std::isfinite(tau);
    if (!ok) {
        std::ostringstream msg;
        msg << "InnerParams: requires finite gamma, beta, lambda > 0 and "
               "finite tau, got gamma = " << gamma << ", beta = " << beta
            << ", lambda = " << lambda << ", tau = " << tau;
        throw DomainError(msg.str());
    }
}

namespace {

void check_x_nonneg(double x) {
    if (std::isnan(x) || x < 0.0) {
        std::ostringstream msg;
        msg << "requires x >= 0, got " << x;
        throw DomainError(msg.str());
    }
}

void check_x_pos(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        std::ostringstream msg;
        msg << "requires finite x > 0, got " << x;
        throw DomainError(msg.str());
    }
}

// ln(1 + u/lambda) with u = (x/beta)^gamma, guarded against overflow of the
// plain ratio for extreme arguments.
double log1p_u_over_lambda(double x, const InnerParams& p) {
    const double r = std::pow(x / p.beta, p.gamma) / p.lambda;
    if (std::isfinite(r))
        return std::log1p(r);
    return p.gamma * std::log(x / p.beta) - std::log(p.lambda);
}

} // namespace

double phi_exponent(double x, const InnerParams& p) {
    p.check();
    check_x_nonneg(x);
    if (x == 0.0)
        return 0.0;
    // tau = 1 collapses the exponent to (x/beta)^gamma; taking it exactly
    // keeps lambda out of the value entirely.
    if (p.tau == 1.0)
        return std::pow(x / p.beta, p.gamma);
    const double L = log1p_u_over_lambda(x, p);
    if (p.tau == 0.0)
        return p.lambda * L;
    const double t = p.tau * L;
    if (t > 709.0)
        return std::numeric_limits<double>::infinity();
    // lambda * ((1 + u/lambda)^tau - 1) / tau; for tau < 0 this saturates at
    // lambda/|tau| as x grows, which is the defective-mass cap.
    return p.lambda * std::expm1(t) / p.tau;
}

double inner_survival(double x, const InnerParams& p) {
    return std::exp(-phi_exponent(x, p));
}

double inner_cdf(double x, const InnerParams& p) {
    return -std::expm1(-phi_exponent(x, p));
}

double inner_log_pdf(double x, const InnerParams& p) {
    p.check();
    check_x_pos(x);
    const double lxb = std::log(x / p.beta);
    double lp = std::log(p.gamma / p.beta);
    if (p.gamma != 1.0)
        lp += (p.gamma - 1.0) * lxb;
    if (p.tau != 1.0)
        lp += (p.tau - 1.0) * log1p_u_over_lambda(x, p);
    return lp - phi_exponent(x, p);
}

double inner_pdf(double x, const InnerParams& p) {
    return std::exp(inner_log_pdf(x, p));
}

double inner_hazard(double x, const InnerParams& p) {
    p.check();
    check_x_pos(x);
    // Same log prefactor as the density; the exp(-Phi) factor cancels
    // against the survival function algebraically.
    const double lxb = std::log(x / p.beta);
    double lh = std::log(p.gamma / p.beta);
    if (p.gamma != 1.0)
        lh += (p.gamma - 1.0) * lxb;
    if (p.tau != 1.0)
        lh += (p.tau - 1.0) * log1p_u_over_lambda(x, p);
    return std::exp(lh);
}

double inner_total_mass(const InnerParams& p) {
    p.check();
    if (p.tau >= 0.0)
        return 1.0;
    return -std::expm1(p.lambda / p.tau);
}

double inner_quantile_phi(double s, const InnerParams& p) {
    p.check();
    if (std::isnan(s) || s < 0.0) {
        std::ostringstream msg;
        msg << "inner_quantile_phi: requires s >= 0, got " << s;
        throw DomainError(msg.str());
    }
    if (s == 0.0)
        return 0.0;
    const double inv_gamma = 1.0 / p.gamma;
    if (p.tau == 1.0)
        return p.beta * std::pow(s, inv_gamma);
    if (p.tau == 0.0)
        return p.beta * std::pow(p.lambda * std::expm1(s / p.lambda), inv_gamma);
    if (p.tau < 0.0 && s >= p.lambda / -p.tau) {
        std::ostringstream msg;
        msg << "inner_quantile_phi: exponent " << s
            << " is at or beyond the defective cap lambda/|tau| = "
            << p.lambda / -p.tau;
        throw MassExceededError(msg.str());
    }
    const double arg = std::log1p(p.tau * s / p.lambda) / p.tau;
    return p.beta * std::pow(p.lambda * std::expm1(arg), inv_gamma);
}

double inner_quantile(double y, const InnerParams& p) {
    p.check();
    if (!(y >= 0.0) || !(y < 1.0)) {
        std::ostringstream msg;
        msg << "inner_quantile: requires y in [0,1), got " << y;
        throw DomainError(msg.str());
    }
    if (p.tau < 0.0) {
        const double mass = inner_total_mass(p);
        if (y >= mass) {
            std::ostringstream msg;
            msg << "inner_quantile: y = " << y
                << " is at or beyond the total mass " << mass
                << " (tau < 0 leaves a cured fraction)";
            throw MassExceededError(msg.str());
        }
    }
    double s = -std::log1p(-y);
    if (p.tau < 0.0) {
        // y < mass guarantees s < lambda/|tau| in exact arithmetic; keep the
        // rounded value strictly below the cap.
        const double cap = p.lambda / -p.tau;
        if (s >= cap)
            s = std::nextafter(cap, 0.0);
    }
    return inner_quantile_phi(s, p);
}

} // namespace bmw
