#include "bmw/beta_modified_weibull.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

void Bmw6Params::check() const {
    shape.check();
    inner.check();
}

double cdf(double x, const Bmw6Params& p) {
    p.check();
    return reg_inc_beta(inner_cdf(x, p.inner), p.shape);
}

double survival(double x, const Bmw6Params& p) {
    p.check();
    // 1 - I_G(a,b) = I_{1-G}(b,a); feeding exp(-Phi) directly keeps the
    // right tail accurate where cdf rounds to 1.
    return reg_inc_beta(inner_survival(x, p.inner),
                        BetaShape{p.shape.b, p.shape.a});
}

double log_pdf(double x, const Bmw6Params& p) {
    p.check();
    const double a = p.shape.a;
    const double b = p.shape.b;
    // ln f = (a-1) ln G + ln g - (b-1) Phi - ln B, using ln(1-G) = -Phi.
    const double phi = phi_exponent(x, p.inner);
    double lf = inner_log_pdf(x, p.inner) - log_beta(p.shape);
    if (b != 1.0)
        lf -= (b - 1.0) * phi;
    if (a != 1.0) {
        const double g = -std::expm1(-phi);
        if (g == 0.0)
            return a > 1.0 ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
        lf += (a - 1.0) * std::log(g);
    }
    return lf;
}

double pdf(double x, const Bmw6Params& p) {
    return std::exp(log_pdf(x, p));
}

double hazard(double x, const Bmw6Params& p) {
    const double f = pdf(x, p);
    const double s = survival(x, p);
    if (s == 0.0) {
        std::ostringstream msg;
        msg << "hazard: survival function underflowed to zero at x = " << x
            << "; the ratio f/S is not representable here";
        throw OverflowError(msg.str());
    }
    return f / s;
}

double total_mass(const Bmw6Params& p) {
    p.check();
    if (p.inner.tau >= 0.0)
        return 1.0;
    return reg_inc_beta(inner_total_mass(p.inner), p.shape);
}

double quantile(double q, const Bmw6Params& p) {
    p.check();
    if (!(q >= 0.0) || !(q < 1.0)) {
        std::ostringstream msg;
        msg << "quantile: requires q in [0,1), got " << q;
        throw DomainError(msg.str());
    }
    const double mass = total_mass(p);
    if (q >= mass) {
        std::ostringstream msg;
        msg << "quantile: q = " << q << " is at or beyond the total mass "
            << mass << " (tau < 0 leaves a cured fraction)";
        throw MassExceededError(msg.str());
    }
    if (q == 0.0)
        return 0.0;

    // Invert the beta layer, tracking the survival complement in the upper
    // half so the target exponent s = -ln(1-y) survives y -> 1.
    double s;
    if (q <= 0.5) {
        const double y = inv_reg_inc_beta(q, p.shape);
        s = -std::log1p(-y);
    } else {
        const double d = inv_reg_inc_beta(1.0 - q,
                                          BetaShape{p.shape.b, p.shape.a});
        s = -std::log(d);
    }
    if (p.inner.tau < 0.0) {
        const double cap = p.inner.lambda / -p.inner.tau;
        if (s >= cap)
            s = std::nextafter(cap, 0.0);
    }
    return inner_quantile_phi(s, p.inner);
}

} // namespace bmw
