#include "bmw/reductions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

std::string_view family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Bmw6: return "BMW6";
        case FamilyTag::BetaWeibull: return "BetaWeibull";
        case FamilyTag::BetaModifiedRayleigh: return "BetaModifiedRayleigh";
        case FamilyTag::BetaRayleigh: return "BetaRayleigh";
        case FamilyTag::BetaExponential: return "BetaExponential";
        case FamilyTag::ExponentiatedWeibull: return "ExponentiatedWeibull";
        case FamilyTag::ExponentiatedExponential: return "ExponentiatedExponential";
        case FamilyTag::Weibull4: return "Weibull4";
        case FamilyTag::GeneralizedWeibullTau0: return "GeneralizedWeibullTau0";
        case FamilyTag::ModifiedRayleigh: return "ModifiedRayleigh";
        case FamilyTag::ClassicalWeibull: return "ClassicalWeibull";
        case FamilyTag::Rayleigh: return "Rayleigh";
        case FamilyTag::Exponential: return "Exponential";
    }
    return "?";
}

namespace {

constexpr const char* kParamNames[6] = {"a", "b", "gamma", "beta", "lambda", "tau"};

// Fixed-parameter pattern of one catalog row, in (a, b, gamma, beta, lambda,
// tau) order. Rows with tau = 1 leave lambda unconstrained: the exponent
// collapses to (x/beta)^gamma and lambda cancels.
struct Row {
    FamilyTag tag;
    std::array<std::optional<double>, 6> fixed;

    int fixed_count() const {
        int n = 0;
        for (const auto& f : fixed)
            n += f.has_value();
        return n;
    }
};

// Ordered most-fixed first so the most specific row wins; rows with equal
// counts have mutually exclusive patterns (or are shadowed by an earlier,
// more specific row).
const std::array<Row, 12>& catalog() {
    constexpr auto none = std::nullopt;
    static const std::array<Row, 12> rows = {{
        {FamilyTag::Rayleigh,                 {1.0, 1.0, 2.0, 1.0, none, 1.0}},
        {FamilyTag::BetaRayleigh,             {none, 1.0, 2.0, 1.0, none, 1.0}},
        {FamilyTag::Exponential,              {1.0, 1.0, 1.0, none, none, 1.0}},
        {FamilyTag::ModifiedRayleigh,         {1.0, 1.0, 2.0, none, none, 1.0}},
        {FamilyTag::ExponentiatedExponential, {none, 1.0, 1.0, none, none, 1.0}},
        {FamilyTag::ClassicalWeibull,         {1.0, 1.0, none, none, none, 1.0}},
        {FamilyTag::BetaModifiedRayleigh,     {none, 1.0, 2.0, none, none, 1.0}},
        {FamilyTag::GeneralizedWeibullTau0,   {1.0, 1.0, none, none, none, 0.0}},
        {FamilyTag::BetaExponential,          {none, none, 1.0, none, none, 1.0}},
        {FamilyTag::ExponentiatedWeibull,     {none, 1.0, none, none, none, 1.0}},
        {FamilyTag::Weibull4,                 {1.0, 1.0, none, none, none, none}},
        {FamilyTag::BetaWeibull,              {none, none, none, none, none, 1.0}},
    }};
    return rows;
}

std::array<double, 6> param_values(const Bmw6Params& p) {
    return {p.shape.a, p.shape.b, p.inner.gamma,
            p.inner.beta, p.inner.lambda, p.inner.tau};
}

bool matches(const Row& row, const std::array<double, 6>& v, double tol) {
    for (int i = 0; i < 6; ++i) {
        if (row.fixed[i] && std::abs(v[i] - *row.fixed[i]) > tol)
            return false;
    }
    return true;
}

// Two-parameter Weibull pieces used by the reference forms; these are the
// independent closed forms, not the phi-based path.
double weibull_cdf(double x, double gamma, double beta) {
    return -std::expm1(-std::pow(x / beta, gamma));
}

double weibull_pdf(double x, double gamma, double beta) {
    const double w = std::pow(x / beta, gamma);
    return gamma / beta * std::pow(x / beta, gamma - 1.0) * std::exp(-w);
}

} // namespace

NamedFamily classify(const Bmw6Params& p, double tol) {
    p.check();
    if (!(tol > 0.0))
        throw DomainError("classify: requires tol > 0");
    const auto v = param_values(p);
    for (const Row& row : catalog()) {
        if (matches(row, v, tol)) {
            NamedFamily result{row.tag, {}};
            for (int i = 0; i < 6; ++i) {
                if (!row.fixed[i])
                    result.free_params.emplace_back(kParamNames[i]);
            }
            return result;
        }
    }
    return NamedFamily{FamilyTag::Bmw6,
                       {kParamNames, kParamNames + 6}};
}

double reference_cdf(FamilyTag family, const Bmw6Params& p, double x) {
    p.check();
    if (std::isnan(x) || x < 0.0)
        throw DomainError("reference_cdf: requires x >= 0");
    const double a = p.shape.a;
    const double gamma = p.inner.gamma;
    const double beta = p.inner.beta;
    const double lambda = p.inner.lambda;
    switch (family) {
        case FamilyTag::ClassicalWeibull:
            return weibull_cdf(x, gamma, beta);
        case FamilyTag::Rayleigh:
        case FamilyTag::ModifiedRayleigh:
            return weibull_cdf(x, 2.0, beta);
        case FamilyTag::Exponential:
            return weibull_cdf(x, 1.0, beta);
        case FamilyTag::ExponentiatedWeibull:
            return std::pow(weibull_cdf(x, gamma, beta), a);
        case FamilyTag::ExponentiatedExponential:
            return std::pow(weibull_cdf(x, 1.0, beta), a);
        case FamilyTag::BetaModifiedRayleigh:
        case FamilyTag::BetaRayleigh:
            return std::pow(weibull_cdf(x, 2.0, beta), a);
        case FamilyTag::BetaWeibull:
            return reg_inc_beta(weibull_cdf(x, gamma, beta), p.shape);
        case FamilyTag::BetaExponential:
            return reg_inc_beta(weibull_cdf(x, 1.0, beta), p.shape);
        case FamilyTag::GeneralizedWeibullTau0:
            // S = (1 + (x/beta)^gamma / lambda)^(-lambda)
            return -std::expm1(-lambda
                               * std::log1p(std::pow(x / beta, gamma) / lambda));
        case FamilyTag::Weibull4:
            return inner_cdf(x, p.inner);
        case FamilyTag::Bmw6:
            break;
        default:
            break;
    }
    std::ostringstream msg;
    msg << "reference_cdf: no closed form for family "
        << family_name(family);
    throw DomainError(msg.str());
}

double reference_pdf(FamilyTag family, const Bmw6Params& p, double x) {
    p.check();
    if (std::isnan(x) || x <= 0.0)
        throw DomainError("reference_pdf: requires x > 0");
    const double a = p.shape.a;
    const double gamma = p.inner.gamma;
    const double beta = p.inner.beta;
    const double lambda = p.inner.lambda;
    switch (family) {
        case FamilyTag::ClassicalWeibull:
            return weibull_pdf(x, gamma, beta);
        case FamilyTag::Rayleigh:
        case FamilyTag::ModifiedRayleigh:
            return weibull_pdf(x, 2.0, beta);
        case FamilyTag::Exponential:
            return weibull_pdf(x, 1.0, beta);
        case FamilyTag::ExponentiatedWeibull:
            return a * std::pow(weibull_cdf(x, gamma, beta), a - 1.0)
                 * weibull_pdf(x, gamma, beta);
        case FamilyTag::ExponentiatedExponential:
            return a * std::pow(weibull_cdf(x, 1.0, beta), a - 1.0)
                 * weibull_pdf(x, 1.0, beta);
        case FamilyTag::BetaModifiedRayleigh:
        case FamilyTag::BetaRayleigh:
            return a * std::pow(weibull_cdf(x, 2.0, beta), a - 1.0)
                 * weibull_pdf(x, 2.0, beta);
        case FamilyTag::BetaWeibull: {
            const double w = weibull_cdf(x, gamma, beta);
            const double lf = (a - 1.0) * std::log(w)
                            + (p.shape.b - 1.0) * std::log1p(-w)
                            - log_beta(p.shape);
            return std::exp(lf) * weibull_pdf(x, gamma, beta);
        }
        case FamilyTag::BetaExponential: {
            const double w = weibull_cdf(x, 1.0, beta);
            const double lf = (a - 1.0) * std::log(w)
                            + (p.shape.b - 1.0) * std::log1p(-w)
                            - log_beta(p.shape);
            return std::exp(lf) * weibull_pdf(x, 1.0, beta);
        }
        case FamilyTag::GeneralizedWeibullTau0: {
            const double u = std::pow(x / beta, gamma);
            return std::exp(-(lambda + 1.0) * std::log1p(u / lambda))
                 * gamma / beta * std::pow(x / beta, gamma - 1.0);
        }
        case FamilyTag::Weibull4:
            return inner_pdf(x, p.inner);
        case FamilyTag::Bmw6:
            break;
        default:
            break;
    }
    std::ostringstream msg;
    msg << "reference_pdf: no closed form for family "
        << family_name(family);
    throw DomainError(msg.str());
}

EquivalenceReport equivalence_report(const Bmw6Params& p, FamilyTag family,
                                     std::span<const double> grid) {
    const NamedFamily found = classify(p);
    if (found.tag != family) {
        std::ostringstream msg;
        msg << "equivalence_report: parameters classify as "
            << family_name(found.tag) << ", not " << family_name(family);
        throw DomainError(msg.str());
    }
    EquivalenceReport report{0.0, 0.0};
    for (const double x : grid) {
        report.max_cdf_diff = std::max(
            report.max_cdf_diff,
            std::abs(cdf(x, p) - reference_cdf(family, p, x)));
        report.max_pdf_diff = std::max(
            report.max_pdf_diff,
            std::abs(pdf(x, p) - reference_pdf(family, p, x)));
    }
    return report;
}

} // namespace bmw
