#ifndef BMW_REDUCTIONS_HPP
#define BMW_REDUCTIONS_HPP

// Catalog of the named sub-distributions reached by fixing parameters of the
// six-parameter family, with independent closed-form reference
// implementations used to verify each reduction numerically.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmw/beta_modified_weibull.hpp"

namespace bmw {

enum class FamilyTag {
    Bmw6,
    BetaWeibull,
    BetaModifiedRayleigh,
    BetaRayleigh,
    BetaExponential,
    ExponentiatedWeibull,
    ExponentiatedExponential,
    Weibull4,
    GeneralizedWeibullTau0,
    ModifiedRayleigh,
    ClassicalWeibull,
    Rayleigh,
    Exponential,
};

std::string_view family_name(FamilyTag tag);

struct NamedFamily {
    FamilyTag tag;
    std::vector<std::string> free_params;
};

/// Most specific catalog row whose fixed-parameter pattern matches p within
/// tol (componentwise), falling back to Bmw6. Ties break toward the row with
/// more fixed parameters. At tau = 1 the lambda value is immaterial (the
/// exponent collapses to (x/beta)^gamma), so rows with tau = 1 do not
/// constrain lambda.
NamedFamily classify(const Bmw6Params& p, double tol = 1e-12);

/// Independent closed-form CDF of a named reduction, evaluated at x with the
/// free parameters taken from p. Throws DomainError for family = Bmw6.
double reference_cdf(FamilyTag family, const Bmw6Params& p, double x);

/// Closed-form density matching reference_cdf.
double reference_pdf(FamilyTag family, const Bmw6Params& p, double x);

struct EquivalenceReport {
    double max_cdf_diff;
    double max_pdf_diff;
};

/// Sup-norm differences between the library cdf/pdf and the closed-form
/// references over a grid. Precondition: classify(p) matches family
/// (throws DomainError otherwise).
EquivalenceReport equivalence_report(const Bmw6Params& p, FamilyTag family,
                                     std::span<const double> grid);

} // namespace bmw

#endif
