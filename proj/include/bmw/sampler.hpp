#ifndef BMW_SAMPLER_HPP
#define BMW_SAMPLER_HPP

// Inverse-transform sampling. For tau < 0 the distribution is defective, and
// draws past the total mass come back as explicit Cured outcomes rather than
// sentinel numbers.

#include <cstddef>
#include <span>
#include <vector>

#include "bmw/beta_modified_weibull.hpp"
#include "bmw/random.hpp"

namespace bmw {

enum class OutcomeKind { Finite, Cured };

struct DrawOutcome {
    OutcomeKind kind;
    double x;   ///< lifetime; meaningful only when kind == Finite

    bool finite() const { return kind == OutcomeKind::Finite; }
};

/// n inverse-transform draws: u ~ U[0,1); Cured when u >= total_mass(p),
/// otherwise Finite(quantile(u, p)). One generator word per outcome.
std::vector<DrawOutcome> sample(const Bmw6Params& p, std::size_t n, SeedSpec seed);

/// Structural composition route: v = inv_reg_inc_beta(u, shape) is a
/// Beta(a,b) variate, then x = inner_quantile(v). Distributionally identical
/// to sample(); byte-identical to it when a = b = 1.
std::vector<DrawOutcome> sample_beta_compose(const Bmw6Params& p, std::size_t n,
                                             SeedSpec seed);

/// One-sample Kolmogorov-Smirnov statistic sup|F_emp - F_model| of finite
/// draws against cdf(.,p) (against the conditional cdf/total_mass when
/// tau < 0). Throws DomainError on an empty sample.
double ks_statistic(std::span<const double> samples, const Bmw6Params& p);

} // namespace bmw

#endif
