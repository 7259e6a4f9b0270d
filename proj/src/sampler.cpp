#include "bmw/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "bmw/errors.hpp"

namespace bmw {

std::vector<DrawOutcome> sample(const Bmw6Params& p, std::size_t n,
                                SeedSpec seed) {
    p.check();
    if (n == 0)
        throw DomainError("sample: requires n >= 1");
    const double mass = total_mass(p);
    Xoshiro256StarStar gen(seed);
    std::vector<DrawOutcome> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = gen.uniform01();
        if (u >= mass)
            out.push_back({OutcomeKind::Cured, 0.0});
        else
            out.push_back({OutcomeKind::Finite, quantile(u, p)});
    }
    return out;
}

std::vector<DrawOutcome> sample_beta_compose(const Bmw6Params& p, std::size_t n,
                                             SeedSpec seed) {
    p.check();
    if (n == 0)
        throw DomainError("sample_beta_compose: requires n >= 1");
    const double inner_mass = inner_total_mass(p.inner);
    Xoshiro256StarStar gen(seed);
    std::vector<DrawOutcome> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = gen.uniform01();
        const double v = inv_reg_inc_beta(u, p.shape);   // Beta(a,b) variate
        if (v >= inner_mass)
            out.push_back({OutcomeKind::Cured, 0.0});
        else
            out.push_back({OutcomeKind::Finite, inner_quantile(v, p.inner)});
    }
    return out;
}

double ks_statistic(std::span<const double> samples, const Bmw6Params& p) {
    p.check();
    if (samples.empty())
        throw DomainError("ks_statistic: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    // For tau < 0 the model cdf is conditioned on failing at all.
    const double mass = total_mass(p);
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i], p) / mass;
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, f - lo, hi - f});
    }
    return d;
}

} // namespace bmw
