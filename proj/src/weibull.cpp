#include "gti/weibull.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <string>
#include <vector>

namespace gti {

WeibullParams::WeibullParams(double shape, double scale) : shape_(shape), scale_(scale) {
    if (!(shape > 0.0))
        throw Error(ErrorKind::NonpositiveShape, "Weibull shape must be positive");
    if (!std::isfinite(shape) || shape <= kMinWeibullShape || shape >= kMaxWeibullShape)
        throw Error(ErrorKind::ShapeOutOfRange,
                    "Weibull shape " + fmt::format("{}", shape) + " outside (1e-6, 1e6)");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw Error(ErrorKind::InvalidScale, "Weibull scale must be positive and finite");
}

double weibull_hazard_at(const WeibullParams& p, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::CutoffOutOfDomain, "age must be nonnegative");
    const double beta = p.shape(), eta = p.scale();
    if (t == 0.0) {
        if (beta < 1.0)
            throw Error(ErrorKind::SingularOrigin, "Weibull hazard diverges at 0 for shape < 1");
        return beta == 1.0 ? 1.0 / eta : 0.0;
    }
    return (beta / eta) * std::pow(t / eta, beta - 1.0);
}

double weibull_cumulative_hazard_at(const WeibullParams& p, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::CutoffOutOfDomain, "age must be nonnegative");
    if (t == 0.0) return 0.0;
    return std::pow(t / p.scale(), p.shape());
}

double weibull_gti_closed(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape))
        throw Error(ErrorKind::NonpositiveShape, "Weibull shape must be positive and finite");
    return (shape - 1.0) / (shape + 1.0);
}

HazardCurve discretize_hazard(const WeibullParams& p, double domain_end, std::size_t n_steps) {
    if (n_steps == 0) throw Error(ErrorKind::InvalidCurve, "need at least one step");
    if (!(domain_end > 0.0) || !std::isfinite(domain_end))
        throw Error(ErrorKind::NonpositiveCutoff, "domain end must be positive");

    std::vector<double> knots(n_steps + 1);
    for (std::size_t i = 0; i < n_steps; ++i)
        knots[i] = domain_end * static_cast<double>(i) / static_cast<double>(n_steps);
    knots[n_steps] = domain_end;

    std::vector<double> rates(n_steps);
    double h_prev = 0.0;
    for (std::size_t i = 0; i < n_steps; ++i) {
        double h_next = weibull_cumulative_hazard_at(p, knots[i + 1]);
        rates[i] = (h_next - h_prev) / (knots[i + 1] - knots[i]);
        h_prev = h_next;
    }
    return {std::move(knots), std::move(rates)};
}

} // namespace gti
