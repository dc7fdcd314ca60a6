#pragma once

#include "gti/curves.hpp"

#include <cstddef>

namespace gti {

/// Weibull lifetime with shape beta and scale eta (years).
///
/// Shape is limited to (1e-6, 1e6); outside that band (t/eta)^beta overflows
/// or collapses for any realistic age and the model is meaningless.
class WeibullParams {
public:
    WeibullParams(double shape, double scale);

    double shape() const noexcept { return shape_; }
    double scale() const noexcept { return scale_; }

private:
    double shape_;
    double scale_;
};

inline constexpr double kMinWeibullShape = 1e-6;
inline constexpr double kMaxWeibullShape = 1e6;

/// (beta/eta) * (t/eta)^(beta-1). SingularOrigin for t = 0 with beta < 1.
double weibull_hazard_at(const WeibullParams& p, double t);

/// (t/eta)^beta.
double weibull_cumulative_hazard_at(const WeibullParams& p, double t);

/// Closed-form index (beta - 1) / (beta + 1), i.e. 1 - 2 / (beta + 1).
/// Independent of scale and of the cut-off.
double weibull_gti_closed(double shape);

/// Uniform n-step piecewise-constant hazard on [0, domain_end] whose rate on
/// each step is the exact increment of H over that step, so the running
/// integral reproduces H at every knot.
HazardCurve discretize_hazard(const WeibullParams& p, double domain_end, std::size_t n_steps);

} // namespace gti
