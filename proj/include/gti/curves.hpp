#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gti {

/// Piecewise-constant rate of mortality. Interval i is [knots[i], knots[i+1])
/// and carries rates[i]; the last knot is the end of the domain.
class HazardCurve {
public:
    /// Throws Error(InvalidCurve) unless knots start at 0, increase strictly,
    /// and there is exactly one finite nonnegative rate per interval.
    HazardCurve(std::vector<double> knots, std::vector<double> rates);

    std::span<const double> knots() const noexcept { return knots_; }
    std::span<const double> rates() const noexcept { return rates_; }
    std::size_t intervals() const noexcept { return rates_.size(); }
    double domain_end() const noexcept { return knots_.back(); }

private:
    std::vector<double> knots_;
    std::vector<double> rates_;
};

/// Piecewise-linear H(t) through (knots[i], values[i]) with H(0) = 0.
class CumulativeHazardCurve {
public:
    CumulativeHazardCurve(std::vector<double> knots, std::vector<double> values);

    std::span<const double> knots() const noexcept { return knots_; }
    std::span<const double> values() const noexcept { return values_; }
    double domain_end() const noexcept { return knots_.back(); }

    /// Linear interpolation; t must lie in [0, domain_end()].
    double value_at(double t) const;

    /// Exact integral of H over [0, t]: whole trapezoids up to the segment
    /// holding t, then the trapezoid under the interpolated partial segment.
    double integral_to(double t) const;

private:
    std::size_t segment_of(double t) const;

    std::vector<double> knots_;
    std::vector<double> values_;
};

/// S(t) sampled at knots: S(0) = 1, nonincreasing, strictly positive.
class SurvivalCurve {
public:
    SurvivalCurve(std::vector<double> knots, std::vector<double> values);

    std::span<const double> knots() const noexcept { return knots_; }
    std::span<const double> values() const noexcept { return values_; }
    double domain_end() const noexcept { return knots_.back(); }

private:
    std::vector<double> knots_;
    std::vector<double> values_;
};

CumulativeHazardCurve cumulative_hazard(const HazardCurve& hazard);

/// S = exp(-H) at every knot. Throws ZeroSurvival if exp(-H) underflows.
SurvivalCurve survival_from_cumulative_hazard(const CumulativeHazardCurve& cumulative);

/// H = -ln S at every knot. Throws ZeroSurvival on any zero entry, so callers
/// holding raw data with extinct tails must truncate first.
CumulativeHazardCurve cumulative_hazard_from_survival(std::span<const double> knots,
                                                      std::span<const double> survival);
CumulativeHazardCurve cumulative_hazard_from_survival(const SurvivalCurve& survival);

} // namespace gti
