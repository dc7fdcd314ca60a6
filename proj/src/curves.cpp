#include "gti/curves.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace gti {

namespace {

void check_knots(std::span<const double> knots, const char* what) {
    if (knots.empty()) throw Error(ErrorKind::InvalidCurve, std::string(what) + ": no knots");
    if (knots.front() != 0.0)
        throw Error(ErrorKind::InvalidCurve, std::string(what) + ": first knot must be 0");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i]))
            throw Error(ErrorKind::InvalidCurve, std::string(what) + ": non-finite knot");
        if (i > 0 && !(knots[i] > knots[i - 1]))
            throw Error(ErrorKind::InvalidCurve,
                        std::string(what) + ": knots must be strictly increasing");
    }
}

} // namespace

HazardCurve::HazardCurve(std::vector<double> knots, std::vector<double> rates)
    : knots_(std::move(knots)), rates_(std::move(rates)) {
    check_knots(knots_, "hazard curve");
    if (knots_.size() < 2)
        throw Error(ErrorKind::InvalidCurve, "hazard curve: need at least one interval");
    if (rates_.size() != knots_.size() - 1)
        throw Error(ErrorKind::InvalidCurve, "hazard curve: need one rate per interval");
    for (double r : rates_) {
        if (!std::isfinite(r) || r < 0.0)
            throw Error(ErrorKind::InvalidCurve, "hazard curve: rates must be finite and >= 0");
    }
}

CumulativeHazardCurve::CumulativeHazardCurve(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    check_knots(knots_, "cumulative hazard");
    if (values_.size() != knots_.size())
        throw Error(ErrorKind::InvalidCurve, "cumulative hazard: one value per knot");
    if (values_.front() != 0.0)
        throw Error(ErrorKind::InvalidCurve, "cumulative hazard: H(0) must be 0");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw Error(ErrorKind::InvalidCurve, "cumulative hazard: non-finite value");
        if (i > 0 && values_[i] < values_[i - 1])
            throw Error(ErrorKind::InvalidCurve, "cumulative hazard: values must be nondecreasing");
    }
}

std::size_t CumulativeHazardCurve::segment_of(double t) const {
    // Index i of the segment [knots[i], knots[i+1]] containing t.
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    auto i = static_cast<std::size_t>(it - knots_.begin());
    if (i == 0) return 0;
    return std::min(i - 1, knots_.size() - 2);
}

double CumulativeHazardCurve::value_at(double t) const {
    if (!(t >= 0.0) || t > domain_end())
        throw Error(ErrorKind::CutoffOutOfDomain,
                    "age " + fmt::format("{}", t) + " outside cumulative hazard domain");
    if (knots_.size() == 1) return values_[0];
    std::size_t i = segment_of(t);
    double t0 = knots_[i], t1 = knots_[i + 1];
    if (t == t1) return values_[i + 1];
    double w = (t - t0) / (t1 - t0);
    return values_[i] + w * (values_[i + 1] - values_[i]);
}

double CumulativeHazardCurve::integral_to(double t) const {
    if (!(t >= 0.0) || t > domain_end())
        throw Error(ErrorKind::CutoffOutOfDomain,
                    "age " + fmt::format("{}", t) + " outside cumulative hazard domain");
    if (t == 0.0 || knots_.size() == 1) return 0.0;
    std::size_t last = segment_of(t);
    double area = 0.0;
    for (std::size_t i = 0; i < last; ++i)
        area += 0.5 * (knots_[i + 1] - knots_[i]) * (values_[i] + values_[i + 1]);
    double h_t = value_at(t);
    area += 0.5 * (t - knots_[last]) * (values_[last] + h_t);
    return area;
}

SurvivalCurve::SurvivalCurve(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    check_knots(knots_, "survival curve");
    if (values_.size() != knots_.size())
        throw Error(ErrorKind::InvalidCurve, "survival curve: one value per knot");
    if (values_.front() != 1.0)
        throw Error(ErrorKind::InvalidCurve, "survival curve: S(0) must be 1");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || values_[i] > 1.0)
            throw Error(ErrorKind::InvalidCurve, "survival curve: values must lie in (0, 1]");
        if (i > 0 && values_[i] > values_[i - 1])
            throw Error(ErrorKind::InvalidCurve, "survival curve: values must be nonincreasing");
    }
}

CumulativeHazardCurve cumulative_hazard(const HazardCurve& hazard) {
    auto knots = hazard.knots();
    auto rates = hazard.rates();
    std::vector<double> values(knots.size());
    values[0] = 0.0;
    double running = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        running += rates[i] * (knots[i + 1] - knots[i]);
        values[i + 1] = running;
    }
    return {std::vector<double>(knots.begin(), knots.end()), std::move(values)};
}

SurvivalCurve survival_from_cumulative_hazard(const CumulativeHazardCurve& cumulative) {
    auto knots = cumulative.knots();
    auto h = cumulative.values();
    std::vector<double> values(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        values[i] = std::exp(-h[i]);
        if (values[i] == 0.0)
            throw Error(ErrorKind::ZeroSurvival,
                        "survival underflows to 0 at age " + fmt::format("{}", knots[i]));
    }
    return {std::vector<double>(knots.begin(), knots.end()), std::move(values)};
}

CumulativeHazardCurve cumulative_hazard_from_survival(std::span<const double> knots,
                                                      std::span<const double> survival) {
    if (knots.size() != survival.size())
        throw Error(ErrorKind::InvalidCurve, "survival: one value per knot");
    std::vector<double> values(survival.size());
    for (std::size_t i = 0; i < survival.size(); ++i) {
        if (survival[i] == 0.0)
            throw Error(ErrorKind::ZeroSurvival,
                        "zero survival at age " + fmt::format("{}", knots[i]) +
                            "; truncate the domain before this age");
        if (!(survival[i] > 0.0) || survival[i] > 1.0)
            throw Error(ErrorKind::InvalidCurve, "survival values must lie in (0, 1]");
        values[i] = survival[i] == 1.0 ? 0.0 : -std::log(survival[i]);
    }
    return {std::vector<double>(knots.begin(), knots.end()), std::move(values)};
}

CumulativeHazardCurve cumulative_hazard_from_survival(const SurvivalCurve& survival) {
    return cumulative_hazard_from_survival(survival.knots(), survival.values());
}

} // namespace gti
