#include "gti/index.hpp"

#include "gti/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <string>

namespace gti {

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::Ageing: return "Ageing";
    case Classification::Rejuvenating: return "Rejuvenating";
    case Classification::NonAgeing: return "NonAgeing";
    }
    return "NonAgeing";
}

double effective_hazard(double survival_at_cutoff, double cutoff) {
    if (!(cutoff > 0.0))
        throw Error(ErrorKind::NonpositiveCutoff, "cut-off must be positive");
    if (survival_at_cutoff == 0.0)
        throw Error(ErrorKind::ZeroSurvival, "survival at the cut-off is 0");
    if (!(survival_at_cutoff > 0.0) || survival_at_cutoff > 1.0)
        throw Error(ErrorKind::InvalidCurve, "survival must lie in (0, 1]");
    if (survival_at_cutoff == 1.0) return 0.0;
    return -std::log(survival_at_cutoff) / cutoff;
}

Classification classify(double gti_value, double epsilon) {
    if (gti_value > epsilon) return Classification::Ageing;
    if (gti_value < -epsilon) return Classification::Rejuvenating;
    return Classification::NonAgeing;
}

namespace {

struct Window {
    double h_at_cutoff;
    double integral;
};

Window window(const CumulativeHazardCurve& cumulative, double cutoff) {
    if (!(cutoff > 0.0))
        throw Error(ErrorKind::NonpositiveCutoff, "cut-off must be positive");
    if (cutoff > cumulative.domain_end())
        throw Error(ErrorKind::CutoffOutOfDomain,
                    "cut-off " + fmt::format("{}", cutoff) + " is beyond the curve domain end " +
                        fmt::format("{}", cumulative.domain_end()));
    Window w{cumulative.value_at(cutoff), cumulative.integral_to(cutoff)};
    if (w.h_at_cutoff == 0.0)
        throw Error(ErrorKind::DegenerateInterval,
                    "no mortality before cut-off " + fmt::format("{}", cutoff));
    return w;
}

} // namespace

GtiResult gini_type_index(const CumulativeHazardCurve& cumulative, double cutoff,
                          double epsilon) {
    Window w = window(cumulative, cutoff);
    GtiResult r;
    r.cutoff = cutoff;
    r.gti = 1.0 - 2.0 * w.integral / (cutoff * w.h_at_cutoff);
    r.survival_at_cutoff = std::exp(-w.h_at_cutoff);
    r.h_eff = w.h_at_cutoff / cutoff;
    r.classification = classify(r.gti, epsilon);
    return r;
}

ChordAreas chord_areas(const CumulativeHazardCurve& cumulative, double cutoff) {
    Window w = window(cumulative, cutoff);
    ChordAreas a;
    a.cutoff = cutoff;
    a.under_curve = w.integral;
    a.under_chord = 0.5 * cutoff * w.h_at_cutoff;
    a.between = a.under_chord - a.under_curve;
    a.gti = 1.0 - a.under_curve / a.under_chord;
    return a;
}

} // namespace gti
