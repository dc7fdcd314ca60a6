#pragma once

#include "gti/curves.hpp"

#include <string_view>

namespace gti {

enum class Classification { Ageing, Rejuvenating, NonAgeing };

std::string_view to_string(Classification c) noexcept;

/// Tolerance separating discretization noise from a genuine sign of the index.
inline constexpr double kDefaultClassifyEpsilon = 1e-3;

struct GtiResult {
    double cutoff = 0.0;             // T, years
    double gti = 0.0;                // in (-1, 1)
    double survival_at_cutoff = 1.0; // S(T) = exp(-H(T)); underflows to 0 past H ~ 745
    double h_eff = 0.0;              // per year; h_eff * T == H(T)
    Classification classification = Classification::NonAgeing;
};

/// Rate of the exponential lifetime that has the same survival at `cutoff`:
/// -ln(S(T)) / T.
double effective_hazard(double survival_at_cutoff, double cutoff);

Classification classify(double gti_value, double epsilon = kDefaultClassifyEpsilon);

/// Gini-type index on [0, T]: 1 - 2 * integral(H, 0, T) / (T * H(T)).
///
/// The integral is exact for the piecewise-linear H, so the only error is the
/// one already present in the discretized hazard. Throws NonpositiveCutoff for
/// T <= 0, CutoffOutOfDomain for T past the curve, DegenerateInterval when
/// H(T) = 0 (no mortality before T makes the ratio 0/0).
GtiResult gini_type_index(const CumulativeHazardCurve& cumulative, double cutoff,
                          double epsilon = kDefaultClassifyEpsilon);

/// Area decomposition of the index. `under_curve` is the area below H on
/// [0, T]; `under_chord` is the triangle below the exponential chord
/// h_eff * t; `between` is their difference. The index is
/// 1 - under_curve / under_chord.
struct ChordAreas {
    double cutoff = 0.0;
    double under_curve = 0.0;
    double between = 0.0;
    double under_chord = 0.0;
    double gti = 0.0;
};

ChordAreas chord_areas(const CumulativeHazardCurve& cumulative, double cutoff);

} // namespace gti
