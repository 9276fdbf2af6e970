#pragma once

#include "zetac/eval.hpp"
#include "zetac/expr.hpp"
#include "zetac/polar.hpp"
#include "zetac/schedule.hpp"

namespace zetac {

enum class GrowthFamily {
    Constant,
    Logarithmic,
    Linear,
    Linearithmic,
    Polynomial,
    Exponential,
    Unclassified,
};

struct GrowthLabel {
    GrowthFamily family = GrowthFamily::Unclassified;
    double degree = 0.0;  // meaningful only for Polynomial
    PhaseLimit limiting_phase;
};

/// Labels the modulus growth of f against the canonical catalog by fitting
/// log g over the trailing finite window: flat slope splits into Constant or
/// Logarithmic, slope near 1 into Linear or Linearithmic, a stable slope
/// into Polynomial(slope); a clean linear fit of log g against n itself
/// means Exponential. Overflowed tail points simply shift the fit window to
/// the last finite samples.
GrowthLabel classify_zeta(const ExprPtr& f, const SampleSchedule& schedule,
                          const EvalSettings& settings = {});

const char* growth_family_name(GrowthFamily family);

}  // namespace zetac
