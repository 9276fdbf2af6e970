#pragma once

#include <optional>

#include "zetac/expr.hpp"

namespace zetac {

struct RectangularSplit {
    ExprPtr real_part;
    ExprPtr imag_part;
};

/// Symbolic Re/Im extraction for i-linear expressions: for every valid n,
/// f(n) = real_part(n) + i*imag_part(n), with both parts free of imaginary
/// constants and exactly real-valued. Returns nullopt when the imaginary
/// unit sits inside a transcendental, an exponent, or a denominator, or
/// when a subtree cannot be shown real-valued over n >= 2 — in that case
/// only pointwise numeric splitting is available.
std::optional<RectangularSplit> split_rectangular(const ExprPtr& f);

}  // namespace zetac
