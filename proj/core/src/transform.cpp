#include "zetac/transform.hpp"

#include <cmath>

#include "zetac/polar.hpp"
#include "zetac/simplify.hpp"

namespace zetac {

namespace {

void validate(const TransformParams& params) {
    if (params.alpha == 0.0) {
        throw TransformError(TransformErrorKind::ZeroAlpha, "alpha must be nonzero");
    }
    if (!std::isfinite(params.alpha) || !std::isfinite(params.beta)) {
        throw std::invalid_argument("transform parameters must be finite");
    }
}

}  // namespace

ExprPtr apply_general_notation(const ExprPtr& f, const TransformParams& params) {
    validate(params);
    return simplify(Expr::add(Expr::multiply(Expr::constant(params.alpha), f),
                              Expr::constant(params.beta)));
}

ExprPtr transform_to_real(const ExprPtr& g, const TransformParams& params,
                          const SampleSchedule& schedule, double tol_abs,
                          double tol_rel, const EvalSettings& settings) {
    validate(params);

    const RealnessVerdict realness = is_real_valued(g, schedule, tol_abs, tol_rel, settings);
    if (!realness.is_real) {
        std::string msg = "imaginary part of the complexity is nonzero";
        if (realness.witness_n) msg += " at n=" + std::to_string(*realness.witness_n);
        throw TransformError(TransformErrorKind::NonRealComplexity, msg,
                             realness.witness_n);
    }

    for (std::int64_t n : schedule.points()) {
        const ComplexValue v = evaluate(g, n, settings);
        if (v.re < -tol_abs) {
            throw TransformError(
                TransformErrorKind::NegativeRealBranch,
                "complexity is negative at n=" + std::to_string(n) +
                    "; the zero-phase branch requires nonnegative values",
                n);
        }
    }

    return simplify(Expr::divide(Expr::subtract(g, Expr::constant(params.beta)),
                                 Expr::constant(params.alpha)));
}

}  // namespace zetac
