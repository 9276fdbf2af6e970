#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "zetac/eval.hpp"
#include "zetac/expr.hpp"
#include "zetac/schedule.hpp"

namespace zetac {

/// Parameters of the affine bridge between a complexity function and its
/// generalized real asymptotic form: T(n) = alpha*f(n) + beta.
struct TransformParams {
    double alpha = 1.0;  // must be nonzero
    double beta = 0.0;
};

enum class TransformErrorKind { NonRealComplexity, NegativeRealBranch, ZeroAlpha };

class TransformError : public std::runtime_error {
public:
    TransformError(TransformErrorKind kind, const std::string& message,
                   std::optional<std::int64_t> witness_n = std::nullopt)
        : std::runtime_error(message), kind_(kind), witness_n_(witness_n) {}
    TransformErrorKind kind() const { return kind_; }
    std::optional<std::int64_t> witness_n() const { return witness_n_; }

private:
    TransformErrorKind kind_;
    std::optional<std::int64_t> witness_n_;
};

/// Builds the simplified expression alpha*f + beta.
ExprPtr apply_general_notation(const ExprPtr& f, const TransformParams& params);

/// Inverts the affine bridge: returns the simplified (g - beta)/alpha,
/// but only for complexities that live on the nonnegative real axis.
/// Refuses with NonRealComplexity when the imaginary part is nonzero on the
/// schedule (the witness names the first offending n), and with
/// NegativeRealBranch when values are real but negative somewhere (the
/// phase would be pi, not 0).
ExprPtr transform_to_real(const ExprPtr& g, const TransformParams& params,
                          const SampleSchedule& schedule, double tol_abs = 1e-9,
                          double tol_rel = 1e-9, const EvalSettings& settings = {});

}  // namespace zetac
