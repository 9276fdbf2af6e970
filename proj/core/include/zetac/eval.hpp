#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zetac/expr.hpp"

namespace zetac {

enum class OverflowPolicy {
    Error,     // raise EvalError{Overflow} when a value leaves double range
    Saturate,  // keep the non-finite result as an explicit infinity sentinel
};

struct EvalSettings {
    // Base assigned to the bare `log` keyword at parse time; `ln` is always
    // natural. Must be > 0 and != 1.
    double log_base_for_bare_log = std::numbers::e;
    OverflowPolicy overflow_policy = OverflowPolicy::Saturate;
};

enum class EvalErrorKind { DivisionByZero, LogOfZero, Overflow };

class EvalError : public std::runtime_error {
public:
    EvalError(EvalErrorKind kind, std::int64_t n, const std::string& what)
        : std::runtime_error(what), kind_(kind), n_(n) {}
    EvalErrorKind kind() const { return kind_; }
    std::int64_t n() const { return n_; }

private:
    EvalErrorKind kind_;
    std::int64_t n_;
};

/// Evaluates f at cardinality n (n >= 2) under complex arithmetic with
/// principal-branch transcendentals. Deterministic: identical inputs yield
/// bit-identical outputs.
ComplexValue evaluate(const ExprPtr& f, std::int64_t n,
                      const EvalSettings& settings = {});

}  // namespace zetac
