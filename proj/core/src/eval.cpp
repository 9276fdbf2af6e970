#include "zetac/eval.hpp"

#include <cmath>

namespace zetac {

namespace {

constexpr double kMaxIntExponent = 4.611686018427387e18;  // 2^62

bool is_integer_valued(double x) {
    return std::isfinite(x) && std::nearbyint(x) == x;
}

class Evaluator {
public:
    Evaluator(std::int64_t n, const EvalSettings& settings)
        : n_(n), settings_(settings) {}

    ComplexValue eval(const ExprPtr& e) {
        ComplexValue v = eval_node(e);
        if (v.is_overflow() && settings_.overflow_policy == OverflowPolicy::Error) {
            throw EvalError(EvalErrorKind::Overflow, n_,
                            "value exceeded double range at n=" + std::to_string(n_));
        }
        return v;
    }

private:
    ComplexValue eval_node(const ExprPtr& e) {
        switch (e->kind()) {
            case ExprKind::Constant:
                return e->value();
            case ExprKind::Variable:
                return {static_cast<double>(n_), 0.0};
            case ExprKind::Negate:
                return cneg(eval(e->child()));
            case ExprKind::Add:
                return cadd(eval(e->lhs()), eval(e->rhs()));
            case ExprKind::Subtract:
                return csub(eval(e->lhs()), eval(e->rhs()));
            case ExprKind::Multiply:
                return cmul(eval(e->lhs()), eval(e->rhs()));
            case ExprKind::Divide: {
                ComplexValue num = eval(e->lhs());
                ComplexValue den = eval(e->rhs());
                if (den.is_zero()) {
                    throw EvalError(EvalErrorKind::DivisionByZero, n_,
                                    "division by zero at n=" + std::to_string(n_));
                }
                return cdiv(num, den);
            }
            case ExprKind::Power:
                return eval_power(e);
            case ExprKind::Log:
                return clog(nonzero_log_arg(e->child()));
            case ExprKind::LogBase: {
                ComplexValue lg = clog(nonzero_log_arg(e->child()));
                const double scale = std::log(e->log_base_value());
                return {lg.re / scale, lg.im / scale};
            }
            case ExprKind::Exp:
                return cexp(eval(e->child()));
            case ExprKind::Sqrt:
                return csqrt(eval(e->child()));
        }
        throw std::logic_error("unreachable expression kind");
    }

    ComplexValue nonzero_log_arg(const ExprPtr& arg) {
        ComplexValue v = eval(arg);
        if (v.is_zero()) {
            throw EvalError(EvalErrorKind::LogOfZero, n_,
                            "log of zero at n=" + std::to_string(n_));
        }
        return v;
    }

    ComplexValue eval_power(const ExprPtr& e) {
        ComplexValue base = eval(e->lhs());
        ComplexValue expo = eval(e->rhs());
        // Integer exponents use exact binary exponentiation; this keeps
        // n^2 bit-exact and real bases real.
        if (expo.is_real() && is_integer_valued(expo.re) &&
            std::fabs(expo.re) <= kMaxIntExponent) {
            const auto k = static_cast<std::int64_t>(expo.re);
            if (base.is_zero() && k < 0) {
                throw EvalError(EvalErrorKind::DivisionByZero, n_,
                                "zero base with negative exponent at n=" +
                                    std::to_string(n_));
            }
            return cpow_int(base, k);
        }
        if (base.is_zero()) {
            if (expo.is_real() && expo.re > 0.0) return {0.0, 0.0};
            throw EvalError(EvalErrorKind::LogOfZero, n_,
                            "zero base needs log(0) for this exponent at n=" +
                                std::to_string(n_));
        }
        return cpow(base, expo);
    }

    std::int64_t n_;
    const EvalSettings& settings_;
};

}  // namespace

ComplexValue evaluate(const ExprPtr& f, std::int64_t n, const EvalSettings& settings) {
    if (n < 2) {
        throw std::invalid_argument("cardinality n must be >= 2");
    }
    if (!f) {
        throw std::invalid_argument("null expression");
    }
    return Evaluator(n, settings).eval(f);
}

}  // namespace zetac
