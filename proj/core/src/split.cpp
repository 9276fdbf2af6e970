#include "zetac/split.hpp"

#include <cmath>

#include "zetac/simplify.hpp"

namespace zetac {

namespace {

// What we can prove about an expression's value over the whole domain
// n >= 2, by structure alone. Each level implies the ones before it.
enum class ValueClass { Unknown, Real, NonNegReal, PositiveReal, GreaterOneReal };

bool at_least(ValueClass c, ValueClass floor) {
    return static_cast<int>(c) >= static_cast<int>(floor);
}

ValueClass weakest(ValueClass a, ValueClass b) {
    return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

bool is_integer_constant(const ExprPtr& e, std::int64_t& out) {
    if (!e->is_constant()) return false;
    const ComplexValue& v = e->value();
    if (v.im != 0.0 || !std::isfinite(v.re)) return false;
    if (std::nearbyint(v.re) != v.re || std::fabs(v.re) > 4.611686018427387e18) return false;
    out = static_cast<std::int64_t>(v.re);
    return true;
}

ValueClass classify_real(const ExprPtr& e);

ValueClass classify_power(const ExprPtr& e) {
    const ValueClass base = classify_real(e->lhs());
    std::int64_t k = 0;
    if (is_integer_constant(e->rhs(), k)) {
        if (!at_least(base, ValueClass::Real)) return ValueClass::Unknown;
        if (at_least(base, ValueClass::GreaterOneReal)) {
            return k >= 1 ? ValueClass::GreaterOneReal : ValueClass::PositiveReal;
        }
        if (at_least(base, ValueClass::PositiveReal)) return ValueClass::PositiveReal;
        if (k >= 0 && k % 2 == 0) return ValueClass::NonNegReal;  // x^even >= 0
        if (at_least(base, ValueClass::NonNegReal) && k >= 1) return ValueClass::NonNegReal;
        return ValueClass::Real;
    }
    const ValueClass expo = classify_real(e->rhs());
    if (!at_least(expo, ValueClass::Real)) return ValueClass::Unknown;
    if (e->rhs()->is_constant()) {  // real non-integer literal exponent
        const double w = e->rhs()->value().re;
        if (at_least(base, ValueClass::GreaterOneReal) && w > 0.0) {
            return ValueClass::GreaterOneReal;
        }
        if (at_least(base, ValueClass::PositiveReal)) return ValueClass::PositiveReal;
        if (at_least(base, ValueClass::NonNegReal) && w > 0.0) return ValueClass::NonNegReal;
        return ValueClass::Unknown;  // negative base, fractional power
    }
    // Variable real exponent: positive base keeps the value positive.
    if (at_least(base, ValueClass::GreaterOneReal) &&
        at_least(expo, ValueClass::PositiveReal)) {
        return ValueClass::GreaterOneReal;
    }
    if (at_least(base, ValueClass::PositiveReal)) return ValueClass::PositiveReal;
    return ValueClass::Unknown;
}

ValueClass classify_real(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Constant: {
            const ComplexValue& v = e->value();
            if (v.im != 0.0 || !std::isfinite(v.re)) return ValueClass::Unknown;
            if (v.re > 1.0) return ValueClass::GreaterOneReal;
            if (v.re > 0.0) return ValueClass::PositiveReal;
            if (v.re == 0.0) return ValueClass::NonNegReal;
            return ValueClass::Real;
        }
        case ExprKind::Variable:
            return ValueClass::GreaterOneReal;  // n >= 2
        case ExprKind::Negate:
            return at_least(classify_real(e->child()), ValueClass::Real)
                       ? ValueClass::Real
                       : ValueClass::Unknown;
        case ExprKind::Add: {
            const ValueClass a = classify_real(e->lhs());
            const ValueClass b = classify_real(e->rhs());
            if (!at_least(a, ValueClass::Real) || !at_least(b, ValueClass::Real)) {
                return ValueClass::Unknown;
            }
            if ((at_least(a, ValueClass::GreaterOneReal) && at_least(b, ValueClass::NonNegReal)) ||
                (at_least(b, ValueClass::GreaterOneReal) && at_least(a, ValueClass::NonNegReal))) {
                return ValueClass::GreaterOneReal;
            }
            if ((at_least(a, ValueClass::PositiveReal) && at_least(b, ValueClass::NonNegReal)) ||
                (at_least(b, ValueClass::PositiveReal) && at_least(a, ValueClass::NonNegReal))) {
                return ValueClass::PositiveReal;
            }
            return weakest(weakest(a, b), ValueClass::NonNegReal) == ValueClass::NonNegReal
                       ? ValueClass::NonNegReal
                       : ValueClass::Real;
        }
        case ExprKind::Subtract: {
            const ValueClass a = classify_real(e->lhs());
            const ValueClass b = classify_real(e->rhs());
            return (at_least(a, ValueClass::Real) && at_least(b, ValueClass::Real))
                       ? ValueClass::Real
                       : ValueClass::Unknown;
        }
        case ExprKind::Multiply: {
            const ValueClass a = classify_real(e->lhs());
            const ValueClass b = classify_real(e->rhs());
            if (!at_least(a, ValueClass::Real) || !at_least(b, ValueClass::Real)) {
                return ValueClass::Unknown;
            }
            return weakest(a, b);  // class levels are multiplicative
        }
        case ExprKind::Divide: {
            const ValueClass a = classify_real(e->lhs());
            const ValueClass b = classify_real(e->rhs());
            if (!at_least(a, ValueClass::Real) || !at_least(b, ValueClass::Real)) {
                return ValueClass::Unknown;
            }
            if (at_least(a, ValueClass::PositiveReal) && at_least(b, ValueClass::PositiveReal)) {
                return ValueClass::PositiveReal;
            }
            if (at_least(a, ValueClass::NonNegReal) && at_least(b, ValueClass::PositiveReal)) {
                return ValueClass::NonNegReal;
            }
            return ValueClass::Real;
        }
        case ExprKind::Power:
            return classify_power(e);
        case ExprKind::Log:
        case ExprKind::LogBase: {
            const ValueClass a = classify_real(e->child());
            if (!at_least(a, ValueClass::PositiveReal)) return ValueClass::Unknown;
            const bool sign_preserving =
                e->kind() == ExprKind::Log || e->log_base_value() > 1.0;
            if (at_least(a, ValueClass::GreaterOneReal) && sign_preserving) {
                return ValueClass::PositiveReal;
            }
            return ValueClass::Real;
        }
        case ExprKind::Exp: {
            const ValueClass a = classify_real(e->child());
            if (!at_least(a, ValueClass::Real)) return ValueClass::Unknown;
            if (at_least(a, ValueClass::PositiveReal)) return ValueClass::GreaterOneReal;
            return ValueClass::PositiveReal;
        }
        case ExprKind::Sqrt: {
            const ValueClass a = classify_real(e->child());
            if (!at_least(a, ValueClass::NonNegReal)) return ValueClass::Unknown;
            return a;  // sqrt preserves nonneg, positive, and >1
        }
    }
    return ValueClass::Unknown;
}

struct RawSplit {
    ExprPtr re;
    ExprPtr im;
};

std::optional<RawSplit> split(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Constant:
            return RawSplit{Expr::constant(e->value().re), Expr::constant(e->value().im)};
        case ExprKind::Variable:
            return RawSplit{e, Expr::constant(0.0)};
        case ExprKind::Negate: {
            auto c = split(e->child());
            if (!c) return std::nullopt;
            return RawSplit{Expr::negate(c->re), Expr::negate(c->im)};
        }
        case ExprKind::Add: {
            auto a = split(e->lhs());
            auto b = split(e->rhs());
            if (!a || !b) return std::nullopt;
            return RawSplit{Expr::add(a->re, b->re), Expr::add(a->im, b->im)};
        }
        case ExprKind::Subtract: {
            auto a = split(e->lhs());
            auto b = split(e->rhs());
            if (!a || !b) return std::nullopt;
            return RawSplit{Expr::subtract(a->re, b->re), Expr::subtract(a->im, b->im)};
        }
        case ExprKind::Multiply: {
            auto a = split(e->lhs());
            auto b = split(e->rhs());
            if (!a || !b) return std::nullopt;
            // (A1 + iB1)(A2 + iB2)
            return RawSplit{
                Expr::subtract(Expr::multiply(a->re, b->re), Expr::multiply(a->im, b->im)),
                Expr::add(Expr::multiply(a->re, b->im), Expr::multiply(a->im, b->re))};
        }
        case ExprKind::Divide: {
            auto num = split(e->lhs());
            auto den = split(e->rhs());
            if (!num || !den) return std::nullopt;
            // Only real denominators divide componentwise; anything else
            // would need conjugation machinery the normal form excludes.
            if (!simplify(den->im)->is_constant_value(0.0)) return std::nullopt;
            ExprPtr d = den->re;
            return RawSplit{Expr::divide(num->re, d), Expr::divide(num->im, d)};
        }
        default:
            // Transcendentals and powers pass through whole iff provably
            // real-valued over the domain.
            if (at_least(classify_real(e), ValueClass::Real)) {
                return RawSplit{e, Expr::constant(0.0)};
            }
            return std::nullopt;
    }
}

}  // namespace

std::optional<RectangularSplit> split_rectangular(const ExprPtr& f) {
    if (!f) return std::nullopt;
    auto raw = split(f);
    if (!raw) return std::nullopt;
    return RectangularSplit{simplify(raw->re), simplify(raw->im)};
}

}  // namespace zetac
