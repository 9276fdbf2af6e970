#include "zetac/expr.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace zetac {

ExprPtr Expr::make(ExprKind kind, ComplexValue value, double log_base,
                   ExprPtr a, ExprPtr b) {
    return ExprPtr(new Expr(kind, value, log_base, std::move(a), std::move(b)));
}

ExprPtr Expr::constant(ComplexValue v) {
    return make(ExprKind::Constant, v, 0.0, nullptr, nullptr);
}

ExprPtr Expr::variable() {
    static const ExprPtr n = make(ExprKind::Variable, {}, 0.0, nullptr, nullptr);
    return n;
}

ExprPtr Expr::negate(ExprPtr a) {
    return make(ExprKind::Negate, {}, 0.0, std::move(a), nullptr);
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    return make(ExprKind::Add, {}, 0.0, std::move(a), std::move(b));
}

ExprPtr Expr::subtract(ExprPtr a, ExprPtr b) {
    return make(ExprKind::Subtract, {}, 0.0, std::move(a), std::move(b));
}

ExprPtr Expr::multiply(ExprPtr a, ExprPtr b) {
    return make(ExprKind::Multiply, {}, 0.0, std::move(a), std::move(b));
}

ExprPtr Expr::divide(ExprPtr a, ExprPtr b) {
    return make(ExprKind::Divide, {}, 0.0, std::move(a), std::move(b));
}

ExprPtr Expr::power(ExprPtr base, ExprPtr exponent) {
    return make(ExprKind::Power, {}, 0.0, std::move(base), std::move(exponent));
}

ExprPtr Expr::log(ExprPtr a) {
    return make(ExprKind::Log, {}, 0.0, std::move(a), nullptr);
}

ExprPtr Expr::log_base(double base, ExprPtr a) {
    if (!(std::isfinite(base) && base > 0.0 && base != 1.0)) {
        throw std::invalid_argument("log base must be a finite real > 0 and != 1");
    }
    return make(ExprKind::LogBase, {}, base, std::move(a), nullptr);
}

ExprPtr Expr::exp(ExprPtr a) {
    return make(ExprKind::Exp, {}, 0.0, std::move(a), nullptr);
}

ExprPtr Expr::sqrt(ExprPtr a) {
    return make(ExprKind::Sqrt, {}, 0.0, std::move(a), nullptr);
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case ExprKind::Constant:
            return a->value() == b->value();
        case ExprKind::Variable:
            return true;
        case ExprKind::LogBase:
            return a->log_base_value() == b->log_base_value() &&
                   structurally_equal(a->child(), b->child());
        case ExprKind::Negate:
        case ExprKind::Log:
        case ExprKind::Exp:
        case ExprKind::Sqrt:
            return structurally_equal(a->child(), b->child());
        default:
            return structurally_equal(a->lhs(), b->lhs()) &&
                   structurally_equal(a->rhs(), b->rhs());
    }
}

bool contains_imaginary_constant(const ExprPtr& e) {
    if (!e) return false;
    if (e->kind() == ExprKind::Constant) return e->value().im != 0.0;
    return contains_imaginary_constant(e->lhs()) ||
           contains_imaginary_constant(e->rhs());
}

std::size_t node_count(const ExprPtr& e) {
    if (!e) return 0;
    return 1 + node_count(e->lhs()) + node_count(e->rhs());
}

}  // namespace zetac
