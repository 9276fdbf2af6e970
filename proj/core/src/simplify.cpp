#include "zetac/simplify.hpp"

#include <cmath>
#include <optional>

namespace zetac {

namespace {

bool finite(const ComplexValue& v) { return !v.is_overflow(); }

std::optional<ComplexValue> fold_power(const ComplexValue& base,
                                       const ComplexValue& expo) {
    if (expo.is_real() && std::nearbyint(expo.re) == expo.re &&
        std::fabs(expo.re) <= 4.611686018427387e18) {
        const auto k = static_cast<std::int64_t>(expo.re);
        if (base.is_zero() && k < 0) return std::nullopt;
        return cpow_int(base, k);
    }
    if (base.is_zero()) {
        if (expo.is_real() && expo.re > 0.0) return ComplexValue{0.0, 0.0};
        return std::nullopt;
    }
    return cpow(base, expo);
}

// Folds a node whose children are all constants. Returns nullopt when the
// fold would raise an evaluation error or leave double range.
std::optional<ComplexValue> fold(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Negate:
            return cneg(e.child()->value());
        case ExprKind::Add:
            return cadd(e.lhs()->value(), e.rhs()->value());
        case ExprKind::Subtract:
            return csub(e.lhs()->value(), e.rhs()->value());
        case ExprKind::Multiply:
            return cmul(e.lhs()->value(), e.rhs()->value());
        case ExprKind::Divide:
            if (e.rhs()->value().is_zero()) return std::nullopt;
            return cdiv(e.lhs()->value(), e.rhs()->value());
        case ExprKind::Power:
            return fold_power(e.lhs()->value(), e.rhs()->value());
        case ExprKind::Log:
            if (e.child()->value().is_zero()) return std::nullopt;
            return clog(e.child()->value());
        case ExprKind::LogBase: {
            const ComplexValue& v = e.child()->value();
            if (v.is_zero()) return std::nullopt;
            ComplexValue lg = clog(v);
            const double scale = std::log(e.log_base_value());
            return ComplexValue{lg.re / scale, lg.im / scale};
        }
        case ExprKind::Exp:
            return cexp(e.child()->value());
        case ExprKind::Sqrt:
            return csqrt(e.child()->value());
        default:
            return std::nullopt;
    }
}

bool all_children_constant(const Expr& e) {
    if (e.lhs() && !e.lhs()->is_constant()) return false;
    if (e.rhs() && !e.rhs()->is_constant()) return false;
    return e.lhs() != nullptr;
}

// Builds x + c, folding the sign so no negative real constant is emitted.
ExprPtr affine_tail(const ExprPtr& x, const ComplexValue& c) {
    if (c.is_zero()) return x;
    if (c.im == 0.0 && c.re < 0.0) {
        return Expr::subtract(x, Expr::constant(-c.re));
    }
    return Expr::add(x, Expr::constant(c));
}

// Views e as x + c when e is Add/Sub with one constant operand (constant on
// either side of Add, on the right of Sub).
struct AffineView {
    ExprPtr x;
    ComplexValue c;
};

std::optional<AffineView> affine_view(const ExprPtr& e) {
    if (e->kind() == ExprKind::Add) {
        if (e->rhs()->is_constant()) return AffineView{e->lhs(), e->rhs()->value()};
        if (e->lhs()->is_constant()) return AffineView{e->rhs(), e->lhs()->value()};
    }
    if (e->kind() == ExprKind::Subtract && e->rhs()->is_constant()) {
        return AffineView{e->lhs(), cneg(e->rhs()->value())};
    }
    return std::nullopt;
}

// One local rewrite step at a node whose children are already simplified.
// Returns nullptr when no rule applies.
ExprPtr rewrite(const ExprPtr& e) {
    const Expr& node = *e;

    if (all_children_constant(node)) {
        if (auto v = fold(node); v && finite(*v)) return Expr::constant(*v);
    }

    switch (node.kind()) {
        case ExprKind::Negate:
            if (node.child()->kind() == ExprKind::Negate) {
                return node.child()->child();
            }
            break;
        case ExprKind::Add:
            if (node.rhs()->is_constant_value(0.0)) return node.lhs();
            if (node.lhs()->is_constant_value(0.0)) return node.rhs();
            if (node.rhs()->is_constant()) {
                if (auto v = affine_view(node.lhs())) {
                    ComplexValue c = cadd(v->c, node.rhs()->value());
                    if (finite(c)) return affine_tail(v->x, c);
                }
            }
            if (node.lhs()->is_constant()) {
                if (auto v = affine_view(node.rhs())) {
                    ComplexValue c = cadd(v->c, node.lhs()->value());
                    if (finite(c)) return affine_tail(v->x, c);
                }
            }
            break;
        case ExprKind::Subtract:
            if (node.rhs()->is_constant_value(0.0)) return node.lhs();
            if (node.lhs()->is_constant_value(0.0)) return Expr::negate(node.rhs());
            if (structurally_equal(node.lhs(), node.rhs())) return Expr::constant(0.0);
            if (node.rhs()->is_constant()) {
                if (auto v = affine_view(node.lhs())) {
                    ComplexValue c = csub(v->c, node.rhs()->value());
                    if (finite(c)) return affine_tail(v->x, c);
                }
            }
            break;
        case ExprKind::Multiply:
            if (node.rhs()->is_constant_value(1.0)) return node.lhs();
            if (node.lhs()->is_constant_value(1.0)) return node.rhs();
            if (node.rhs()->is_constant_value(0.0) || node.lhs()->is_constant_value(0.0)) {
                return Expr::constant(0.0);
            }
            break;
        case ExprKind::Divide:
            if (node.rhs()->is_constant_value(1.0)) return node.lhs();
            // (c1*x)/c2 -> (c1/c2)*x
            if (node.rhs()->is_constant() && !node.rhs()->value().is_zero() &&
                node.lhs()->kind() == ExprKind::Multiply) {
                const ExprPtr& ml = node.lhs()->lhs();
                const ExprPtr& mr = node.lhs()->rhs();
                const ComplexValue& d = node.rhs()->value();
                if (ml->is_constant()) {
                    ComplexValue c = cdiv(ml->value(), d);
                    if (finite(c)) return Expr::multiply(Expr::constant(c), mr);
                }
                if (mr->is_constant()) {
                    ComplexValue c = cdiv(mr->value(), d);
                    if (finite(c)) return Expr::multiply(ml, Expr::constant(c));
                }
            }
            break;
        case ExprKind::Power:
            if (node.rhs()->is_constant_value(1.0)) return node.lhs();
            break;
        default:
            break;
    }
    return nullptr;
}

ExprPtr simplify_node(const ExprPtr& e) {
    if (e->kind() == ExprKind::Constant || e->kind() == ExprKind::Variable) {
        return e;
    }
    ExprPtr a = e->lhs() ? simplify_node(e->lhs()) : nullptr;
    ExprPtr b = e->rhs() ? simplify_node(e->rhs()) : nullptr;

    ExprPtr cur = e;
    if (a != e->lhs() || b != e->rhs()) {
        switch (e->kind()) {
            case ExprKind::Negate: cur = Expr::negate(a); break;
            case ExprKind::Add: cur = Expr::add(a, b); break;
            case ExprKind::Subtract: cur = Expr::subtract(a, b); break;
            case ExprKind::Multiply: cur = Expr::multiply(a, b); break;
            case ExprKind::Divide: cur = Expr::divide(a, b); break;
            case ExprKind::Power: cur = Expr::power(a, b); break;
            case ExprKind::Log: cur = Expr::log(a); break;
            case ExprKind::LogBase: cur = Expr::log_base(e->log_base_value(), a); break;
            case ExprKind::Exp: cur = Expr::exp(a); break;
            case ExprKind::Sqrt: cur = Expr::sqrt(a); break;
            default: break;
        }
    }
    // Local fixed point: a rewrite may expose another rule at this node.
    while (ExprPtr next = rewrite(cur)) {
        cur = next;
        if (cur->kind() == ExprKind::Constant || cur->kind() == ExprKind::Variable) {
            break;
        }
    }
    return cur;
}

}  // namespace

ExprPtr simplify(const ExprPtr& f) {
    if (!f) return f;
    ExprPtr cur = f;
    // Each pass strictly shrinks or folds; iterate until stable.
    for (int i = 0; i < 64; ++i) {
        ExprPtr next = simplify_node(cur);
        if (structurally_equal(next, cur)) return next;
        cur = next;
    }
    return cur;
}

}  // namespace zetac
