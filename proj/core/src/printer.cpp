#include "zetac/printer.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "zetac/simplify.hpp"

namespace zetac {

namespace {

// Grammar tiers: 1 sum, 2 term, 3 unary, 4 power, 5 atom.
constexpr int kSum = 1;
constexpr int kTerm = 2;
constexpr int kUnary = 3;
constexpr int kPower = 4;
constexpr int kAtom = 5;

std::string format_real(double v) {
    if (v == 0.0) return "0";  // canonicalize away the sign of zero
    if (v == std::numbers::e) return "e";
    if (v == std::numbers::pi) return "pi";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Rendered {
    std::string text;
    int prec;
};

Rendered render(const ExprPtr& e);

std::string child_text(const ExprPtr& e, int min_prec) {
    Rendered r = render(e);
    if (r.prec < min_prec) return "(" + r.text + ")";
    return r.text;
}

Rendered render_constant(const ComplexValue& v) {
    if (v.im == 0.0) {
        std::string s = format_real(v.re);
        return {s, s[0] == '-' ? kUnary : kAtom};
    }
    std::string im_text;
    int im_prec;
    if (v.im == 1.0) {
        im_text = "i";
        im_prec = kAtom;
    } else if (v.im == -1.0) {
        im_text = "-i";
        im_prec = kUnary;
    } else {
        im_text = format_real(v.im) + "*i";
        im_prec = kTerm;
    }
    if (v.re == 0.0) return {im_text, im_prec};
    if (v.im < 0.0) {
        std::string mag = v.im == -1.0 ? "i" : format_real(-v.im) + "*i";
        return {format_real(v.re) + " - " + mag, kSum};
    }
    return {format_real(v.re) + " + " + im_text, kSum};
}

Rendered render(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Constant:
            return render_constant(e->value());
        case ExprKind::Variable:
            return {"n", kAtom};
        case ExprKind::Negate:
            return {"-" + child_text(e->child(), kUnary), kUnary};
        case ExprKind::Add:
            return {child_text(e->lhs(), kSum) + " + " + child_text(e->rhs(), kTerm), kSum};
        case ExprKind::Subtract:
            return {child_text(e->lhs(), kSum) + " - " + child_text(e->rhs(), kTerm), kSum};
        case ExprKind::Multiply:
            return {child_text(e->lhs(), kTerm) + "*" + child_text(e->rhs(), kUnary), kTerm};
        case ExprKind::Divide:
            return {child_text(e->lhs(), kTerm) + "/" + child_text(e->rhs(), kUnary), kTerm};
        case ExprKind::Power:
            return {child_text(e->lhs(), kAtom) + "^" + child_text(e->rhs(), kUnary), kPower};
        case ExprKind::Log:
            return {"log(" + render(e->child()).text + ")", kAtom};
        case ExprKind::LogBase: {
            const double b = e->log_base_value();
            if (b == 2.0) return {"log2(" + render(e->child()).text + ")", kAtom};
            if (b == 10.0) return {"log10(" + render(e->child()).text + ")", kAtom};
            // No surface syntax for other bases; emit the defining ratio.
            return {"log(" + render(e->child()).text + ")/log(" + format_real(b) + ")",
                    kTerm};
        }
        case ExprKind::Exp:
            return {"exp(" + render(e->child()).text + ")", kAtom};
        case ExprKind::Sqrt:
            return {"sqrt(" + render(e->child()).text + ")", kAtom};
    }
    return {"?", kAtom};
}

}  // namespace

std::string print_canonical(const ExprPtr& f) {
    return render(simplify(f)).text;
}

}  // namespace zetac
