#pragma once

#include <cstdint>
#include <memory>

#include "zetac/complex_value.hpp"

namespace zetac {

enum class ExprKind {
    Constant,
    Variable,  // the single cardinality symbol n
    Negate,
    Add,
    Subtract,
    Multiply,
    Divide,
    Power,
    Log,      // natural logarithm
    LogBase,  // logarithm with an explicit positive real base != 1
    Exp,
    Sqrt,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node for complexity expressions in one variable n with
/// complex constants. Nodes are shared freely; all operations on them are
/// pure, so concurrent use needs no synchronization.
class Expr {
public:
    static ExprPtr constant(ComplexValue v);
    static ExprPtr constant(double re) { return constant(ComplexValue{re, 0.0}); }
    static ExprPtr imaginary_unit() { return constant(ComplexValue::imaginary_unit()); }
    static ExprPtr variable();
    static ExprPtr negate(ExprPtr a);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr subtract(ExprPtr a, ExprPtr b);
    static ExprPtr multiply(ExprPtr a, ExprPtr b);
    static ExprPtr divide(ExprPtr a, ExprPtr b);
    static ExprPtr power(ExprPtr base, ExprPtr exponent);
    static ExprPtr log(ExprPtr a);
    static ExprPtr log_base(double base, ExprPtr a);  // base > 0, base != 1
    static ExprPtr exp(ExprPtr a);
    static ExprPtr sqrt(ExprPtr a);

    ExprKind kind() const { return kind_; }

    const ComplexValue& value() const { return value_; }  // Constant only
    double log_base_value() const { return log_base_; }   // LogBase only

    // child() for unary nodes; lhs()/rhs() for binary nodes.
    const ExprPtr& child() const { return a_; }
    const ExprPtr& lhs() const { return a_; }
    const ExprPtr& rhs() const { return b_; }

    bool is_constant() const { return kind_ == ExprKind::Constant; }
    bool is_constant_value(double re, double im = 0.0) const {
        return kind_ == ExprKind::Constant && value_ == ComplexValue{re, im};
    }

private:
    Expr(ExprKind kind, ComplexValue value, double log_base, ExprPtr a, ExprPtr b)
        : kind_(kind), value_(value), log_base_(log_base),
          a_(std::move(a)), b_(std::move(b)) {}

    static ExprPtr make(ExprKind kind, ComplexValue value, double log_base,
                        ExprPtr a, ExprPtr b);

    ExprKind kind_;
    ComplexValue value_;
    double log_base_ = 0.0;
    ExprPtr a_;
    ExprPtr b_;
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// True if any constant in the tree has a nonzero imaginary part.
bool contains_imaginary_constant(const ExprPtr& e);

std::size_t node_count(const ExprPtr& e);

}  // namespace zetac
