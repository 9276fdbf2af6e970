#pragma once

#include "zetac/expr.hpp"

namespace zetac {

/// Constant folding plus identity rules (x+0, x*1, x*0, x-x, x/1, x^1,
/// double negation, affine/scale constant peeling), applied to a fixed
/// point. The result is pointwise equal to the input at every valid n.
/// Subtrees that cannot be folded without an evaluation error or overflow
/// are left intact.
ExprPtr simplify(const ExprPtr& f);

}  // namespace zetac
