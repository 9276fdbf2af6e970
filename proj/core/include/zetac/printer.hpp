#pragma once

#include <string>

#include "zetac/expr.hpp"

namespace zetac {

/// Renders simplify(f) in the parser's surface grammar with minimal
/// parentheses. Reparsing the output yields simplify(f) back, structurally,
/// whenever every constant in the simplified tree is directly renderable
/// (a nonnegative real literal or the unit i); other constants reparse to
/// equivalent trees that refold under simplify.
std::string print_canonical(const ExprPtr& f);

}  // namespace zetac
