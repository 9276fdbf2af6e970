#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zetac/eval.hpp"
#include "zetac/expr.hpp"

namespace zetac {

struct SourceSpan {
    std::size_t start = 0;  // 0-based, inclusive
    std::size_t end = 0;    // exclusive

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind {
    UnexpectedCharacter,
    UnexpectedToken,
    UnbalancedParenthesis,
    UnknownFunction,
    MalformedNumber,
    EmptyInput,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
        : std::runtime_error(message), kind_(kind), span_(span) {}
    ParseErrorKind kind() const { return kind_; }
    SourceSpan span() const { return span_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
};

/// Parses the complexity-expression surface language:
///
///   expr    := term (("+"|"-") term)*
///   term    := unary (("*"|"/") unary)*
///   unary   := "-" unary | power
///   power   := atom ("^" unary)?            -- right-associative
///   atom    := NUMBER | "i" | "e" | "pi" | "n"
///            | FUNC "(" expr ")" | "(" expr ")"
///   FUNC    := "log" | "log2" | "log10" | "ln" | "exp" | "sqrt"
///
/// There is no implicit multiplication ("2n" is an error; write "2*n").
/// "ln" is always the natural logarithm; bare "log" maps per
/// settings.log_base_for_bare_log (natural by default). Keywords are
/// case-sensitive and "n" is the only variable.
///
/// Throws ParseError with the leftmost error's kind and source span.
ExprPtr parse(std::string_view input, const EvalSettings& settings = {});

}  // namespace zetac
