#include "zetac/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace zetac {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    SourceSpan span;
    double number = 0.0;
    std::string_view text;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (pos_ >= in_.size()) {
                out.push_back({Tok::End, {in_.size(), in_.size()}, 0.0, {}});
                return out;
            }
            const std::size_t start = pos_;
            const unsigned char c = in_[pos_];
            if (std::isdigit(c)) {
                out.push_back(lex_number());
                continue;
            }
            if (ident_start(c)) {
                while (pos_ < in_.size() && ident_char(in_[pos_])) ++pos_;
                out.push_back({Tok::Ident, {start, pos_}, 0.0, in_.substr(start, pos_ - start)});
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                default:
                    throw ParseError(ParseErrorKind::UnexpectedCharacter, {start, start + 1},
                                     "unexpected character '" + printable(c) + "'");
            }
            ++pos_;
            out.push_back({kind, {start, pos_}, 0.0, {}});
        }
    }

private:
    static std::string printable(unsigned char c) {
        if (std::isprint(c)) return std::string(1, static_cast<char>(c));
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\x%02x", c);
        return buf;
    }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) {
            ++pos_;
        }
    }

    Token lex_number() {
        const std::size_t start = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        if (pos_ < in_.size() && in_[pos_] == '.') {
            ++pos_;
            if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                throw ParseError(ParseErrorKind::MalformedNumber, {start, pos_},
                                 "expected digits after decimal point");
            }
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        }
        if (pos_ < in_.size() && (in_[pos_] == 'e' || in_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < in_.size() && (in_[pos_] == '+' || in_[pos_] == '-')) ++pos_;
            if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                throw ParseError(ParseErrorKind::MalformedNumber, {start, pos_},
                                 "malformed exponent in numeric literal");
            }
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
            (void)mark;
        }
        // "2n" and "1.5x" are rejected: multiplication must be explicit.
        if (pos_ < in_.size() && ident_char(in_[pos_])) {
            throw ParseError(ParseErrorKind::MalformedNumber, {start, pos_ + 1},
                             "numeric literal runs into '" +
                                 std::string(1, in_[pos_]) + "'; write an explicit '*'");
        }
        double value = 0.0;
        auto res = std::from_chars(in_.data() + start, in_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != in_.data() + pos_ || !std::isfinite(value)) {
            throw ParseError(ParseErrorKind::MalformedNumber, {start, pos_},
                             "numeric literal out of range");
        }
        return {Tok::Number, {start, pos_}, value, in_.substr(start, pos_ - start)};
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const EvalSettings& settings)
        : toks_(std::move(tokens)), settings_(settings) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        const Token& t = peek();
        if (t.kind == Tok::RParen) {
            throw ParseError(ParseErrorKind::UnbalancedParenthesis, t.span,
                             "')' without a matching '('");
        }
        if (t.kind != Tok::End) {
            throw ParseError(ParseErrorKind::UnexpectedToken, t.span,
                             "unexpected trailing input");
        }
        return e;
    }

private:
    static constexpr int kMaxDepth = 1000;

    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() { return toks_[idx_++]; }
    bool eat(Tok k) {
        if (peek().kind == k) {
            ++idx_;
            return true;
        }
        return false;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth) {
                throw ParseError(ParseErrorKind::UnexpectedToken, p_.peek().span,
                                 "expression nested too deeply");
            }
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    ExprPtr parse_expr() {
        DepthGuard guard(*this);
        ExprPtr e = parse_term();
        while (true) {
            if (eat(Tok::Plus)) {
                e = Expr::add(e, parse_term());
            } else if (eat(Tok::Minus)) {
                e = Expr::subtract(e, parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        DepthGuard guard(*this);
        ExprPtr e = parse_unary();
        while (true) {
            if (eat(Tok::Star)) {
                e = Expr::multiply(e, parse_unary());
            } else if (eat(Tok::Slash)) {
                e = Expr::divide(e, parse_unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        DepthGuard guard(*this);
        if (eat(Tok::Minus)) {
            return Expr::negate(parse_unary());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        DepthGuard guard(*this);
        ExprPtr base = parse_atom();
        if (eat(Tok::Caret)) {
            return Expr::power(base, parse_unary());  // right-associative
        }
        return base;
    }

    ExprPtr parse_atom() {
        DepthGuard guard(*this);
        const Token& t = advance();
        switch (t.kind) {
            case Tok::Number:
                return Expr::constant(t.number);
            case Tok::LParen: {
                ExprPtr e = parse_expr();
                expect_rparen(t.span);
                return e;
            }
            case Tok::Ident:
                return parse_ident(t);
            case Tok::RParen:
                throw ParseError(ParseErrorKind::UnbalancedParenthesis, t.span,
                                 "')' without a value before it");
            case Tok::End:
                throw ParseError(ParseErrorKind::UnexpectedToken, t.span,
                                 "expected a value, found end of input");
            default:
                throw ParseError(ParseErrorKind::UnexpectedToken, t.span,
                                 "expected a value");
        }
    }

    ExprPtr parse_ident(const Token& t) {
        const std::string_view name = t.text;
        if (name == "n") return Expr::variable();
        if (name == "i") return Expr::imaginary_unit();
        if (name == "e") return Expr::constant(std::numbers::e);
        if (name == "pi") return Expr::constant(std::numbers::pi);

        if (name == "log" || name == "log2" || name == "log10" || name == "ln" ||
            name == "exp" || name == "sqrt") {
            if (!eat(Tok::LParen)) {
                throw ParseError(ParseErrorKind::UnexpectedToken, peek().span,
                                 "expected '(' after '" + std::string(name) + "'");
            }
            ExprPtr arg = parse_expr();
            expect_rparen(t.span);
            if (name == "ln") return Expr::log(arg);
            if (name == "log") {
                const double base = settings_.log_base_for_bare_log;
                if (base == std::numbers::e) return Expr::log(arg);
                return Expr::log_base(base, arg);
            }
            if (name == "log2") return Expr::log_base(2.0, arg);
            if (name == "log10") return Expr::log_base(10.0, arg);
            if (name == "exp") return Expr::exp(arg);
            return Expr::sqrt(arg);
        }
        throw ParseError(ParseErrorKind::UnknownFunction, t.span,
                         "unknown name '" + std::string(name) +
                             "' (known: n, i, e, pi, log, log2, log10, ln, exp, sqrt)");
    }

    void expect_rparen(SourceSpan opener) {
        const Token& t = peek();
        if (t.kind == Tok::RParen) {
            ++idx_;
            return;
        }
        if (t.kind == Tok::End) {
            throw ParseError(ParseErrorKind::UnbalancedParenthesis, opener,
                             "unclosed '('");
        }
        throw ParseError(ParseErrorKind::UnexpectedToken, t.span,
                         "expected ')'");
    }

    std::vector<Token> toks_;
    const EvalSettings& settings_;
    std::size_t idx_ = 0;
    int depth_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view input, const EvalSettings& settings) {
    if (!(std::isfinite(settings.log_base_for_bare_log) &&
          settings.log_base_for_bare_log > 0.0 &&
          settings.log_base_for_bare_log != 1.0)) {
        throw std::invalid_argument("log_base_for_bare_log must be > 0 and != 1");
    }
    std::vector<Token> tokens = Lexer(input).run();
    if (tokens.size() == 1) {  // just End
        throw ParseError(ParseErrorKind::EmptyInput, {0, 0}, "empty input");
    }
    return Parser(std::move(tokens), settings).run();
}

}  // namespace zetac
