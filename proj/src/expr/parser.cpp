#include <cctype>
#include <charconv>
#include <cmath>

#include "fracsum/expr.hpp"

namespace fracsum::expr {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    Span span;
    Complex value;     // Number
    std::string text;  // Ident
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Number:
            return "number";
        case Tok::Ident:
            return "'" + t.text + "'";
        case Tok::End:
            return "end of input";
        default:
            return "'" + std::string(1, "+-*/^(),"[static_cast<int>(t.kind) - 2]) + "'";
    }
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ == src_.size()) {
            return {Tok::End, {start, 0}, {}, {}};
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number(start);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && ident_char(src_[pos_])) {
                ++pos_;
            }
            return {Tok::Ident, {start, pos_ - start}, {}, std::string(src_.substr(start, pos_ - start))};
        }
        static constexpr std::string_view kSymbols = "+-*/^(),";
        const auto at = kSymbols.find(c);
        if (at == std::string_view::npos) {
            throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start,
                              {"number", "v", "function", "(", "-"});
        }
        ++pos_;
        return {static_cast<Tok>(at + 2), {start, 1}, {}, {}};
    }

private:
    Token number(std::size_t start) {
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            return pos_ - from;
        };
        std::size_t count = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) {
            throw SyntaxError("malformed number", start, {"digit"});
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
                ++look;
            }
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                pos_ = look;
                digits();
            }
        }
        const std::string_view body = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc{} || end != body.data() + body.size() || !std::isfinite(value)) {
            throw SyntaxError("number out of range", start, {"number"});
        }
        Complex v(value, 0.0);
        if (pos_ < src_.size() && src_[pos_] == 'i' &&
            (pos_ + 1 == src_.size() || !ident_char(src_[pos_ + 1]))) {
            ++pos_;
            v = Complex(0.0, value);
        }
        return {Tok::Number, {start, pos_ - start}, v, {}};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

const std::vector<std::string> kOperand = {"number", "v", "function", "(", "-"};

struct FunctionEntry {
    std::string_view name;
    Function fn;
    int arity;
};

constexpr FunctionEntry kFunctions[] = {
    {"ln", Function::Ln, 1},          {"exp", Function::Exp, 1},
    {"sqrt", Function::Sqrt, 1},      {"sin", Function::Sin, 1},
    {"cos", Function::Cos, 1},        {"gamma", Function::Gamma, 1},
    {"lgamma", Function::LnGamma, 1}, {"digamma", Function::Digamma, 1},
    {"zeta", Function::Zeta, 2},
};

std::shared_ptr<Node> make(NodeKind kind, Span span, std::vector<Ast> children = {}) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->span = span;
    n->children = std::move(children);
    return n;
}

Span cover(Span a, Span b) { return {a.offset, b.offset + b.length - a.offset}; }

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    Ast parse_all() {
        Ast e = expr();
        if (cur_.kind != Tok::End) {
            fail({"+", "-", "*", "/", "^", "end of input"});
        }
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string msg = "unexpected " + describe(cur_) + ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            msg += (i ? ", " : "") + ("'" + expected[i] + "'");
        }
        throw SyntaxError(msg, cur_.span.offset, std::move(expected));
    }

    void expect(Tok kind, std::vector<std::string> expected) {
        if (cur_.kind != kind) {
            fail(std::move(expected));
        }
        advance();
    }

    Ast expr() {
        Ast lhs = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const NodeKind k = cur_.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
            advance();
            Ast rhs = term();
            lhs = make(k, cover(lhs->span, rhs->span), {lhs, rhs});
        }
        return lhs;
    }

    Ast term() {
        Ast lhs = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const NodeKind k = cur_.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div;
            advance();
            Ast rhs = unary();
            lhs = make(k, cover(lhs->span, rhs->span), {lhs, rhs});
        }
        return lhs;
    }

    Ast unary() {
        if (cur_.kind == Tok::Minus) {
            const Span at = cur_.span;
            advance();
            Ast operand = unary();
            return make(NodeKind::Negate, cover(at, operand->span), {operand});
        }
        return power();
    }

    Ast power() {
        Ast base = primary();
        if (cur_.kind == Tok::Caret) {
            advance();
            Ast exponent = unary();
            return make(NodeKind::Pow, cover(base->span, exponent->span), {base, exponent});
        }
        return base;
    }

    Ast primary() {
        const Token t = cur_;
        switch (t.kind) {
            case Tok::Number: {
                advance();
                auto n = make(NodeKind::Literal, t.span);
                n->value = t.value;
                return n;
            }
            case Tok::LParen: {
                advance();
                Ast inner = expr();
                if (cur_.kind != Tok::RParen) {
                    fail({"+", "-", "*", "/", "^", ")"});
                }
                advance();
                return inner;
            }
            case Tok::Ident:
                return identifier(t);
            default:
                fail(kOperand);
        }
    }

    Ast identifier(const Token& t) {
        if (t.text == "v") {
            advance();
            return make(NodeKind::Variable, t.span);
        }
        if (t.text == "i") {
            advance();
            auto unit = make(NodeKind::Literal, t.span);
            unit->value = Complex(0.0, 1.0);
            return unit;
        }
        const FunctionEntry* entry = nullptr;
        for (const FunctionEntry& f : kFunctions) {
            if (f.name == t.text) {
                entry = &f;
            }
        }
        if (!entry) {
            throw SyntaxError("unknown name '" + t.text + "'", t.span.offset,
                              {"v", "i", "ln", "exp", "sqrt", "sin", "cos", "gamma", "lgamma", "digamma",
                               "zeta"});
        }
        advance();
        expect(Tok::LParen, {"("});
        std::vector<Ast> args{expr()};
        while (static_cast<int>(args.size()) < entry->arity) {
            expect(Tok::Comma, {",", "+", "-", "*", "/", "^"});
            args.push_back(expr());
        }
        if (cur_.kind != Tok::RParen) {
            fail({"+", "-", "*", "/", "^", ")"});
        }
        const Span close = cur_.span;
        advance();
        auto n = make(NodeKind::Call, cover(t.span, close), std::move(args));
        n->fn = entry->fn;
        return n;
    }

    Lexer lex_;
    Token cur_{};
};

}  // namespace

SyntaxError::SyntaxError(const std::string& message, std::size_t offset,
                         std::vector<std::string> expected)
    : Error("syntax error at column " + std::to_string(offset + 1) + ": " + message),
      offset_(offset),
      expected_(std::move(expected)) {}

EvalError::EvalError(const std::string& message, Span span, bool pole)
    : DomainError(message), span_(span), pole_(pole) {}

std::string_view function_name(Function f) {
    for (const FunctionEntry& e : kFunctions) {
        if (e.fn == f) {
            return e.name;
        }
    }
    return "?";
}

int function_arity(Function f) {
    for (const FunctionEntry& e : kFunctions) {
        if (e.fn == f) {
            return e.arity;
        }
    }
    return 0;
}

Ast parse(std::string_view text) {
    if (text.size() > kMaxInput) {
        throw SyntaxError("input longer than " + std::to_string(kMaxInput) + " bytes", kMaxInput,
                          {"end of input"});
    }
    return Parser(text).parse_all();
}

}  // namespace fracsum::expr
