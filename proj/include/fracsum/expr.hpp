#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"

// Summand expressions in the variable v.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number ['i'] | 'i' | 'v' | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Powers use the principal branch: a^b = exp(b Log a).
namespace fracsum::expr {

inline constexpr std::size_t kMaxInput = 4096;

/// Half-open byte range [offset, offset + length) of the source text.
struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;
};

enum class NodeKind { Variable, Literal, Negate, Add, Sub, Mul, Div, Pow, Call };

enum class Function { Ln, Exp, Sqrt, Sin, Cos, Gamma, LnGamma, Digamma, Zeta };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    Complex value;               ///< Literal only
    Function fn = Function::Ln;  ///< Call only
    std::vector<Ast> children;
    Span span;
};

/// Name as written in source, e.g. "lgamma".
std::string_view function_name(Function f);
/// Number of arguments a call takes.
int function_arity(Function f);

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t offset, std::vector<std::string> expected);

    std::size_t offset() const noexcept { return offset_; }
    /// 1-based column of the offending byte.
    std::size_t column() const noexcept { return offset_ + 1; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Pole or domain failure while evaluating, tied to the subexpression that raised it.
class EvalError : public DomainError {
public:
    EvalError(const std::string& message, Span span, bool pole);

    Span span() const noexcept { return span_; }
    bool is_pole() const noexcept { return pole_; }

private:
    Span span_;
    bool pole_;
};

Ast parse(std::string_view text);

/// Source text that parses back to a structurally equal tree.
std::string print(const Ast& ast);

/// Indented tree, one node per line with its span.
std::string dump_tree(const Ast& ast);

/// Same shape, kinds, functions and literal values; spans are ignored.
bool structurally_equal(const Ast& a, const Ast& b);

/// Evaluates at v = nu. Errors carry the span of the failing node.
Complex eval(const Ast& ast, Complex nu);

struct SigmaSuggestion {
    enum class Kind { Finite, NegInfinity, Unknown };
    Kind kind = Kind::Unknown;
    int sigma = 0;  ///< Finite only
    std::string note;

    /// Only valid unless kind is Unknown.
    Degree degree() const { return kind == Kind::Finite ? Degree(sigma) : Degree::neg_infinity(); }
};

/// Growth heuristic from samples at v = 64, 128, 256, 512.
SigmaSuggestion suggest_sigma(const Ast& ast);

/// The expression as an engine summand with the given degree.
Summand to_summand(const Ast& ast, Degree sigma, std::string label);

}  // namespace fracsum::expr
