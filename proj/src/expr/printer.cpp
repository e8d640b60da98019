#include <cmath>

#include "fracsum/expr.hpp"

namespace fracsum::expr {
namespace {

// Binding strength; children weaker than their slot are parenthesized.
int precedence(const Node& n) {
    switch (n.kind) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Negate:
            return 3;
        case NodeKind::Pow:
            return 4;
        case NodeKind::Literal:
            // only pure real or pure imaginary nonnegative literals are atoms
            return (n.value.real() == 0.0 || n.value.imag() == 0.0) && !std::signbit(n.value.real()) &&
                           !std::signbit(n.value.imag())
                       ? 5
                       : 0;
        default:
            return 5;
    }
}

std::string literal(Complex v) {
    if (v.imag() == 0.0 && !std::signbit(v.imag())) {
        return format_double(v.real());
    }
    if (v.real() == 0.0 && !std::signbit(v.real())) {
        return format_double(v.imag()) + "i";
    }
    return format_complex(v);
}

void emit(const Ast& n, std::string& out);

void emit_child(const Ast& child, int min_prec, std::string& out) {
    if (precedence(*child) < min_prec) {
        out += '(';
        emit(child, out);
        out += ')';
    } else {
        emit(child, out);
    }
}

void emit(const Ast& n, std::string& out) {
    const auto& c = n->children;
    switch (n->kind) {
        case NodeKind::Variable:
            out += 'v';
            return;
        case NodeKind::Literal:
            out += literal(n->value);
            return;
        case NodeKind::Negate:
            out += '-';
            emit_child(c[0], 3, out);
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
            emit_child(c[0], 1, out);
            out += n->kind == NodeKind::Add ? " + " : " - ";
            emit_child(c[1], 2, out);
            return;
        case NodeKind::Mul:
        case NodeKind::Div:
            emit_child(c[0], 2, out);
            out += n->kind == NodeKind::Mul ? " * " : " / ";
            emit_child(c[1], 3, out);
            return;
        case NodeKind::Pow:
            emit_child(c[0], 5, out);
            out += '^';
            emit_child(c[1], 3, out);
            return;
        case NodeKind::Call:
            out += function_name(n->fn);
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) {
                    out += ", ";
                }
                emit(c[i], out);
            }
            out += ')';
            return;
    }
}

std::string_view kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Variable: return "var";
        case NodeKind::Literal: return "lit";
        case NodeKind::Negate: return "neg";
        case NodeKind::Add: return "add";
        case NodeKind::Sub: return "sub";
        case NodeKind::Mul: return "mul";
        case NodeKind::Div: return "div";
        case NodeKind::Pow: return "pow";
        case NodeKind::Call: return "call";
    }
    return "?";
}

void dump(const Ast& n, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += kind_name(n->kind);
    if (n->kind == NodeKind::Literal) {
        out += ' ' + format_complex(n->value);
    } else if (n->kind == NodeKind::Call) {
        out += ' ';
        out += function_name(n->fn);
    }
    out += " @" + std::to_string(n->span.offset) + ".." +
           std::to_string(n->span.offset + n->span.length) + '\n';
    for (const Ast& c : n->children) {
        dump(c, depth + 1, out);
    }
}

}  // namespace

std::string print(const Ast& ast) {
    std::string out;
    emit(ast, out);
    return out;
}

std::string dump_tree(const Ast& ast) {
    std::string out;
    dump(ast, 0, out);
    return out;
}

bool structurally_equal(const Ast& a, const Ast& b) {
    if (a->kind != b->kind || a->children.size() != b->children.size()) {
        return false;
    }
    if (a->kind == NodeKind::Literal && a->value != b->value) {
        return false;
    }
    if (a->kind == NodeKind::Call && a->fn != b->fn) {
        return false;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!structurally_equal(a->children[i], b->children[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace fracsum::expr
