#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "fracsum/expr.hpp"
#include "fracsum/special.hpp"

namespace fracsum::expr {
namespace {

[[noreturn]] void raise(const Node& n, const std::string& what, bool pole) {
    throw EvalError(what + " (bytes " + std::to_string(n.span.offset) + ".." +
                        std::to_string(n.span.offset + n.span.length) + ")",
                    n.span, pole);
}

Complex apply(const Node& n, Complex x, Complex y) {
    switch (n.fn) {
        case Function::Ln:
            if (x == Complex(0.0, 0.0)) {
                raise(n, "ln(0)", true);
            }
            return principal_log(x);
        case Function::Exp:
            return std::exp(x);
        case Function::Sqrt:
            return std::sqrt(x);
        case Function::Sin:
            return std::sin(x);
        case Function::Cos:
            return std::cos(x);
        case Function::Gamma:
            return special::gamma(x);
        case Function::LnGamma:
            return special::ln_gamma(x);
        case Function::Digamma:
            return special::digamma(x);
        case Function::Zeta:
            return special::hurwitz_zeta(x, y);
    }
    return {};
}

Complex eval_node(const Node& n, Complex nu) {
    auto arg = [&](std::size_t i) { return eval_node(*n.children[i], nu); };
    Complex r;
    try {
        switch (n.kind) {
            case NodeKind::Variable:
                return nu;
            case NodeKind::Literal:
                return n.value;
            case NodeKind::Negate:
                return -arg(0);
            case NodeKind::Add:
                r = arg(0) + arg(1);
                break;
            case NodeKind::Sub:
                r = arg(0) - arg(1);
                break;
            case NodeKind::Mul:
                r = arg(0) * arg(1);
                break;
            case NodeKind::Div: {
                const Complex num = arg(0);
                const Complex den = arg(1);
                if (den == Complex(0.0, 0.0)) {
                    raise(n, "division by zero", true);
                }
                r = num / den;
                break;
            }
            case NodeKind::Pow: {
                const Complex base = arg(0);
                const Complex e = arg(1);
                if (base == Complex(0.0, 0.0) && e.real() <= 0.0) {
                    raise(n, "0 raised to a power with nonpositive real part", true);
                }
                r = cpow(base, e);
                break;
            }
            case NodeKind::Call: {
                const Complex x = arg(0);
                r = apply(n, x, n.children.size() > 1 ? arg(1) : Complex{});
                break;
            }
        }
    } catch (const EvalError&) {
        throw;
    } catch (const PoleError& e) {
        raise(n, e.what(), true);
    } catch (const Error& e) {
        raise(n, e.what(), false);
    }
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
        raise(n, "non-finite value", false);
    }
    return r;
}

}  // namespace

Complex eval(const Ast& ast, Complex nu) { return eval_node(*ast, nu); }

SigmaSuggestion suggest_sigma(const Ast& ast) {
    constexpr std::array<double, 4> kPoints = {64.0, 128.0, 256.0, 512.0};
    std::array<double, 4> logs{};
    SigmaSuggestion out;
    for (std::size_t i = 0; i < kPoints.size(); ++i) {
        double size = 0.0;
        try {
            size = std::abs(eval(ast, kPoints[i]));
        } catch (const Error& e) {
            out.note = std::string("evaluation failed: ") + e.what();
            return out;
        }
        if (size == 0.0) {
            logs[i] = -745.0;  // below the smallest subnormal
        } else {
            logs[i] = std::log(size);
        }
    }
    if (logs[3] <= -700.0) {
        out.kind = SigmaSuggestion::Kind::NegInfinity;
        out.note = "values vanish at v = 512";
        return out;
    }
    // local growth exponents between consecutive doublings
    std::array<double, 3> slope{};
    for (std::size_t i = 0; i < slope.size(); ++i) {
        slope[i] = (logs[i + 1] - logs[i]) / std::log(2.0);
    }
    const double spread = std::max({slope[0], slope[1], slope[2]}) -
                          std::min({slope[0], slope[1], slope[2]});
    // least-squares slope of log|f| against log v
    double fit = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < kPoints.size(); ++i) {
        const double dx = std::log(kPoints[i]) - std::log(128.0 * std::sqrt(2.0));
        fit += dx * logs[i];
        norm += dx * dx;
    }
    fit /= norm;
    char buf[160];
    std::snprintf(buf, sizeof buf, "growth exponent %.3f, local exponents %.3f %.3f %.3f", fit,
                  slope[0], slope[1], slope[2]);
    out.note = buf;
    if (slope[2] < -0.25 && slope[1] < -0.25) {
        out.kind = SigmaSuggestion::Kind::NegInfinity;
        out.note += "; decays, confidence " + std::string(spread < 0.2 ? "high" : "moderate");
        return out;
    }
    if (spread > 0.5) {
        out.note += "; growth is not polynomial";
        return out;
    }
    out.kind = SigmaSuggestion::Kind::Finite;
    out.sigma = std::max(0, static_cast<int>(std::floor(slope[2] + 0.05)));
    out.note += "; confidence " + std::string(spread < 0.1 ? "high" : "moderate");
    return out;
}

Summand to_summand(const Ast& ast, Degree sigma, std::string label) {
    Summand s;
    s.sigma = sigma;
    s.label = std::move(label);
    s.eval = [ast](Complex nu) { return eval(ast, nu); };
    return s;
}

}  // namespace fracsum::expr
