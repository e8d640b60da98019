#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "fracsum/errors.hpp"
#include "fracsum/expr.hpp"
#include "fracsum/special.hpp"
#include "support.hpp"

using namespace fracsum;
using namespace fracsum::expr;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t error_column(const std::string& text) {
    try {
        parse(text);
    } catch (const SyntaxError& e) {
        return e.column();
    }
    return 0;
}

// Trees restricted to what the parser can produce: literals are nonnegative
// and either real or imaginary.
class TreeGen {
public:
    explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

    Ast tree(int depth) {
        auto n = std::make_shared<Node>();
        const int pick = depth == 0 ? pick_int(0, 1) : pick_int(0, 8);
        switch (pick) {
            case 0:
                n->kind = NodeKind::Variable;
                break;
            case 1: {
                n->kind = NodeKind::Literal;
                const double v = pick_int(0, 3) == 0 ? pick_int(0, 9) : pick_int(0, 999) / 8.0;
                n->value = pick_int(0, 4) == 0 ? Complex(0.0, v) : Complex(v, 0.0);
                break;
            }
            case 2:
                n->kind = NodeKind::Negate;
                n->children = {tree(depth - 1)};
                break;
            case 3:
            case 4:
            case 5:
            case 6:
            case 7: {
                static constexpr NodeKind kBinary[] = {NodeKind::Add, NodeKind::Sub, NodeKind::Mul,
                                                       NodeKind::Div, NodeKind::Pow};
                n->kind = kBinary[pick - 3];
                n->children = {tree(depth - 1), tree(depth - 1)};
                break;
            }
            default:
                n->kind = NodeKind::Call;
                n->fn = static_cast<Function>(pick_int(0, 8));
                for (int i = 0; i < function_arity(n->fn); ++i) {
                    n->children.push_back(tree(depth - 1));
                }
                break;
        }
        return n;
    }

private:
    int pick_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("parse tree golden file") {
    const std::string golden = read_file(FRACSUM_TEST_DATA "/golden/parse_tree_v_pow_ln.txt");
    REQUIRE(!golden.empty());
    CHECK(dump_tree(parse("v^(0.5+0i) * ln(v)")) == golden);
}

TEST_CASE("precedence and associativity") {
    CHECK(print(parse("1 - 2 - 3")) == "1 - 2 - 3");
    CHECK(print(parse("1 - (2 - 3)")) == "1 - (2 - 3)");
    CHECK(print(parse("2^3^2")) == "2^3^2");
    CHECK(print(parse("(2^3)^2")) == "(2^3)^2");
    CHECK(print(parse("-v^2")) == "-v^2");
    CHECK(print(parse("(-v)^2")) == "(-v)^2");
    CHECK(print(parse("v/(2*v)")) == "v / (2 * v)");
    CHECK(print(parse("zeta(2,v+1)")) == "zeta(2, v + 1)");
    CHECK_NEAR(eval(parse("2^3^2"), 0.0), 512.0, 1e-12);
    CHECK_NEAR(eval(parse("-2^2"), 0.0), -4.0, 0.0);
    CHECK_NEAR(eval(parse("8/4/2"), 0.0), 1.0, 0.0);
}

TEST_CASE("round trip of random trees") {
    TreeGen gen(42);
    for (int i = 0; i < 500; ++i) {
        const Ast t = gen.tree(1 + i % 6);
        const std::string text = print(t);
        INFO(text);
        const Ast back = parse(text);
        CHECK(structurally_equal(t, back));
        CHECK(print(back) == text);
    }
}

TEST_CASE("literals") {
    CHECK_NEAR(eval(parse("2i"), 0.0), Complex(0.0, 2.0), 0.0);
    CHECK_NEAR(eval(parse("1+i"), 0.0), Complex(1.0, 1.0), 0.0);
    CHECK_NEAR(eval(parse("1.5e-3"), 0.0), 1.5e-3, 0.0);
    CHECK_NEAR(eval(parse(".25"), 0.0), 0.25, 0.0);
    CHECK_NEAR(eval(parse("v"), Complex(2.0, 3.0)), Complex(2.0, 3.0), 0.0);
}

TEST_CASE("functions") {
    const Complex z(0.7, 0.4);
    CHECK_NEAR(eval(parse("ln(v)"), z), principal_log(z), 1e-15);
    CHECK_NEAR(eval(parse("exp(v)"), z), std::exp(z), 1e-15);
    CHECK_NEAR(eval(parse("sqrt(v)"), z), std::sqrt(z), 1e-15);
    CHECK_NEAR(eval(parse("sin(v) + cos(v)"), z), std::sin(z) + std::cos(z), 1e-15);
    CHECK_NEAR(eval(parse("gamma(v)"), z), special::gamma(z), 1e-14);
    CHECK_NEAR(eval(parse("lgamma(v)"), z), special::ln_gamma(z), 1e-14);
    CHECK_NEAR(eval(parse("digamma(v)"), z), special::digamma(z), 1e-14);
    CHECK_NEAR(eval(parse("zeta(2, v)"), 1.0), special::riemann_zeta(2.0), 1e-14);
    CHECK(function_arity(Function::Zeta) == 2);
    CHECK(function_name(Function::LnGamma) == "lgamma");
}

TEST_CASE("syntax errors carry columns and expectations") {
    CHECK(error_column("1/(v") == 5);
    CHECK(error_column("v +* 2") == 4);
    CHECK(error_column("foo(v)") == 1);
    CHECK(error_column("ln v") == 4);
    CHECK(error_column("zeta(2)") == 7);
    CHECK(error_column("v)") == 2);
    CHECK(error_column("2 $ 3") == 3);
    CHECK(error_column("") == 1);
    try {
        parse("1/(v");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(std::find(e.expected().begin(), e.expected().end(), ")") != e.expected().end());
    }
    try {
        parse("foo(v)");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(std::find(e.expected().begin(), e.expected().end(), "lgamma") != e.expected().end());
    }
    CHECK_THROWS_AS(parse(std::string(kMaxInput + 1, '1')), SyntaxError);
}

TEST_CASE("evaluation errors point at the failing node") {
    const Ast a = parse("1 + 1/(v - 3)");
    try {
        eval(a, 3.0);
        FAIL("no error");
    } catch (const EvalError& e) {
        CHECK(e.is_pole());
        CHECK(e.span().offset == 4);
        CHECK(e.span().length == 8);
    }
    CHECK_THROWS_AS(eval(parse("ln(v)"), 0.0), EvalError);
    CHECK_THROWS_AS(eval(parse("v^-1"), 0.0), EvalError);
    CHECK_THROWS_AS(eval(parse("gamma(v)"), -2.0), EvalError);
    CHECK_THROWS_AS(eval(parse("exp(v)"), 1000.0), EvalError);
}

TEST_CASE("sigma suggestion") {
    auto kind = [](const char* text) { return suggest_sigma(parse(text)).kind; };
    auto sigma = [](const char* text) { return suggest_sigma(parse(text)).sigma; };
    CHECK(kind("ln(v)") == SigmaSuggestion::Kind::Finite);
    CHECK(sigma("ln(v)") == 0);
    CHECK(sigma("v^2") == 2);
    CHECK(sigma("v^2.5") == 2);
    CHECK(sigma("v * lgamma(v + 1)") == 2);
    CHECK(kind("1/v") == SigmaSuggestion::Kind::NegInfinity);
    CHECK(kind("0.5^v") == SigmaSuggestion::Kind::NegInfinity);
    CHECK(kind("sin(v)") == SigmaSuggestion::Kind::Unknown);
    CHECK(kind("2^v") == SigmaSuggestion::Kind::Unknown);
    CHECK(!suggest_sigma(parse("v^2")).note.empty());
}

TEST_CASE("expressions as summands") {
    const Summand f = to_summand(parse("1/v"), Degree::neg_infinity(), "1/v");
    CHECK_NEAR(frac_sum_right(f, 1.0, -0.5).value, -2.0 * std::log(2.0), 1e-10);
}
