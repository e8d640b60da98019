#include <cmath>
#include <string>

#include "fracsum/engine.hpp"
#include "fracsum/identities.hpp"
#include "support.hpp"

using namespace fracsum;
namespace id = fracsum::identities;

namespace {

constexpr int kPoints = 100;
constexpr double kTol = 1e-7;

Complex bound(id::GridRng& rng) { return rng.complex_in_box(-0.9, 3.0, -1.5, 1.5); }

Summand combination(const Summand& f, const Summand& g, Complex alpha, Complex beta) {
    Summand h;
    h.eval = [f, g, alpha, beta](Complex nu) { return alpha * f(nu) + beta * g(nu); };
    h.sigma = std::max(f.sigma, g.sigma);
    h.domain_ok = [f, g](Complex u) { return f.accepts(u) && g.accepts(u); };
    h.error_families = f.error_families;
    h.error_families.insert(h.error_families.end(), g.error_families.begin(), g.error_families.end());
    h.label = "linear combination";
    return h;
}

Summand shifted(const Summand& f, Complex s) {
    Summand h = f;
    h.eval = [f, s](Complex nu) { return f(nu - s); };
    h.domain_ok = [f, s](Complex u) { return f.accepts(u - s); };
    return h;
}

}  // namespace

TEST_CASE("property: linearity") {
    id::GridRng rng(42, "property.linearity");
    const Summand f = id::power_summand(0.5);
    const Summand g = id::log_summand();
    for (int i = 0; i < kPoints; ++i) {
        const Complex alpha = rng.complex_in_box(-2, 2, -2, 2);
        const Complex beta = rng.complex_in_box(-2, 2, -2, 2);
        const Complex x = bound(rng);
        const Complex lhs = frac_sum_right(combination(f, g, alpha, beta), 1.0, x).value;
        const Complex rhs = alpha * frac_sum_right(f, 1.0, x).value + beta * frac_sum_right(g, 1.0, x).value;
        CHECK_REL(lhs, rhs, kTol);
    }
}

TEST_CASE("property: continued summation") {
    id::GridRng rng(42, "property.continued");
    const Summand f = id::power_summand(Complex(0.7, 0.3));
    for (int i = 0; i < kPoints; ++i) {
        const Complex a = rng.complex_in_box(0.2, 2.0, -1.0, 1.0);
        const Complex b = bound(rng);
        const Complex c = bound(rng);
        const Complex whole = frac_sum_right(f, a, c).value;
        const Complex split = frac_sum_right(f, a, b).value + frac_sum_right(f, b + 1.0, c).value;
        CHECK_REL(split, whole, kTol);
    }
}

TEST_CASE("property: index shift") {
    id::GridRng rng(42, "property.shift");
    const Summand f = id::power_summand(1.5);
    for (int i = 0; i < kPoints; ++i) {
        const Complex s = rng.complex_in_box(-0.4, 2.0, -1.0, 1.0);
        const Complex x = bound(rng);
        const Complex lhs = frac_sum_right(f, 1.0, x).value;
        const Complex rhs = frac_sum_right(shifted(f, s), 1.0 + s, x + s).value;
        CHECK_REL(rhs, lhs, kTol);
    }
}

TEST_CASE("property: difference of the sum recovers the summand") {
    id::GridRng rng(42, "property.delta");
    const Summand f = id::power_log_summand(Complex(0.5, 0.5), 1);
    for (int i = 0; i < kPoints; ++i) {
        const Complex x = rng.complex_in_box(0.2, 4.0, -2.0, 2.0);
        CHECK_REL(delta_of_sum(f, 1.0, x), f(x), kTol);
    }
}

TEST_CASE("property: mirror law") {
    id::GridRng rng(42, "property.mirror");
    const Summand f = id::power_summand(Complex(0.6, -0.4));
    for (int i = 0; i < kPoints; ++i) {
        const Complex a = rng.complex_in_box(0.5, 2.0, -1.0, 1.0);
        const Complex b = bound(rng);
        const Complex direct = frac_sum_left_direct(f, a, b).value;
        const Complex mirror = frac_sum_right(mirrored(f), -b, -a).value;
        CHECK_REL(direct, mirror, kTol);
    }
}

TEST_CASE("property: up satisfies the difference law") {
    id::GridRng rng(42, "property.up");
    for (int i = 0; i < kPoints; ++i) {
        const Complex a = rng.complex_in_box(-3.0, 3.0, -2.0, 2.0);
        const Complex x = rng.complex_in_box(0.1, 6.0, -3.0, 3.0);
        CHECK_REL(id::up(x, a) - id::up(x - 1.0, a), cpow(x, a), 1e-9);
    }
}
