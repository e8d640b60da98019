#include <cmath>
#include <numbers>

#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"

namespace fracsum::identities {
namespace {

using special::hurwitz_zeta;
using special::hurwitz_zeta_sderiv;
using special::ln_gamma;
using special::riemann_zeta;

bool is_minus_one(Complex a) { return std::abs(a + 1.0) < 1e-14; }

bool is_negative_integer(Complex z) { return is_integer(z) && std::round(z.real()) <= -1.0; }

bool is_nonnegative_integer(Complex z) { return is_integer(z) && std::round(z.real()) >= 0.0; }

// sin(pi z) with the real part reduced mod 2 first.
Complex sin_pi(Complex z) {
    const double r = std::fmod(z.real(), 2.0);
    return std::sin(std::numbers::pi * Complex(r, z.imag()));
}

// 1/Gamma(z) = factor * exp(exponent); reflection keeps ln_gamma on the right half-plane.
struct InverseGamma {
    Complex factor;
    Complex exponent;
};

InverseGamma inverse_gamma(Complex z) {
    if (z.real() >= 0.5) {
        return {1.0, -ln_gamma(z)};
    }
    return {sin_pi(z) / std::numbers::pi, ln_gamma(1.0 - z)};
}

}  // namespace

Complex up(Complex x, Complex a) {
    if (is_negative_integer(x)) {
        // negative-length convention: sum_1^x = -sum_{x+1}^{0}
        if (a.real() <= 0.0 && a != Complex(0.0, 0.0)) {
            throw PoleError(x, "up: the sum reaches 0^a with Re(a) <= 0");
        }
        Complex acc = 0.0;
        for (long nu = std::lround(x.real()) + 1; nu < 0; ++nu) {
            acc += cpow(static_cast<double>(nu), a);
        }
        return a == Complex(0.0, 0.0) ? x : -acc;
    }
    if (is_minus_one(a)) {
        return special::constants::euler_gamma + special::digamma(x + 1.0);
    }
    return riemann_zeta(-a) - hurwitz_zeta(-a, x + 1.0);
}

Complex up_infinity(Complex a) {
    if (!(a.real() < -1.0)) {
        throw DomainError("up_infinity: needs Re(a) < -1");
    }
    return riemann_zeta(-a);
}

Complex minus_half_power(Complex a) {
    if (is_minus_one(a)) {
        throw DomainError("minus_half_power: a = -1 hits the pole of zeta");
    }
    return (2.0 - cpow(2.0, -a)) * riemann_zeta(-a);
}

Complex power_log_sum(Complex a, int order, Complex x) {
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    return sign * (hurwitz_zeta_sderiv(order, -a, 1.0) - hurwitz_zeta_sderiv(order, -a, x + 1.0));
}

Complex sum_v_log_v_minus_half(Complex a) {
    const Complex p = cpow(2.0, -a);
    return p * riemann_zeta(-a) * std::numbers::ln2 -
           (2.0 - p) * hurwitz_zeta_sderiv(1, -a, 1.0);
}

Complex geometric_closed(Complex q, Complex x) {
    if (q == Complex(1.0, 0.0)) {
        throw DomainError("geometric_closed: q = 1");
    }
    return (cpow(q, x + 1.0) - 1.0) / (q - 1.0);
}

Complex binomial_closed(Complex c, Complex x) {
    if (std::abs(std::abs(x) - 1.0) < 1e-12) {
        throw UnsupportedError("binomial_closed: |x| = 1 is not covered");
    }
    return cpow(1.0 + x, c);
}

Complex generalized_binomial(Complex c, Complex nu) {
    if (is_negative_integer(c)) {
        throw DomainError("generalized_binomial: c is a negative integer");
    }
    const Complex rest = c - nu;
    if (is_negative_integer(nu) || is_negative_integer(rest)) {
        return 0.0;
    }
    if (is_nonnegative_integer(nu) && nu.real() <= 10000.0) {
        return binomial_falling(c, static_cast<int>(std::lround(nu.real())));
    }
    if (is_nonnegative_integer(rest) && rest.real() <= 10000.0) {
        return binomial_falling(c, static_cast<int>(std::lround(rest.real())));
    }
    const InverseGamma p = inverse_gamma(nu + 1.0);
    const InverseGamma q = inverse_gamma(rest + 1.0);
    return p.factor * q.factor * std::exp(ln_gamma(c + 1.0) + p.exponent + q.exponent);
}

Complex double_power_sum(Complex a, Complex x) { return up(x, a) * (x + 1.0) - up(x, a + 1.0); }

Complex iterated_power_sum(int fold, Complex a, Complex x) {
    if (fold < 1) {
        throw ContractError("iterated_power_sum: fold must be >= 1");
    }
    const int n = fold - 1;
    std::vector<Complex> roots;
    for (int k = 1; k <= n; ++k) {
        roots.emplace_back(-static_cast<double>(k));
    }
    const Polynomial base = Polynomial::from_roots(roots);
    Complex acc = 0.0;
    double nu_fact = 1.0;
    for (int nu = 0; nu <= n; ++nu) {
        if (nu > 0) {
            nu_fact *= nu;
        }
        const double sign = nu % 2 == 0 ? 1.0 : -1.0;
        acc += up(x, a + static_cast<double>(nu)) / nu_fact * sign * poly_derivative(base, nu)(x);
    }
    double n_fact = 1.0;
    for (int k = 2; k <= n; ++k) {
        n_fact *= k;
    }
    return acc / n_fact;
}

Complex iterated_power_sum_expanded(int fold, Complex a, Complex x) {
    switch (fold) {
        case 1:
            return up(x, a);
        case 2:
            return (x + 1.0) * up(x, a) - up(x, a + 1.0);
        case 3:
            return 0.5 * ((x + 1.0) * (x + 2.0) * up(x, a) - (2.0 * x + 3.0) * up(x, a + 1.0) +
                          up(x, a + 2.0));
        default:
            throw UnsupportedError("iterated_power_sum_expanded: fold must be 1, 2 or 3");
    }
}

Complex nested_integer_sum(int fold, Complex a, long x) {
    if (fold < 1 || x < 0) {
        throw ContractError("nested_integer_sum: need fold >= 1 and x >= 0");
    }
    std::vector<Complex> level(static_cast<std::size_t>(x));
    for (long k = 1; k <= x; ++k) {
        level[k - 1] = cpow(static_cast<double>(k), a);
    }
    for (int f = 0; f < fold; ++f) {
        Complex run = 0.0;
        for (Complex& v : level) {
            run += v;
            v = run;
        }
    }
    return x == 0 ? Complex(0.0) : level.back();
}

}  // namespace fracsum::identities
