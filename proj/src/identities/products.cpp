#include <cmath>
#include <numbers>

#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"

namespace fracsum::identities {
namespace {

using special::hurwitz_zeta_sderiv;
using special::ln_gamma;
namespace constants = special::constants;

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// log(1 + w) without cancellation for small w.
Complex log1p_complex(Complex w) {
    const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
    const double im = std::atan2(w.imag(), 1.0 + w.real());
    return {re, im};
}

// sum_{k=1}^{count} k (-1)^{k+1} log(1 + scale x / k)
Complex alternating_log_sum(Complex x, double scale, long count) {
    Complex acc = 0.0;
    Complex comp = 0.0;
    for (long k = 1; k <= count; ++k) {
        const double kd = static_cast<double>(k);
        const Complex term = (k % 2 == 1 ? kd : -kd) * log1p_complex(scale * x / kd);
        const Complex y = term - comp;
        const Complex t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

Complex zeta_prime(double s, Complex x) { return hurwitz_zeta_sderiv(1, s, x); }

}  // namespace

Complex borwein_closed_log(Complex x) {
    return -kLn2 / 12.0 + 2.0 * x * (ln_gamma(x + 0.5) - ln_gamma(x + 1.0)) - x -
           2.0 * zeta_prime(-1.0, x + 0.5) + 2.0 * zeta_prime(-1.0, x + 1.0) -
           3.0 * special::zeta_prime_minus1();
}

Complex borwein_closed(Complex x) { return std::exp(borwein_closed_log(x)); }

Complex borwein_partial_product(Complex x, long n) {
    return std::exp(alternating_log_sum(x, 1.0, 2 * n + 1));
}

Complex borwein_even_partial_product(Complex x, long n) {
    return std::exp(alternating_log_sum(x, 2.0, 2 * n));
}

Extrapolation borwein_limit(Complex x, bool even_form) {
    std::vector<Sample> samples;
    for (long n = 128; n <= 8192; n *= 2) {
        const Complex v = even_form ? alternating_log_sum(x, 2.0, 2 * n)
                                    : alternating_log_sum(x, 1.0, 2 * n + 1);
        samples.push_back({n, v});
    }
    const Extrapolation e = richardson_extrapolate(samples, 4);
    const Complex value = std::exp(e.value);
    return {value, e.err * std::abs(value)};
}

FracSumResult borwein_fracsum(Complex x, const EngineConfig& cfg) {
    Summand f;
    f.sigma = Degree(0);
    f.label = "2v ln(1 + x/v)";
    f.eval = [x](Complex nu) {
        if (nu == Complex(0.0, 0.0)) {
            throw PoleError(nu, "x/v at v = 0");
        }
        return 2.0 * nu * log1p_complex(x / nu);
    };
    f.domain_ok = [](Complex u) { return !is_nonpositive_integer(u); };
    FracSumResult r = frac_sum_right(f, 1.0, -0.5, cfg);
    const Complex v = std::exp(-x - r.value);
    r.err_estimate *= std::abs(v);
    r.value = v;
    return r;
}

double gamma_product_log_lhs(long n) {
    if (n < 1) {
        throw ContractError("gamma_product_log_lhs: n must be >= 1");
    }
    const long double nd = n;
    long double acc = nd * (4.0L * nd + 1.0L) / 4.0L -
                      (0.125L + nd * (nd + 1.0L)) * std::log(nd) -
                      nd / 2.0L * std::log(2.0L * std::numbers::pi_v<long double>);
    for (long k = 1; k <= 2 * n; ++k) {
        const long double lg = std::lgamma(1.0L + static_cast<long double>(k) / 2.0L);
        acc += (k % 2 == 0 ? 1.0L : -1.0L) * static_cast<long double>(k) * lg;
    }
    return static_cast<double>(acc);
}

Complex gamma_product_limit(long n) { return std::exp(gamma_product_log_lhs(n)); }

Complex gamma_product_rhs() {
    return std::exp(kLn2 / 12.0 + 5.0 / 24.0 - 1.5 * special::zeta_prime_minus1() -
                    7.0 * constants::zeta3 / (16.0 * kPi * kPi));
}

Complex gamma_product_rhs_glaisher() {
    return std::pow(2.0 * std::numbers::e, 1.0 / 12.0) * std::pow(special::glaisher_A(), 1.5) *
           std::exp(-7.0 * constants::zeta3 / (16.0 * kPi * kPi));
}

Extrapolation gamma_product_extrapolated() {
    std::vector<Sample> samples;
    for (long n : {25L, 50L, 100L, 200L}) {
        samples.push_back({n, gamma_product_log_lhs(n)});
    }
    const Extrapolation e = richardson_extrapolate(samples, 3);
    const Complex value = std::exp(e.value);
    return {value, e.err * std::abs(value)};
}

Complex sum_v_log_factorial_minus_half() {
    return -kLn2 / 48.0 - std::log(kPi) / 16.0 - 0.75 * special::zeta_prime_minus1() +
           0.875 * zeta_prime(-2.0, 1.0);
}

Summand v_log_factorial_summand(Degree sigma) {
    Summand f;
    f.sigma = sigma;
    f.label = "v ln(v!)";
    f.error_families = {static_cast<double>(sigma.value_or_minus_one() - 1)};
    f.eval = [](Complex nu) { return nu * ln_gamma(nu + 1.0); };
    f.domain_ok = [](Complex u) { return !is_nonpositive_integer(u + 1.0); };
    return f;
}

Complex first_zeta_zero() {
    static const Complex zero = [] {
        Complex z(0.5, 14.1347);
        for (int it = 0; it < 20; ++it) {
            const Complex step = special::riemann_zeta(z) / hurwitz_zeta_sderiv(1, z, 1.0);
            z -= step;
            if (std::abs(step) < 1e-15) {
                break;
            }
        }
        return z;
    }();
    return zero;
}

MinusHalfRelation left_right_minus_half_relation(Complex z, const EngineConfig& cfg) {
    const FracSumResult right = frac_sum_right(power_summand(z), 1.0, -0.5, cfg);

    Summand g = power_summand(z);
    g.eval = [z](Complex nu) { return cpow(nu, z, ZeroPower::Zero); };
    g.domain_ok = {};
    g.label = "v^z (0^z = 0)";
    const FracSumResult left = frac_sum_left(g, 1.0, -0.5, cfg);

    MinusHalfRelation out;
    out.left = left.value;
    out.right = minus_half_power(z);
    out.right_engine = right.value;
    out.minus_one_pow = cpow(-1.0, z);
    out.raw_residual = std::abs(out.left + out.minus_one_pow * out.right);
    out.normalized_residual = std::abs(out.left / out.minus_one_pow + out.right);
    out.n_used = std::max(left.n_used, right.n_used);
    out.converged = left.converged && right.converged;
    return out;
}

Complex quarter_product_rhs() {
    const Complex ratio = ln_gamma(0.25) - ln_gamma(0.75);
    return std::exp(3.0 / 32.0 * ratio + zeta_prime(-2.0, 0.25) -
                    3.0 * constants::zeta3 / (128.0 * kPi * kPi) - constants::catalan_G / (4.0 * kPi));
}

FracSumResult quarter_product_lhs(const EngineConfig& cfg) {
    return frac_product(v_log_factorial_summand(Degree(4)), 0.25, -0.25, cfg);
}

Complex stieltjes_product_rhs(double gamma1) {
    const double g = constants::euler_gamma;
    const double lp = std::log(kPi);
    return std::exp(g * g / 4.0 + gamma1 / 2.0 - kPi * kPi / 48.0 + kLn2 * kLn2 / 2.0 - lp * lp / 8.0);
}

FracSumResult stieltjes_product_lhs(const EngineConfig& cfg) {
    Summand f;
    f.sigma = Degree(4);
    f.label = "ln(v) ln(v!)";
    f.error_families = {1.0};
    f.eval = [](Complex nu) {
        if (nu == Complex(0.0, 0.0)) {
            throw PoleError(nu, "ln(0)");
        }
        return principal_log(nu) * ln_gamma(nu + 1.0);
    };
    f.domain_ok = [](Complex u) { return !is_nonpositive_integer(u); };
    return frac_product(f, 1.0, -0.5, cfg);
}

}  // namespace fracsum::identities
