#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracsum/bernoulli.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/special.hpp"

namespace fracsum::special {
namespace {

struct ZetaParts {
    Complex value;
    Complex deriv;  // d/ds, only filled when requested
};

Complex ipow(Complex z, int k) {
    Complex result = 1.0;
    Complex base = z;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    while (e != 0) {
        if ((e & 1U) != 0) {
            result *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return k < 0 ? 1.0 / result : result;
}

void check_arguments(Complex s, Complex x, const char* fn) {
    if (s == Complex(1.0, 0.0)) {
        throw PoleError(s, std::string(fn) + ": pole at s = 1");
    }
    if (is_nonpositive_integer(x)) {
        throw DomainError(std::string(fn) + ": x = " + format_complex(x) +
                          " is a nonpositive integer");
    }
}

// zeta(-k, x) for k >= 0: the Euler-Maclaurin series terminates, so N = 0 is
// exact and valid for every x (it is -B_{k+1}(x)/(k+1)).
Complex zeta_nonpositive_integer(int k, Complex x) {
    const double s = -static_cast<double>(k);
    Complex acc = ipow(x, k + 1) / (s - 1.0) + 0.5 * ipow(x, k);
    double rising = s;  // (s)_{2j-1}
    double fact = 2.0;  // (2j)!
    for (int j = 1; 2 * j <= k + 1; ++j) {
        if (j > 1) {
            rising *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
            fact *= (2.0 * j - 1.0) * (2.0 * j);
        }
        if (rising == 0.0) {
            break;
        }
        acc += bernoulli(2 * j) / fact * rising * ipow(x, k + 1 - 2 * j);
    }
    return acc;
}

ZetaParts euler_maclaurin(Complex s, Complex x, const EmConfig& cfg, bool want_deriv) {
    int N = cfg.shift_N;
    int m = cfg.bernoulli_terms_m;
    const int to_positive = x.real() > 0.0 ? 0 : static_cast<int>(std::floor(-x.real())) + 1;
    const bool adaptive = cfg.adaptive && s.real() < 0.0;
    if (adaptive) {
        const double target = std::max(6.0, 0.5 * std::abs(s));
        N = std::max(0, static_cast<int>(std::ceil(target - x.real())));
        m = BernoulliTable::kMaxIndex / 2;
    } else {
        N += to_positive;
    }

    ZetaParts out{0.0, 0.0};
    for (int nu = 0; nu < N; ++nu) {
        const Complex base = x + static_cast<double>(nu);
        const Complex term = cpow(base, -s);
        out.value += term;
        if (want_deriv) {
            out.deriv -= principal_log(base) * term;
        }
    }

    const Complex w = x + static_cast<double>(N);
    const Complex log_w = principal_log(w);
    const Complex w_pow = std::exp(-s * log_w);  // w^{-s}
    const Complex sm1 = s - 1.0;
    out.value += w * w_pow / sm1 + 0.5 * w_pow;
    if (want_deriv) {
        out.deriv += w * w_pow * (-log_w / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * log_w * w_pow;
    }

    // Bernoulli corrections B_{2j}/(2j)! (s)_{2j-1} w^{1-s-2j}
    Complex rising = s;
    Complex rising_d = 1.0;
    double fact = 2.0;
    const Complex inv_w2 = 1.0 / (w * w);
    Complex w_term = w_pow / w;  // w^{-s-1}
    double previous = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= m; ++j) {
        if (j > 1) {
            for (int t : {2 * j - 3, 2 * j - 2}) {
                const Complex factor = s + static_cast<double>(t);
                rising_d = rising_d * factor + rising;
                rising *= factor;
            }
            fact *= (2.0 * j - 1.0) * (2.0 * j);
            w_term *= inv_w2;
        }
        const double c = bernoulli(2 * j) / fact;
        if (adaptive) {
            // asymptotic series: stop at the smallest term
            const double size =
                std::abs(c * w_term) * (std::abs(rising) + (want_deriv ? std::abs(rising_d) : 0.0));
            const double scale = std::abs(out.value) + (want_deriv ? std::abs(out.deriv) : 0.0);
            if (size > previous || size <= 1e-18 * scale) {
                break;
            }
            previous = size;
        }
        out.value += c * rising * w_term;
        if (want_deriv) {
            out.deriv += c * (rising_d - rising * log_w) * w_term;
        }
    }
    return out;
}

}  // namespace

void EmConfig::validate() const {
    if (shift_N < 10) {
        throw ContractError("EmConfig: shift_N must be >= 10");
    }
    if (bernoulli_terms_m < 1 || 2 * bernoulli_terms_m > BernoulliTable::kMaxIndex) {
        throw ContractError("EmConfig: need 1 <= bernoulli_terms_m and 2m <= 60");
    }
}

Complex hurwitz_zeta(Complex s, Complex x, const EmConfig& cfg) {
    check_arguments(s, x, "hurwitz_zeta");
    cfg.validate();
    if (is_nonpositive_integer(s) && s.real() >= -58.0) {
        return zeta_nonpositive_integer(static_cast<int>(-std::round(s.real())), x);
    }
    return euler_maclaurin(s, x, cfg, false).value;
}

Complex hurwitz_zeta_sderiv(int order, Complex s, Complex x, const EmConfig& cfg) {
    check_arguments(s, x, "hurwitz_zeta_sderiv");
    cfg.validate();
    switch (order) {
        case 1:
            return euler_maclaurin(s, x, cfg, true).deriv;
        case 2: {
            constexpr double h = 1e-3;
            auto central = [&](double step) {
                return (euler_maclaurin(s + step, x, cfg, true).deriv -
                        euler_maclaurin(s - step, x, cfg, true).deriv) /
                       (2.0 * step);
            };
            const Complex coarse = central(h);
            const Complex fine = central(h / 2.0);
            return (4.0 * fine - coarse) / 3.0;
        }
        default:
            throw UnsupportedError("hurwitz_zeta_sderiv: order " + std::to_string(order) +
                                   " not supported (1 or 2)");
    }
}

Complex riemann_zeta(Complex s, const EmConfig& cfg) { return hurwitz_zeta(s, 1.0, cfg); }

double hurwitz_x_derivative_check(Complex s, Complex x, const EmConfig& cfg) {
    constexpr double h = 1e-3;
    auto central = [&](double step) {
        return (hurwitz_zeta(s - 1.0, x + step, cfg) - hurwitz_zeta(s - 1.0, x - step, cfg)) /
               (2.0 * step);
    };
    const Complex d = (4.0 * central(h / 2.0) - central(h)) / 3.0;
    return std::abs(d + (s - 1.0) * hurwitz_zeta(s, x, cfg));
}

Degree sigma_of_s(Complex s) {
    if (s == Complex(1.0, 0.0)) {
        throw DomainError("sigma_of_s: s = 1 is the pole of zeta");
    }
    if (s.real() > 1.0) {
        return Degree::neg_infinity();
    }
    return Degree(1 + static_cast<int>(std::floor(-s.real())));
}

double zeta_prime_minus1() {
    static const double value = hurwitz_zeta_sderiv(1, -1.0, 1.0).real();
    return value;
}

double glaisher_A() { return std::exp(1.0 / 12.0 - zeta_prime_minus1()); }

}  // namespace fracsum::special
