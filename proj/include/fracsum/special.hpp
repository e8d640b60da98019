#pragma once

#include "fracsum/complex.hpp"
#include "fracsum/degree.hpp"

// Special-function backend: log-Gamma, digamma, Hurwitz and Riemann zeta and
// their s-derivatives. Nothing here depends on the summation engine, so the
// engine can be checked against these closed forms.
namespace fracsum::special {

/// Euler-Maclaurin parameters for the Hurwitz zeta routines.
///
/// The Dirichlet block runs over nu = 0..shift_N-1, followed by the integral
/// and half terms and `bernoulli_terms_m` Bernoulli corrections. When Re(s) < 0
/// the power sum grows like (N+x)^(1-Re s) and cancels against the integral
/// term; `adaptive` then shrinks the block to the smallest shift with
/// Re(x+N) >= max(6, |s|/2) and sums Bernoulli corrections up to B_60,
/// stopping at the smallest term of the asymptotic series.
struct EmConfig {
    int shift_N = 24;
    int bernoulli_terms_m = 8;
    bool adaptive = true;

    void validate() const;
};

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286061;
/// First Stieltjes constant, standard (negative) sign.
inline constexpr double stieltjes_gamma1 = -0.0728158454836767248606;
inline constexpr double catalan_G = 0.91596559417721901505;
inline constexpr double zeta3 = 1.2020569031595942854;
}  // namespace constants

/// zeta'(-1), computed from the Euler-Maclaurin derivative on first use.
double zeta_prime_minus1();
/// exp(1/12 - zeta'(-1)).
double glaisher_A();

/// Principal-branch log Gamma, continuous on C minus (-inf, 0]; on the
/// negative axis the value is the limit from above.
Complex ln_gamma(Complex z);

/// Gamma(z) = exp(ln_gamma(z)).
Complex gamma(Complex z);

Complex digamma(Complex z);

/// Hurwitz zeta sum_{nu>=0} (nu+x)^{-s}, continued in s. Powers use the
/// principal branch; Re(x) <= 0 is reached by the recurrence
/// zeta(s,x) = zeta(s,x+1) + x^{-s}.
Complex hurwitz_zeta(Complex s, Complex x, const EmConfig& cfg = {});

/// d^order/ds^order zeta(s, x) for order 1 (analytic, term by term) or 2
/// (central difference of order 1 with one Richardson step).
Complex hurwitz_zeta_sderiv(int order, Complex s, Complex x, const EmConfig& cfg = {});

Complex riemann_zeta(Complex s, const EmConfig& cfg = {});

/// |d/dx zeta(s-1, x) + (s-1) zeta(s, x)| with a central difference in x.
double hurwitz_x_derivative_check(Complex s, Complex x, const EmConfig& cfg = {});

/// Degree of the approximating polynomials of x -> zeta(s, x):
/// -infinity for Re(s) > 1, otherwise 1 + floor(Re(-s)).
Degree sigma_of_s(Complex s);

}  // namespace fracsum::special
