#include <cmath>

#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"

namespace fracsum::identities {
namespace {

bool off_poles(Complex u) { return !is_nonpositive_integer(u); }

bool is_minus_one(Complex a) { return std::abs(a + 1.0) < 1e-14; }

bool is_nonnegative_integer(Complex a) { return is_integer(a) && a.real() >= 0.0; }

// Degree of nu^c and the leading exponent of its approximation error.
Degree power_degree(Complex c) {
    return is_minus_one(c) ? Degree::neg_infinity() : special::sigma_of_s(-c);
}

Complex error_family(Degree sigma, Complex c) {
    return static_cast<double>(sigma.value_or_minus_one() + 1) - c;
}

std::string complex_label(Complex z) {
    return z.imag() == 0.0 ? format_double(z.real()) : "(" + format_complex(z) + ")";
}

}  // namespace

Summand power_summand(Complex a) {
    Summand s;
    s.sigma = power_degree(a);
    s.error_families = {error_family(s.sigma, a)};
    s.label = "v^" + complex_label(a);
    s.eval = [a](Complex nu) {
        if (nu == Complex(0.0, 0.0) && a.real() <= 0.0 && a != Complex(0.0, 0.0)) {
            throw PoleError(nu, "0 to a power with nonpositive real part");
        }
        return cpow(nu, a);
    };
    if (a.real() <= 0.0 && !is_nonnegative_integer(a)) {
        s.domain_ok = off_poles;
    }
    return s;
}

Summand log_summand() {
    Summand s;
    s.sigma = Degree(0);
    s.label = "ln(v)";
    s.eval = [](Complex nu) {
        if (nu == Complex(0.0, 0.0)) {
            throw PoleError(nu, "ln(0)");
        }
        return principal_log(nu);
    };
    s.domain_ok = off_poles;
    return s;
}

Summand reciprocal_summand() {
    Summand s;
    s.sigma = Degree::neg_infinity();
    s.label = "1/v";
    s.eval = [](Complex nu) {
        if (nu == Complex(0.0, 0.0)) {
            throw PoleError(nu, "1/0");
        }
        return 1.0 / nu;
    };
    s.domain_ok = off_poles;
    return s;
}

Summand geometric_summand(Complex q) {
    if (q == Complex(0.0, 0.0)) {
        throw DomainError("geometric_summand: q = 0");
    }
    Summand s;
    s.sigma = Degree::neg_infinity();
    s.tail = TailKind::Geometric;
    s.label = complex_label(q) + "^v";
    s.eval = [q](Complex nu) { return cpow(q, nu); };
    return s;
}

Summand binomial_summand(Complex c, Complex x) {
    if (is_nonpositive_integer(c) && c != Complex(0.0, 0.0)) {
        throw DomainError("binomial_summand: c is a negative integer");
    }
    if (x == Complex(0.0, 0.0)) {
        throw DomainError("binomial_summand: x = 0");
    }
    Summand s;
    s.sigma = Degree::neg_infinity();
    s.tail = TailKind::Geometric;
    s.label = "C(" + complex_label(c) + ",v) " + complex_label(x) + "^v";
    s.eval = [c, x](Complex nu) {
        const Complex coeff = generalized_binomial(c, nu);
        return coeff == Complex(0.0, 0.0) ? coeff : coeff * cpow(x, nu);
    };
    return s;
}

Summand power_log_summand(Complex a, int order) {
    if (order < 1 || order > 2) {
        throw UnsupportedError("power_log_summand: order must be 1 or 2");
    }
    Summand s;
    s.sigma = power_degree(a);
    s.error_families = {error_family(s.sigma, a)};
    // for integer a >= -1 the derivative past sigma is free of logarithms
    if (!(is_integer(a) && a.real() >= -1.0)) {
        s.error_log_power = order;
    }
    s.label = "v^" + complex_label(a) + " ln(v)" + (order == 2 ? "^2" : "");
    s.eval = [a, order](Complex nu) {
        if (nu == Complex(0.0, 0.0)) {
            throw PoleError(nu, "ln(0)");
        }
        const Complex l = principal_log(nu);
        return cpow(nu, a) * (order == 1 ? l : l * l);
    };
    s.domain_ok = off_poles;
    return s;
}

Summand polynomial_summand(const Polynomial& p) {
    Summand s;
    s.sigma = p.degree();
    s.label = "polynomial";
    s.eval = [p](Complex nu) { return p(nu); };
    return s;
}

Summand up_summand(Complex a) {
    // up(nu, a) ~ const + nu^{a+1}/(a+1) + ..., so the degree covers both parts.
    Summand s;
    const Degree growth = power_degree(a + 1.0);
    s.sigma = growth.is_neg_infinity() || growth.value() < 0 ? Degree(0) : growth;
    if (is_minus_one(a)) {
        s.sigma = Degree(0);
    }
    s.error_families = {is_minus_one(a) ? Complex(1.0) : error_family(s.sigma, a + 1.0)};
    s.label = "up(v, " + complex_label(a) + ")";
    s.eval = [a](Complex nu) { return up(nu, a); };
    s.domain_ok = [](Complex u) { return !is_nonpositive_integer(u + 1.0); };
    return s;
}

}  // namespace fracsum::identities
