#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "fracsum/complex.hpp"
#include "fracsum/degree.hpp"

namespace fracsum {

/// Dense complex polynomial, coeffs[k] multiplies z^k. Trailing zeros are
/// trimmed so the leading coefficient is nonzero; the zero polynomial has no
/// coefficients and degree -infinity.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial constant(Complex c) { return Polynomial({c}); }
    static Polynomial monomial(int k, Complex c = 1.0);
    /// prod_k (z - roots[k])
    static Polynomial from_roots(std::span<const Complex> roots);

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Complex> coeffs() const { return coeffs_; }
    /// Coefficient of z^k, zero beyond the degree.
    Complex coeff(int k) const;

    Complex operator()(Complex z) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(Complex c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
    friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// q(z) = p(z + shift)
    Polynomial shifted(Complex shift) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Complex> coeffs_;
};

/// Exact coefficient-wise derivative of the given order.
Polynomial poly_derivative(const Polynomial& p, int order);

/// P_k with P_k(n) = sum_{nu=1}^{n} nu^k for n in N and P_k(0) = 0.
Polynomial faulhaber_polynomial(int k);

/// The polynomial P with P(n) = sum_{nu=1}^{n} p(nu), P(0) = 0.
Polynomial summation_polynomial(const Polynomial& p);

/// Fractional sum of a polynomial from a to b: P(b) - P(a-1).
Complex poly_frac_sum(const Polynomial& p, Complex a, Complex b);

/// Generalized binomial coefficient C(z, m) = z(z-1)...(z-m+1)/m! for integer m >= 0.
Complex binomial_falling(Complex z, int m);

}  // namespace fracsum
