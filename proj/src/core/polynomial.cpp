#include "fracsum/polynomial.hpp"

#include <algorithm>

#include "fracsum/bernoulli.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int k, Complex c) {
    std::vector<Complex> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
    Polynomial p = constant(1.0);
    for (Complex r : roots) {
        p = p * Polynomial({-r, 1.0});
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) {
        coeffs_.pop_back();
    }
}

Degree Polynomial::degree() const {
    if (coeffs_.empty()) {
        return Degree::neg_infinity();
    }
    return Degree(static_cast<int>(coeffs_.size()) - 1);
}

Complex Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), 0.0);
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), 0.0);
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(Complex shift) const {
    // Horner in the polynomial ring: p(z + s) = (...(c_n (z+s) + c_{n-1})(z+s) ...)
    const Polynomial lin({shift, 1.0});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + constant(*it);
    }
    return acc;
}

Polynomial poly_derivative(const Polynomial& p, int order) {
    if (order < 0) {
        throw ContractError("poly_derivative: order must be >= 0");
    }
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (int r = 0; r < order && !c.empty(); ++r) {
        for (std::size_t k = 1; k < c.size(); ++k) {
            c[k - 1] = c[k] * static_cast<double>(k);
        }
        c.pop_back();
    }
    return Polynomial(std::move(c));
}

Polynomial faulhaber_polynomial(int k) {
    if (k < 0) {
        throw ContractError("faulhaber_polynomial: k must be >= 0");
    }
    if (k + 1 > BernoulliTable::kMaxIndex) {
        throw UnsupportedError("faulhaber_polynomial: degree too large for the Bernoulli table");
    }
    // P_k(x) = 1/(k+1) sum_{j=0}^{k} C(k+1, j) (-1)^j B_j x^{k+1-j}
    std::vector<Complex> c(static_cast<std::size_t>(k) + 2, 0.0);
    double binom = 1.0;  // C(k+1, j)
    for (int j = 0; j <= k; ++j) {
        const double bj = (j % 2 == 1 ? -1.0 : 1.0) * bernoulli(j);
        c[static_cast<std::size_t>(k + 1 - j)] = binom * bj / static_cast<double>(k + 1);
        binom = binom * static_cast<double>(k + 1 - j) / static_cast<double>(j + 1);
    }
    return Polynomial(std::move(c));
}

Polynomial summation_polynomial(const Polynomial& p) {
    Polynomial out;
    const auto c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != Complex(0.0, 0.0)) {
            out += faulhaber_polynomial(static_cast<int>(k)) * c[k];
        }
    }
    return out;
}

Complex poly_frac_sum(const Polynomial& p, Complex a, Complex b) {
    const Polynomial big = summation_polynomial(p);
    return big(b) - big(a - 1.0);
}

Complex binomial_falling(Complex z, int m) {
    if (m < 0) {
        throw ContractError("binomial_falling: m must be >= 0");
    }
    Complex acc = 1.0;
    for (int j = 0; j < m; ++j) {
        acc *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
    }
    return acc;
}

}  // namespace fracsum
