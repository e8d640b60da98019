#include <cmath>
#include <vector>

#include "fracsum/bernoulli.hpp"
#include "fracsum/complex.hpp"
#include "fracsum/degree.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/polynomial.hpp"
#include "support.hpp"

using namespace fracsum;

TEST_CASE("principal log lies on the upper side of the cut") {
    CHECK_NEAR(principal_log(-1.0), Complex(0.0, kPi), 1e-15);
    CHECK_NEAR(principal_log(Complex(-1.0, -0.0)), Complex(0.0, kPi), 1e-15);
    CHECK_NEAR(principal_log(Complex(0.0, 2.0)), Complex(std::log(2.0), kPi / 2), 1e-15);
    CHECK_THROWS_AS(principal_log(0.0), DomainError);
}

TEST_CASE("cpow follows the principal branch") {
    CHECK_NEAR(cpow(-1.0, 0.5), Complex(0.0, 1.0), 1e-15);
    CHECK_NEAR(cpow(Complex(-8.0, -0.0), 1.0 / 3.0), Complex(1.0, std::sqrt(3.0)), 1e-14);
    CHECK_NEAR(cpow(2.0, 10.0), 1024.0, 1e-12);
    CHECK_NEAR(cpow(0.0, 2.0), 0.0, 0.0);
    CHECK_THROWS_AS(cpow(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(cpow(0.0, Complex(0.0, 1.0)), DomainError);
    CHECK_NEAR(cpow(0.0, -1.0, ZeroPower::Zero), 0.0, 0.0);
}

TEST_CASE("integer predicates") {
    CHECK(is_integer(3.0));
    CHECK(!is_integer(Complex(3.0, 1e-3)));
    CHECK(is_integer(2.9999999, 1e-6));
    CHECK(is_nonpositive_integer(0.0));
    CHECK(is_nonpositive_integer(-4.0));
    CHECK(!is_nonpositive_integer(1.0));
    CHECK(!is_nonpositive_integer(-0.5));
}

TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, -1.3862943611198906, 1e-300, 6.02214076e23, 1.0 / 3.0}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_complex(Complex(1.5, -2.0)) == "1.5-2i");
}

TEST_CASE("Degree arithmetic and ordering") {
    const Degree ninf = Degree::neg_infinity();
    CHECK(ninf.is_neg_infinity());
    CHECK(Degree(-3) == ninf);
    CHECK(ninf < Degree(0));
    CHECK(Degree(2) + 1 == Degree(3));
    CHECK((ninf + 5).is_neg_infinity());
    CHECK(ninf.value_or_minus_one() == -1);
    CHECK(Degree(4).to_string() == "4");
    CHECK(ninf.to_string() == "neginf");
}

TEST_CASE("Bernoulli numbers") {
    const BernoulliTable& t = bernoulli_table();
    CHECK(t.max_index() == BernoulliTable::kMaxIndex);
    CHECK(t[0] == 1.0);
    CHECK(t[1] == -0.5);
    CHECK(t[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(t[12] == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
    CHECK(t[20] == doctest::Approx(-174611.0 / 330.0).epsilon(1e-15));
    CHECK(t[60] == doctest::Approx(-2.139994925722533e34).epsilon(1e-14));
    for (int k = 3; k <= 59; k += 2) {
        CHECK(t[k] == 0.0);
    }

    SUBCASE("recurrence sum C(m+1,j) B_j = 0") {
        for (int m = 1; m <= 30; ++m) {
            double acc = 0.0;
            double scale = 0.0;
            double c = 1.0;
            for (int j = 0; j <= m; ++j) {
                acc += c * t[j];
                scale += std::abs(c * t[j]);
                c = c * (m + 1 - j) / (j + 1);
            }
            CHECK(std::abs(acc) <= 1e-14 * scale);
        }
    }

    CHECK_THROWS_AS(BernoulliTable::compute(-1), ContractError);
    CHECK_THROWS_AS(BernoulliTable::compute(61), ContractError);
}

TEST_CASE("Polynomial basics") {
    const Polynomial p{1.0, -3.0, 2.0};
    CHECK(p.degree() == Degree(2));
    CHECK_NEAR(p(2.0), 3.0, 0.0);
    CHECK(Polynomial{1.0, 0.0, 0.0}.degree() == Degree(0));
    CHECK(Polynomial().degree().is_neg_infinity());
    CHECK((p - p).is_zero());

    const std::vector<Complex> roots = {1.0, 0.5};
    CHECK(Polynomial::from_roots(roots) * 2.0 == p);
    CHECK_NEAR(p.shifted(1.0)(0.7), p(1.7), 1e-15);
    CHECK(poly_derivative(p, 1) == Polynomial({-3.0, 4.0}));
    CHECK(poly_derivative(p, 3).is_zero());
    CHECK_NEAR(p.coeff(7), 0.0, 0.0);
}

TEST_CASE("Faulhaber polynomials reproduce integer power sums") {
    for (int k = 0; k <= 10; ++k) {
        const Polynomial P = faulhaber_polynomial(k);
        CHECK(P.degree() == Degree(k + 1));
        CHECK_NEAR(P(0.0), 0.0, 0.0);
        double acc = 0.0;
        for (int n = 1; n <= 12; ++n) {
            acc += std::pow(n, k);
            CHECK_REL(P(static_cast<double>(n)), acc, 1e-13);
        }
    }
    // sum of nu over 1..-1/2 is -1/8
    CHECK_NEAR(poly_frac_sum(Polynomial::monomial(1), 1.0, -0.5), -0.125, 1e-15);
}

TEST_CASE("summation polynomial of a general polynomial") {
    const Polynomial p{Complex(1.0, 1.0), 0.0, 3.0};
    const Polynomial S = summation_polynomial(p);
    Complex acc = 0.0;
    for (int n = 1; n <= 6; ++n) {
        acc += p(static_cast<double>(n));
        CHECK_NEAR(S(static_cast<double>(n)), acc, 1e-12);
    }
    CHECK_NEAR(poly_frac_sum(p, 3.0, 5.0), p(3.0) + p(4.0) + p(5.0), 1e-12);
}

TEST_CASE("falling binomial") {
    CHECK_NEAR(binomial_falling(5.0, 2), 10.0, 1e-14);
    CHECK_NEAR(binomial_falling(0.5, 3), 0.0625, 1e-15);
    CHECK_NEAR(binomial_falling(Complex(0.0, 1.0), 0), 1.0, 0.0);
    CHECK_THROWS_AS(binomial_falling(1.0, -1), ContractError);
}
