#include <cmath>
#include <vector>

#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"
#include "oracles/reference_values.hpp"
#include "support.hpp"

using namespace fracsum;
namespace id = fracsum::identities;

namespace {

Summand cubic() {
    return id::polynomial_summand(Polynomial{2.0, -1.0, 0.0, 0.5});
}

}  // namespace

TEST_CASE("integer lengths are summed classically") {
    const FracSumResult r = frac_sum_right(id::power_summand(1.0), 1.0, 4.0);
    CHECK(r.method == "classical");
    CHECK(r.converged);
    CHECK_NEAR(r.value, 10.0, 0.0);
    CHECK_NEAR(frac_sum_right(id::reciprocal_summand(), 1.0, 0.0).value, 0.0, 0.0);
}

TEST_CASE("negative lengths") {
    const Summand f = id::power_summand(2.0);
    // sum_{nu=y}^{y-1} f = 0, sum_{nu=y}^{y-2} f = -f(y-1)
    CHECK_NEAR(negative_length_sum(f, 0.5, -0.5), 0.0, 0.0);
    CHECK_NEAR(negative_length_sum(f, 0.5, -1.5), -0.25, 1e-15);
    CHECK_NEAR(frac_sum_right(f, 0.5, -2.5).value, -(0.25 + 2.25), 1e-14);
    CHECK_THROWS_AS(negative_length_sum(f, 0.5, 1.5), ContractError);
}

TEST_CASE("Euler's sum of 1/nu up to -1/2") {
    const FracSumResult r = frac_sum_right(id::reciprocal_summand(), 1.0, -0.5);
    CHECK(r.converged);
    CHECK(r.method == "limit");
    CHECK_NEAR(r.value, -2.0 * std::log(2.0), 1e-10);
}

TEST_CASE("polynomial summands are summed exactly at every n") {
    const Summand f = cubic();
    const Complex want = poly_frac_sum(Polynomial{2.0, -1.0, 0.0, 0.5}, 0.5, Complex(2.0, 1.0));
    for (long n : {4L, 16L, 100L}) {
        CHECK_NEAR(partial_right(f, 0.5, Complex(2.0, 1.0), n), want, 1e-9 * std::abs(want));
    }
    CHECK_NEAR(frac_sum_right(f, 0.5, Complex(2.0, 1.0)).value, want, 1e-9);
}

TEST_CASE("interpolating polynomials") {
    const Summand f = id::power_summand(2.5);
    const Polynomial p = interpolating_polynomial(f, 10);
    CHECK(p.degree() == f.sigma);
    for (int k = 0; k <= f.sigma.value(); ++k) {
        CHECK_REL(p(10.0 + k), f(10.0 + k), 1e-12);
    }
    const Polynomial local = local_interpolant(f, 10);
    CHECK_REL(local(0.5), p(10.5), 1e-12);
    const Polynomial left = local_interpolant(mirrored(f), -10);
    CHECK_REL(left(-1.0), mirrored(f)(-11.0), 1e-12);
    CHECK(interpolating_polynomial(id::reciprocal_summand(), 10).is_zero());
}

TEST_CASE("factorial as a fractional product") {
    const FracSumResult r = frac_product(id::log_summand(), 1.0, 0.5);
    CHECK(r.converged);
    CHECK_REL(r.value, reference::gamma_3_2, 1e-9);
}

TEST_CASE("geometric tails use the direct series") {
    const Complex q(0.5, 0.3);
    const FracSumResult r = frac_sum_right(id::geometric_summand(q), 0.0, 0.5);
    CHECK(r.method == "direct-series");
    CHECK_REL(r.value, id::geometric_closed(q, 0.5), 1e-11);
    CHECK_REL(frac_sum_right(id::geometric_summand(0.5), 0.0, 0.5).value, reference::geometric_half_half,
              1e-12);
    const FracSumResult left = frac_sum_left(id::geometric_summand(2.0), 0.0, 0.5);
    CHECK_REL(left.value, id::geometric_closed(2.0, 0.5), 1e-11);
    CHECK_REL(frac_sum_left_direct(id::geometric_summand(2.0), 0.0, 0.5).value, left.value, 1e-11);
}

TEST_CASE("direct left sums agree with the mirror law") {
    const Summand f = id::power_summand(Complex(0.4, 0.2));
    const FracSumResult via_mirror = frac_sum_left(f, 1.0, Complex(0.5, 0.5));
    const FracSumResult direct = frac_sum_left_direct(f, 1.0, Complex(0.5, 0.5));
    CHECK(via_mirror.converged);
    CHECK(direct.converged);
    CHECK_NEAR(direct.value, via_mirror.value, 1e-8);
    CHECK_NEAR(partial_left(f, 1.0, Complex(0.5, 0.5), 4096), via_mirror.value, 1e-3);
}

TEST_CASE("Richardson extrapolation") {
    std::vector<Sample> s;
    for (long n = 16; n <= 256; n *= 2) {
        const double x = 1.0 / static_cast<double>(n);
        s.push_back({n, 3.0 + 2.0 * x - 5.0 * x * x + x * x * x});
    }
    const Extrapolation e = richardson_extrapolate(s, 3);
    CHECK_NEAR(e.value, 3.0, 1e-11);

    std::vector<Sample> h;
    for (long n = 16; n <= 512; n *= 2) {
        const double v = static_cast<double>(n);
        h.push_back({n, 1.0 + 0.7 / std::sqrt(v) + 0.2 / (v * std::sqrt(v))});
    }
    const std::vector<Complex> exps = {0.5, 1.5};
    CHECK_NEAR(richardson_extrapolate(h, exps).value, 1.0, 1e-12);

    std::vector<Sample> logs;
    for (long n = 16; n <= 1024; n *= 2) {
        const double v = static_cast<double>(n);
        logs.push_back({n, 2.0 + std::log(v) / std::pow(v, 1.5) - 0.3 / std::pow(v, 1.5)});
    }
    const std::vector<ErrorTerm> terms = {{1.5, 1}, {1.5, 0}};
    CHECK_NEAR(richardson_extrapolate(logs, terms).value, 2.0, 1e-12);

    std::vector<Sample> bad = {{8, 1.0}, {4, 1.0}, {16, 1.0}};
    CHECK_THROWS_AS(richardson_extrapolate(bad, 2), ContractError);
    CHECK_THROWS_AS(richardson_extrapolate(std::span<const Sample>(s.data(), 2), 3), ContractError);
}

TEST_CASE("error exponents follow the summand families") {
    const Summand f = id::power_summand(0.5);
    const std::vector<Complex> e = error_exponents(f, 4);
    REQUIRE(e.size() == 4);
    // sigma = 1, so the approximants err like n^{a - sigma - 1}
    CHECK_NEAR(e[0], 1.5, 1e-15);
    CHECK_NEAR(e[1], 2.5, 1e-15);
    for (std::size_t i = 1; i < e.size(); ++i) {
        CHECK(e[i - 1].real() <= e[i].real());
    }
    CHECK(error_exponents(id::log_summand(), 3) == std::vector<Complex>{1.0, 2.0, 3.0});
}

TEST_CASE("power-log summands declare logarithmic error terms") {
    const Summand f = id::power_log_summand(Complex(0.5, 0.5), 1);
    const std::vector<ErrorTerm> t = error_terms(f, 4);
    REQUIRE(t.size() == 4);
    CHECK(t[0].log_power == 1);
    CHECK(t[1].log_power == 0);
    CHECK(t[0].exponent == t[1].exponent);
    CHECK(error_terms(id::power_log_summand(2.0, 1), 4)[0].log_power == 0);

    const FracSumResult r = frac_sum_right(f, 1.0, Complex(1.7, 0.9));
    CHECK(r.converged);
    CHECK(r.n_used <= 8192);
    CHECK_NEAR(r.value, id::power_log_sum(Complex(0.5, 0.5), 1, Complex(1.7, 0.9)), 1e-9);
}

TEST_CASE("non-convergence is reported, not thrown") {
    EngineConfig cfg;
    cfg.n_max = 64;
    cfg.tol = 1e-15;
    const FracSumResult r = frac_sum_right(id::power_log_summand(2.0, 2), 1.0, Complex(0.3, 0.4), cfg);
    CHECK(!r.converged);
    CHECK(r.n_used <= 64);
    CHECK(std::isfinite(r.value.real()));
}

TEST_CASE("samples are kept on request") {
    EngineConfig cfg;
    cfg.keep_samples = true;
    const FracSumResult r = frac_sum_right(id::log_summand(), 1.0, 0.5, cfg);
    REQUIRE(r.samples.size() >= 2);
    CHECK(r.samples.front().n == cfg.n_start);
    CHECK(r.samples.back().n == r.n_used);
}

TEST_CASE("configuration and domain errors") {
    EngineConfig cfg;
    cfg.growth = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg = {};
    cfg.n_start = 0;
    CHECK_THROWS_AS(frac_sum_right(id::log_summand(), 1.0, 0.5, cfg), ContractError);
    cfg = {};
    cfg.richardson_order = 13;
    CHECK_THROWS_AS(cfg.validate(), ContractError);

    CHECK_THROWS_AS(frac_sum_right(id::reciprocal_summand(), -1.0, 0.5), DomainError);
    CHECK_THROWS_AS(partial_right(id::log_summand(), 1.0, 0.5, 0), ContractError);

    Summand empty;
    CHECK_THROWS_AS(frac_sum_right(empty, 1.0, 0.5), ContractError);
}

TEST_CASE("log_of raises a pole where the factor vanishes") {
    const Summand g = log_of([](Complex nu) { return nu - 3.0; }, Degree(0), "ln(v-3)");
    CHECK_NEAR(g(5.0), std::log(2.0), 1e-15);
    CHECK_THROWS_AS(g(3.0), PoleError);
}
