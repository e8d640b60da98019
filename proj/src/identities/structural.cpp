#include <algorithm>

#include "fracsum/errors.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/special.hpp"

namespace fracsum::identities {
namespace {

std::vector<Complex> merged_families(const Summand& f, const Summand& g) {
    std::vector<Complex> out = f.error_families;
    out.insert(out.end(), g.error_families.begin(), g.error_families.end());
    if (out.empty()) {
        out.emplace_back(1.0);
    }
    return out;
}

Sides engine_side(const Summand& h, Complex lhs, Complex x, const EngineConfig& cfg) {
    const FracSumResult r = frac_sum_right(h, 1.0, x, cfg);
    Sides s;
    s.lhs = lhs;
    s.rhs = r.value;
    s.n_used = r.n_used;
    s.converged = r.converged;
    s.notes = "method=" + r.method;
    return s;
}

Degree power_sigma(Complex c) {
    if (std::abs(c + 1.0) < 1e-14) {
        return Degree::neg_infinity();
    }
    return special::sigma_of_s(-c);
}

}  // namespace

Sides product_of_sums(const SummedFunction& f, const SummedFunction& g, Complex x,
                      Degree working_sigma, const EngineConfig& cfg) {
    Summand h;
    h.sigma = working_sigma;
    h.label = "product(" + f.f.label + ", " + g.f.label + ")";
    h.error_families = merged_families(f.f, g.f);
    h.eval = [f, g](Complex nu) {
        const Complex fv = f.f(nu);
        const Complex gv = g.f(nu);
        return fv * gv + fv * g.sum(nu - 1.0) + gv * f.sum(nu - 1.0);
    };
    h.domain_ok = [f, g](Complex u) { return f.f.accepts(u) && g.f.accepts(u); };
    return engine_side(h, f.sum(x) * g.sum(x), x, cfg);
}

double product_of_sums_check(const SummedFunction& f, const SummedFunction& g, Complex x,
                             Degree working_sigma, const EngineConfig& cfg) {
    return product_of_sums(f, g, x, working_sigma, cfg).residual();
}

Sides square_of_sum(const SummedFunction& f, Complex x, Degree working_sigma,
                    const EngineConfig& cfg) {
    Summand h;
    h.sigma = working_sigma;
    h.label = "square(" + f.f.label + ")";
    h.error_families = merged_families(f.f, f.f);
    h.eval = [f](Complex nu) {
        const Complex fv = f.f(nu);
        return fv * fv + 2.0 * fv * f.sum(nu - 1.0);
    };
    h.domain_ok = [f](Complex u) { return f.f.accepts(u); };
    const Complex total = f.sum(x);
    return engine_side(h, total * total, x, cfg);
}

double square_of_sum_check(const SummedFunction& f, Complex x, Degree working_sigma,
                           const EngineConfig& cfg) {
    return square_of_sum(f, x, working_sigma, cfg).residual();
}

Sides double_sum_identity(Complex a, Complex b, Complex x, const EngineConfig& cfg) {
    Summand h;
    h.sigma = Degree::neg_infinity();
    for (Complex c : {a + b + 1.0, a, b}) {
        h.sigma = std::max(h.sigma, power_sigma(c));
    }
    for (Complex c : {a + b + 1.0, a, b}) {
        h.error_families.push_back(static_cast<double>(h.sigma.value_or_minus_one() + 1) - c);
    }
    h.label = "up(v,a) v^b + up(v,b) v^a";
    h.eval = [a, b](Complex nu) {
        return up(nu, a) * cpow(nu, b) + up(nu, b) * cpow(nu, a);
    };
    h.domain_ok = [](Complex u) { return !is_nonpositive_integer(u); };
    const FracSumResult r = frac_sum_right(h, 1.0, x, cfg);
    Sides s;
    s.lhs = r.value;
    s.rhs = up(x, a) * up(x, b) + up(x, a + b);
    s.n_used = r.n_used;
    s.converged = r.converged;
    s.notes = "method=" + r.method;
    return s;
}

double double_sum_identity_check(Complex a, Complex b, Complex x, const EngineConfig& cfg) {
    return double_sum_identity(a, b, x, cfg).residual();
}

}  // namespace fracsum::identities
