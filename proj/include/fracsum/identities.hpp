#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fracsum/engine.hpp"

namespace fracsum::identities {

// ---------------------------------------------------------------------------
// Builtin summands

/// nu^a with sigma = sigma_of_s(-a) and the matching error family.
Summand power_summand(Complex a);
/// ln(nu), sigma = 0.
Summand log_summand();
/// 1/nu, sigma = -inf.
Summand reciprocal_summand();
/// q^nu, sigma = -inf, geometric tail (right sums need |q| < 1).
Summand geometric_summand(Complex q);
/// C(c, nu) x^nu, sigma = -inf, geometric tail (right sums need |x| < 1).
Summand binomial_summand(Complex c, Complex x);
/// nu^a (ln nu)^order for order in {1, 2}.
Summand power_log_summand(Complex a, int order);
/// A polynomial as a summand; sigma is its degree.
Summand polynomial_summand(const Polynomial& p);

// ---------------------------------------------------------------------------
// Closed forms

/// The fractional power sum from 1 to x of nu^a: zeta(-a) - zeta(-a, x+1),
/// or gamma + psi(x+1) for a = -1.
Complex up(Complex x, Complex a);
/// up at x = +infinity, i.e. zeta(-a) for Re(a) < -1.
Complex up_infinity(Complex a);
/// (2 - 2^{-a}) zeta(-a), the power sum up to -1/2; a = -1 is a domain error.
Complex minus_half_power(Complex a);
/// Sum from 1 to x of nu^a (ln nu)^order: (-1)^order (zeta^(order)(-a) - zeta^(order)(-a, x+1)).
Complex power_log_sum(Complex a, int order, Complex x);
/// 2^{-a} zeta(-a) ln 2 - (2 - 2^{-a}) zeta'(-a).
Complex sum_v_log_v_minus_half(Complex a);
/// (q^{x+1} - 1)/(q - 1), the sum from 0 to x of q^nu; q = 1 is a domain error.
Complex geometric_closed(Complex q, Complex x);
/// (1 + x)^c; |x| = 1 is unsupported.
Complex binomial_closed(Complex c, Complex x);
/// Gamma(c+1) / (Gamma(nu+1) Gamma(c-nu+1)); exactly zero when nu or c - nu
/// is a negative integer.
Complex generalized_binomial(Complex c, Complex nu);
/// up(x, a) (x+1) - up(x, a+1).
Complex double_power_sum(Complex a, Complex x);
/// The fold-times iterated sum of x^a by the general formula
/// (1/n!) sum_{nu=0}^{n} up(x, a+nu)/nu! (-1)^nu d^nu/dx^nu prod_{k=1}^{n} (x+k), n = fold - 1.
Complex iterated_power_sum(int fold, Complex a, Complex x);
/// The expanded displays for fold in {1, 2, 3}.
Complex iterated_power_sum_expanded(int fold, Complex a, Complex x);
/// Nested classical sums of k^a for integer x >= 0.
Complex nested_integer_sum(int fold, Complex a, long x);

// ---------------------------------------------------------------------------
// Structural identities

/// Both sides of an identity check.
struct Sides {
    Complex lhs;
    Complex rhs;
    long n_used = 0;
    bool converged = true;
    std::string notes;

    double residual() const { return std::abs(lhs - rhs); }
};

/// A summand with a closed form for its sum from 1 to x.
struct SummedFunction {
    Summand f;
    std::function<Complex(Complex)> sum;
};

/// (sum f)(sum g) against the engine sum of f g + f G(nu-1) + g F(nu-1).
/// `working_sigma` is the degree used for the combined summand.
Sides product_of_sums(const SummedFunction& f, const SummedFunction& g, Complex x,
                      Degree working_sigma, const EngineConfig& cfg = {});
double product_of_sums_check(const SummedFunction& f, const SummedFunction& g, Complex x,
                             Degree working_sigma, const EngineConfig& cfg = {});
/// (sum f)^2 against the engine sum of f^2 + 2 f F(nu-1).
Sides square_of_sum(const SummedFunction& f, Complex x, Degree working_sigma,
                    const EngineConfig& cfg = {});
double square_of_sum_check(const SummedFunction& f, Complex x, Degree working_sigma,
                           const EngineConfig& cfg = {});

/// Engine sum from 1 to x of up(nu,a) nu^b + up(nu,b) nu^a against
/// up(x,a) up(x,b) + up(x,a+b).
Sides double_sum_identity(Complex a, Complex b, Complex x, const EngineConfig& cfg = {});
double double_sum_identity_check(Complex a, Complex b, Complex x, const EngineConfig& cfg = {});

/// Summand nu -> up(nu, a).
Summand up_summand(Complex a);

// ---------------------------------------------------------------------------
// Infinite products and limits

/// 2^{-1/12} (Gamma(x+1/2)/Gamma(x+1))^{2x}
///   exp(-x - 2 zeta'(-1, x+1/2) + 2 zeta'(-1, x+1) - 3 zeta'(-1)), in log space.
Complex borwein_closed_log(Complex x);
Complex borwein_closed(Complex x);
/// prod_{k=1}^{2n+1} (1 + x/k)^{k (-1)^{k+1}}
Complex borwein_partial_product(Complex x, long n);
/// prod_{k=1}^{2n} (1 + 2x/k)^{k (-1)^{k+1}}, whose limit is borwein_closed(x).
Complex borwein_even_partial_product(Complex x, long n);
/// Extrapolated limit of one of the partial products above.
Extrapolation borwein_limit(Complex x, bool even_form);
/// exp(-x - engine sum_{nu=1}^{-1/2} 2 nu ln(1 + x/nu)).
FracSumResult borwein_fracsum(Complex x, const EngineConfig& cfg = {});

/// Logarithm of e^{n(4n+1)/4} n^{-1/8-n(n+1)} (2 pi)^{-n/2} prod_{k=1}^{2n} Gamma(1+k/2)^{k(-1)^k}.
double gamma_product_log_lhs(long n);
Complex gamma_product_limit(long n);
/// 2^{1/12} exp(5/24 - 3/2 zeta'(-1) - 7 zeta(3)/(16 pi^2)).
Complex gamma_product_rhs();
/// (2e)^{1/12} A^{3/2} exp(-7 zeta(3)/(16 pi^2)).
Complex gamma_product_rhs_glaisher();
/// Richardson limit of the log-LHS over n in {25, 50, 100, 200}, exponentiated.
Extrapolation gamma_product_extrapolated();
/// -ln2/48 - ln(pi)/16 - 3/4 zeta'(-1) + 7/8 zeta'(-2), the sum of nu ln(nu!) up to -1/2.
Complex sum_v_log_factorial_minus_half();
/// nu -> nu ln(nu!), with a working degree.
Summand v_log_factorial_summand(Degree sigma);

/// Newton refinement of the first nontrivial zeta zero from 0.5 + 14.1347i.
Complex first_zeta_zero();

struct MinusHalfRelation {
    Complex left;       ///< left sum from 1 to -1/2 of nu^z (0^z := 0), via the mirror law
    Complex right;         ///< right sum from 1 to -1/2 of nu^z, closed form
    Complex right_engine;  ///< the same right sum through the engine
    Complex minus_one_pow;  ///< (-1)^z
    double raw_residual;         ///< |left + (-1)^z right|
    double normalized_residual;  ///< |left / (-1)^z + right|
    long n_used;
    bool converged;
};
MinusHalfRelation left_right_minus_half_relation(Complex z, const EngineConfig& cfg = {});

/// (Gamma(1/4)/Gamma(3/4))^{3/32} exp(zeta'(-2, 1/4) - 3 zeta(3)/(128 pi^2) - G/(4 pi)).
Complex quarter_product_rhs();
/// exp of the engine sum from 1/4 to -1/4 of nu ln(nu!).
FracSumResult quarter_product_lhs(const EngineConfig& cfg = {});
/// exp(gamma^2/4 + gamma_1/2 - pi^2/48 + ln^2 2/2 - ln^2 pi/8) for a given gamma_1.
Complex stieltjes_product_rhs(double gamma1);
/// exp of the engine sum from 1 to -1/2 of ln(nu) ln(nu!).
FracSumResult stieltjes_product_lhs(const EngineConfig& cfg = {});

// ---------------------------------------------------------------------------
// Catalog

struct Parameter {
    std::string name;
    Complex value;
};
using Parameters = std::vector<Parameter>;

struct CaseRecord {
    std::string id;
    Parameters parameters;
    Complex lhs;
    Complex rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    long n_used = 0;
    double runtime_ms = 0.0;
    std::string notes;
    bool optional = false;
};

struct IdentityCase {
    std::string id;
    std::string description;
    std::vector<std::string> suites;
    double tol = 1e-9;
    bool optional = false;
    /// Parameter points; `seed` drives the randomized part of the grid.
    std::function<std::vector<Parameters>(std::uint64_t seed)> grid;
    /// Empty string when the point is admissible, otherwise the reason.
    std::function<std::string(const Parameters&)> reject;
    std::function<Sides(const Parameters&, const EngineConfig&)> evaluate;
};

const std::vector<IdentityCase>& catalog();
/// nullptr for an unknown id.
const IdentityCase* find_case(const std::string& id);
bool in_suite(const IdentityCase& c, const std::string& suite);

/// Residuals and pass flag for one evaluated point.
CaseRecord make_record(const IdentityCase& c, const Parameters& p, const Sides& s, double tol_scale);

/// Evaluates every grid point of a case. Errors are recorded as failures.
std::vector<CaseRecord> run_case(const IdentityCase& c, std::uint64_t seed, double tol_scale = 1.0,
                                 const EngineConfig& cfg = {});

/// Seeded grid sampler. mt19937_64 output is fixed by the standard and the
/// mapping to doubles is done by hand, so grids agree across platforms.
class GridRng {
public:
    /// `stream` (usually the case id) decorrelates cases sharing a seed.
    GridRng(std::uint64_t seed, const std::string& stream);
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    Complex complex_in_box(double re_lo, double re_hi, double im_lo, double im_hi);

private:
    std::mt19937_64 gen_;
};

}  // namespace fracsum::identities
