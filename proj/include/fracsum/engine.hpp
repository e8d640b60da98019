#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fracsum/complex.hpp"
#include "fracsum/degree.hpp"
#include "fracsum/polynomial.hpp"

namespace fracsum {

/// How the summand approaches its approximating polynomials.
enum class TailKind {
    PowerLaw,   ///< error of the n-th approximant decays like a power of 1/n
    Geometric,  ///< sigma = -inf and the difference terms decay geometrically
};

/// A function nu -> f(nu) together with its approximation degree sigma and
/// the set U on which it is defined (closed under u -> u+1).
struct Summand {
    std::function<Complex(Complex)> eval;
    Degree sigma = Degree::neg_infinity();
    std::function<bool(Complex)> domain_ok;  ///< empty means every point is allowed
    std::string label;
    TailKind tail = TailKind::PowerLaw;
    /// Leading exponents p of the error expansions sum_j c_j n^{-(p+j)} of the
    /// approximants. Empty means {1}, i.e. an ordinary power series in 1/n.
    std::vector<Complex> error_families;
    /// Each family term may carry factors (ln n)^k for k up to this power.
    int error_log_power = 0;

    Complex operator()(Complex nu) const { return eval(nu); }
    bool accepts(Complex u) const { return !domain_ok || domain_ok(u); }
};

/// nu -> f(-nu), keeping sigma and the error families.
Summand mirrored(const Summand& f);

/// nu -> principal_log(factor(nu)); a zero factor raises a pole error.
Summand log_of(std::function<Complex(Complex)> factor, Degree sigma, std::string label);

struct EngineConfig {
    long n_start = 16;
    long n_max = 1L << 20;
    double growth = 2.0;
    int richardson_order = 4;
    /// Successive extrapolants must agree within tol * max(1, |value|).
    double tol = 1e-9;
    double direct_series_tail_tol = 1e-12;
    /// Integer lengths b - a in N are summed classically.
    bool integer_shortcut = true;
    bool keep_samples = false;

    void validate() const;
};

struct Sample {
    long n;
    Complex value;
};

struct FracSumResult {
    Complex value;
    double err_estimate = 0.0;
    long n_used = 0;
    bool converged = false;
    std::vector<Sample> samples;
    std::string method;  ///< "classical", "negative-length", "direct-series", "limit"
};

/// One basis function n^{-exponent} (ln n)^log_power of an error expansion.
struct ErrorTerm {
    Complex exponent;
    int log_power = 0;
};

struct Extrapolation {
    Complex value;
    double err;
};

/// Degree-sigma polynomial through (n, f(n)), ..., (n+sigma, f(n+sigma)),
/// built from Newton forward differences. Zero polynomial for sigma = -inf.
Polynomial interpolating_polynomial(const Summand& f, long n);

/// The same interpolant in the local variable t = nu - n. For n < 0 the nodes
/// run n, n-1, ..., n-sigma (backward differences), as used by left sums.
Polynomial local_interpolant(const Summand& f, long n);

/// n-th approximant of the right sum:
/// sum_{nu=n+a}^{n+b} p_n(nu) + sum_{nu=1}^{n} (f(nu+a-1) - f(nu+b)).
Complex partial_right(const Summand& f, Complex a, Complex b, long n);

/// Approximant of the left sum at -n (n > 0), nodes extending to the left.
Complex partial_left(const Summand& f, Complex a, Complex b, long n);

FracSumResult frac_sum_right(const Summand& f, Complex a, Complex b, const EngineConfig& cfg = {});

/// Left sum via the mirror law sum_{a}^{b} f(nu) = right sum_{-b}^{-a} f(-nu).
FracSumResult frac_sum_left(const Summand& f, Complex a, Complex b, const EngineConfig& cfg = {});

/// Left sum evaluated directly along n -> -infinity.
FracSumResult frac_sum_left_direct(const Summand& f, Complex a, Complex b,
                                   const EngineConfig& cfg = {});

/// sum_{nu=y}^{x} f := -sum_{nu=x+1}^{y-1} f for x - y in {-1, -2, ...}.
Complex negative_length_sum(const Summand& f, Complex y, Complex x);

/// exp of the right sum of the log-summand (see log_of).
FracSumResult frac_product(const Summand& log_f, Complex a, Complex b, const EngineConfig& cfg = {});

/// Polynomial extrapolation to 1/n = 0 over the last order+1 samples.
Extrapolation richardson_extrapolate(std::span<const Sample> samples, int order);

/// Extrapolation with error terms n^{-e} for the given exponents e, over the
/// last exponents.size()+1 samples. The error is the distance to the same
/// extrapolation on the previous window, or with one exponent fewer when no
/// earlier sample exists.
Extrapolation richardson_extrapolate(std::span<const Sample> samples,
                                     std::span<const Complex> exponents);

/// Extrapolation over general error terms; window and error as above.
Extrapolation richardson_extrapolate(std::span<const Sample> samples,
                                     std::span<const ErrorTerm> terms);

/// Error terms used by frac_sum_right for f: the exponents below, each
/// preceded by its log-weighted companions, truncated to `order` entries.
std::vector<ErrorTerm> error_terms(const Summand& f, int order);

/// Exponents used by frac_sum_right for f: the error families of f and their
/// integer shifts, sorted by real part, truncated to `order` entries.
std::vector<Complex> error_exponents(const Summand& f, int order);

/// S(x) - S(x-1) with S(x) the right sum from a to x.
Complex delta_of_sum(const Summand& f, Complex a, Complex x, const EngineConfig& cfg = {});

}  // namespace fracsum
