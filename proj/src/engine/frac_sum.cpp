#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "detail.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {
namespace {

using detail::CompensatedSum;
using detail::eval_at;

constexpr int kMaxSigma = 12;
constexpr double kLengthTol = 1e-12;

// b - a as an integer when it is one.
std::optional<long> integer_length(Complex a, Complex b) {
    const Complex d = b - a;
    const double r = std::round(d.real());
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(d.real() - r) <= kLengthTol * scale && std::abs(d.imag()) <= kLengthTol * scale &&
        std::abs(r) < 1e9) {
        return static_cast<long>(r);
    }
    return std::nullopt;
}

// Running sum_{nu=1}^{n} (f(nu+a-1) - f(nu+b)), extended as n grows. With
// dir = -1 it tracks sum_{nu=-n+1}^{0} of the same terms.
class Correction {
public:
    Correction(const Summand& f, Complex a, Complex b, int dir) : f_(f), a_(a), b_(b), dir_(dir) {}

    Complex advance_to(long n) {
        for (; done_ < n; ++done_) {
            const double nu = dir_ > 0 ? static_cast<double>(done_ + 1) : -static_cast<double>(done_);
            sum_.add(eval_at(f_, nu + a_ - 1.0) - eval_at(f_, nu + b_));
        }
        return sum_.value();
    }

private:
    const Summand& f_;
    Complex a_, b_;
    int dir_;
    long done_ = 0;
    CompensatedSum sum_;
};

void check_sigma(const Summand& f) {
    if (!f.sigma.is_neg_infinity() && f.sigma.value() > kMaxSigma) {
        throw UnsupportedError("summand degree " + f.sigma.to_string() + " exceeds " +
                               std::to_string(kMaxSigma));
    }
    if (!f.eval) {
        throw ContractError("summand '" + f.label + "' has no evaluator");
    }
}

// Classical sum for b - a = len >= 0, or the negative-length convention.
std::optional<FracSumResult> finite_cases(const Summand& f, Complex a, Complex b,
                                          const EngineConfig& cfg) {
    const auto len = integer_length(a, b);
    if (!len) {
        return std::nullopt;
    }
    FracSumResult r;
    r.converged = true;
    if (*len < 0) {
        r.value = negative_length_sum(f, a, b);
        r.method = "negative-length";
        return r;
    }
    if (!cfg.integer_shortcut || *len > 10'000'000) {
        return std::nullopt;
    }
    CompensatedSum acc;
    for (long j = 0; j <= *len; ++j) {
        acc.add(eval_at(f, a + static_cast<double>(j)));
    }
    r.value = acc.value();
    r.n_used = *len + 1;
    r.method = "classical";
    return r;
}

// Sums term(1) + term(2) + ... for geometrically decaying terms, stopping
// once the ratio bound on the tail is below the configured tolerance.
template <class Term>
FracSumResult direct_series(Term term, const EngineConfig& cfg) {
    FracSumResult r;
    r.method = "direct-series";
    CompensatedSum acc;
    double prev = 0.0;
    double prev_ratio = std::numeric_limits<double>::infinity();
    int zeros = 0;
    r.err_estimate = std::numeric_limits<double>::infinity();
    for (long nu = 1; nu <= cfg.n_max; ++nu) {
        const Complex t = term(nu);
        acc.add(t);
        r.n_used = nu;
        const double size = std::abs(t);
        if (size == 0.0) {
            if (++zeros >= 16) {
                r.err_estimate = 0.0;
                r.converged = true;
                break;
            }
            continue;
        }
        zeros = 0;
        if (prev > 0.0) {
            const double ratio = size / prev;
            const double q = std::max(ratio, prev_ratio);
            if (nu >= 8 && q < 1.0) {
                const double bound = size * q / (1.0 - q);
                r.err_estimate = bound;
                if (bound <= cfg.direct_series_tail_tol * std::max(1.0, std::abs(acc.value()))) {
                    r.converged = true;
                    break;
                }
            }
            prev_ratio = ratio;
        }
        prev = size;
    }
    r.value = acc.value();
    return r;
}

// The limit over the n-schedule with generalized Richardson extrapolation.
// approximant(n) returns the n-th member of the sequence.
template <class Approximant>
FracSumResult limit_loop(const Summand& f, Approximant approximant, const EngineConfig& cfg) {
    FracSumResult r;
    r.method = "limit";
    const int order = cfg.richardson_order;
    const std::vector<ErrorTerm> exps = error_terms(f, order);
    std::vector<Sample> samples;
    Extrapolation best{0.0, std::numeric_limits<double>::infinity()};
    int stalled = 0;
    for (double nd = static_cast<double>(cfg.n_start); nd <= static_cast<double>(cfg.n_max) + 0.5;
         nd *= cfg.growth) {
        const long n = std::lround(nd);
        if (!samples.empty() && n <= samples.back().n) {
            continue;
        }
        const Complex v = approximant(n);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            break;
        }
        samples.push_back({n, v});
        r.n_used = n;
        if (samples.size() < 2) {
            continue;
        }
        const std::size_t used = std::min<std::size_t>(exps.size(), samples.size() - 2);
        const Extrapolation e =
            richardson_extrapolate(samples, std::span<const ErrorTerm>(exps).first(used));
        if (e.err < best.err) {
            best = e;
            stalled = 0;
        } else if (used == exps.size() && ++stalled >= 4) {
            break;  // rounding noise dominates from here on
        }
        if (e.err <= cfg.tol * std::max(1.0, std::abs(e.value))) {
            best = e;
            r.converged = true;
            break;
        }
    }
    if (samples.size() == 1) {
        best = {samples.front().value, std::numeric_limits<double>::infinity()};
    }
    r.value = best.value;
    r.err_estimate = best.err;
    if (cfg.keep_samples) {
        r.samples = std::move(samples);
    }
    return r;
}

}  // namespace

void EngineConfig::validate() const {
    if (n_start < 1 || n_max < n_start) {
        throw ContractError("EngineConfig: need 1 <= n_start <= n_max");
    }
    if (!(growth > 1.0)) {
        throw ContractError("EngineConfig: growth must exceed 1");
    }
    if (richardson_order < 0 || richardson_order > 12) {
        throw ContractError("EngineConfig: richardson_order must be in [0, 12]");
    }
    if (!(tol > 0.0) || !(direct_series_tail_tol > 0.0)) {
        throw ContractError("EngineConfig: tolerances must be positive");
    }
}

Complex partial_right(const Summand& f, Complex a, Complex b, long n) {
    check_sigma(f);
    if (n < 1) {
        throw ContractError("partial_right: n must be >= 1");
    }
    return poly_frac_sum(local_interpolant(f, n), a, b) + Correction(f, a, b, 1).advance_to(n);
}

Complex partial_left(const Summand& f, Complex a, Complex b, long n) {
    check_sigma(f);
    if (n < 1) {
        throw ContractError("partial_left: n must be >= 1");
    }
    return poly_frac_sum(local_interpolant(f, -n), a, b) - Correction(f, a, b, -1).advance_to(n);
}

FracSumResult frac_sum_right(const Summand& f, Complex a, Complex b, const EngineConfig& cfg) {
    cfg.validate();
    check_sigma(f);
    if (auto r = finite_cases(f, a, b, cfg)) {
        return *r;
    }
    if (!f.accepts(a) || !f.accepts(b + 1.0)) {
        throw DomainError("frac_sum_right: bounds a = " + format_complex(a) + ", b = " +
                          format_complex(b) + " outside the domain of '" + f.label + "'");
    }
    if (f.sigma.is_neg_infinity() && f.tail == TailKind::Geometric) {
        return direct_series(
            [&](long nu) {
                const double v = static_cast<double>(nu);
                return eval_at(f, v + a - 1.0) - eval_at(f, v + b);
            },
            cfg);
    }
    if (cfg.n_start < f.sigma.value_or_minus_one() + 2) {
        throw ContractError("frac_sum_right: n_start must be at least sigma + 2");
    }
    Correction corr(f, a, b, 1);
    return limit_loop(
        f,
        [&](long n) { return poly_frac_sum(local_interpolant(f, n), a, b) + corr.advance_to(n); },
        cfg);
}

FracSumResult frac_sum_left(const Summand& f, Complex a, Complex b, const EngineConfig& cfg) {
    return frac_sum_right(mirrored(f), -b, -a, cfg);
}

FracSumResult frac_sum_left_direct(const Summand& f, Complex a, Complex b,
                                   const EngineConfig& cfg) {
    cfg.validate();
    check_sigma(f);
    if (auto r = finite_cases(f, a, b, cfg)) {
        return *r;
    }
    if (f.sigma.is_neg_infinity() && f.tail == TailKind::Geometric) {
        // sum_{nu=1}^{-m} g = -sum_{nu=-m+1}^{0} g
        FracSumResult r = direct_series(
            [&](long k) {
                const double v = -static_cast<double>(k - 1);
                return eval_at(f, v + a - 1.0) - eval_at(f, v + b);
            },
            cfg);
        r.value = -r.value;
        return r;
    }
    if (cfg.n_start < f.sigma.value_or_minus_one() + 2) {
        throw ContractError("frac_sum_left_direct: n_start must be at least sigma + 2");
    }
    Correction corr(f, a, b, -1);
    return limit_loop(
        f,
        [&](long n) { return poly_frac_sum(local_interpolant(f, -n), a, b) - corr.advance_to(n); },
        cfg);
}

Complex negative_length_sum(const Summand& f, Complex y, Complex x) {
    const auto len = integer_length(y, x);
    if (!len || *len >= 0) {
        throw ContractError("negative_length_sum: x - y = " + format_complex(x - y) +
                            " is not a negative integer");
    }
    CompensatedSum acc;
    for (long j = 1; j <= -*len - 1; ++j) {
        acc.add(eval_at(f, x + static_cast<double>(j)));
    }
    return -acc.value();
}

FracSumResult frac_product(const Summand& log_f, Complex a, Complex b, const EngineConfig& cfg) {
    FracSumResult r = frac_sum_right(log_f, a, b, cfg);
    const Complex v = std::exp(r.value);
    r.err_estimate *= std::abs(v);
    r.value = v;
    return r;
}

Complex delta_of_sum(const Summand& f, Complex a, Complex x, const EngineConfig& cfg) {
    return frac_sum_right(f, a, x, cfg).value - frac_sum_right(f, a, x - 1.0, cfg).value;
}

}  // namespace fracsum
