#include <algorithm>
#include <cmath>
#include <limits>

#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {
namespace {

// Solves v_i = L + sum_k c_k n_i^{-e_k} (ln n_i)^{j_k} over the window and
// returns L. Columns are scaled by their value at n_last, which keeps the
// system well conditioned on a geometric schedule.
Complex extrapolate_window(std::span<const Sample> window, std::span<const ErrorTerm> terms) {
    const std::size_t dim = terms.size() + 1;
    const double n_last = static_cast<double>(window.back().n);
    std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        const double n = static_cast<double>(window[i].n);
        const double log_ratio = std::log(n_last / n);
        const double log_scale = std::log(n) / std::log(n_last);
        m[i][0] = 1.0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            m[i][k + 1] = std::exp(terms[k].exponent * log_ratio) *
                          std::pow(log_scale, terms[k].log_power);
        }
        m[i][dim] = window[i].value;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) {
                piv = r;
            }
        }
        std::swap(m[col], m[piv]);
        if (m[col][col] == Complex(0.0, 0.0)) {
            throw ContractError("richardson_extrapolate: singular system (repeated exponents?)");
        }
        for (std::size_t r = col + 1; r < dim; ++r) {
            const Complex factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= dim; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    std::vector<Complex> x(dim);
    for (std::size_t r = dim; r-- > 0;) {
        Complex acc = m[r][dim];
        for (std::size_t c = r + 1; c < dim; ++c) {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    return x[0];
}

}  // namespace

Extrapolation richardson_extrapolate(std::span<const Sample> samples,
                                     std::span<const ErrorTerm> terms) {
    const std::size_t need = terms.size() + 1;
    if (samples.size() < need) {
        throw ContractError("richardson_extrapolate: need at least " + std::to_string(need) +
                            " samples, got " + std::to_string(samples.size()));
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].n <= samples[i - 1].n || samples[i - 1].n <= 0) {
            throw ContractError("richardson_extrapolate: n must be positive and strictly increasing");
        }
    }
    const std::size_t size = samples.size();
    const Complex value = extrapolate_window(samples.subspan(size - need), terms);
    double err = std::numeric_limits<double>::infinity();
    if (size >= need + 1) {
        err = std::abs(value - extrapolate_window(samples.subspan(size - need - 1, need), terms));
    } else if (!terms.empty()) {
        err = std::abs(value - extrapolate_window(samples.subspan(size - need + 1),
                                                  terms.first(terms.size() - 1)));
    }
    return {value, err};
}

Extrapolation richardson_extrapolate(std::span<const Sample> samples,
                                     std::span<const Complex> exponents) {
    std::vector<ErrorTerm> terms;
    for (Complex e : exponents) {
        terms.push_back({e, 0});
    }
    return richardson_extrapolate(samples, terms);
}

Extrapolation richardson_extrapolate(std::span<const Sample> samples, int order) {
    if (order < 0) {
        throw ContractError("richardson_extrapolate: order must be >= 0");
    }
    std::vector<Complex> exps;
    for (int k = 1; k <= order; ++k) {
        exps.emplace_back(static_cast<double>(k));
    }
    return richardson_extrapolate(samples, exps);
}

std::vector<Complex> error_exponents(const Summand& f, int order) {
    std::vector<Complex> families = f.error_families;
    if (families.empty()) {
        families.emplace_back(1.0);
    }
    std::vector<Complex> all;
    for (Complex p : families) {
        for (int j = 0; j <= order; ++j) {
            const Complex e = p + static_cast<double>(j);
            if (e.real() > 1e-12) {
                all.push_back(e);
            }
        }
    }
    std::sort(all.begin(), all.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    std::vector<Complex> out;
    for (Complex e : all) {
        if (out.empty() || std::abs(e - out.back()) > 1e-9) {
            out.push_back(e);
        }
        if (static_cast<int>(out.size()) == order) {
            break;
        }
    }
    return out;
}

std::vector<ErrorTerm> error_terms(const Summand& f, int order) {
    std::vector<ErrorTerm> out;
    for (Complex e : error_exponents(f, order)) {
        for (int j = f.error_log_power; j >= 0; --j) {
            if (static_cast<int>(out.size()) < order) {
                out.push_back({e, j});
            }
        }
    }
    return out;
}

}  // namespace fracsum
