#include <cmath>
#include <utility>

#include "detail.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {

namespace detail {

Complex eval_at(const Summand& f, Complex nu) {
    Complex v;
    try {
        v = f.eval(nu);
    } catch (const PoleError& e) {
        throw PoleError(nu, "summand '" + f.label + "' has a pole at nu = " + format_complex(nu) +
                                " (" + e.what() + ")");
    } catch (const DomainError& e) {
        throw DomainError("summand '" + f.label + "' undefined at nu = " + format_complex(nu) +
                          " (" + e.what() + ")");
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw PoleError(nu, "summand '" + f.label + "' is not finite at nu = " + format_complex(nu));
    }
    return v;
}

}  // namespace detail

Summand mirrored(const Summand& f) {
    Summand g = f;
    g.eval = [h = f.eval](Complex u) { return h(-u); };
    if (f.domain_ok) {
        g.domain_ok = [ok = f.domain_ok](Complex u) { return ok(-u); };
    }
    g.label = f.label + " (mirrored)";
    return g;
}

Summand log_of(std::function<Complex(Complex)> factor, Degree sigma, std::string label) {
    Summand s;
    s.sigma = sigma;
    s.label = "ln(" + label + ")";
    s.eval = [factor = std::move(factor)](Complex nu) {
        const Complex v = factor(nu);
        if (v == Complex(0.0, 0.0)) {
            throw PoleError(nu, "factor vanishes");
        }
        return principal_log(v);
    };
    return s;
}

Polynomial local_interpolant(const Summand& f, long n) {
    if (f.sigma.is_neg_infinity()) {
        return {};
    }
    const int sigma = f.sigma.value();
    const double dir = n < 0 ? -1.0 : 1.0;
    // Divided differences on the unit-spaced nodes t_j = dir * j.
    std::vector<Complex> dd(static_cast<std::size_t>(sigma) + 1);
    for (int j = 0; j <= sigma; ++j) {
        dd[static_cast<std::size_t>(j)] =
            detail::eval_at(f, static_cast<double>(n) + dir * static_cast<double>(j));
    }
    for (int k = 1; k <= sigma; ++k) {
        for (int j = sigma; j >= k; --j) {
            dd[static_cast<std::size_t>(j)] =
                (dd[static_cast<std::size_t>(j)] - dd[static_cast<std::size_t>(j - 1)]) /
                (dir * static_cast<double>(k));
        }
    }
    Polynomial acc = Polynomial::constant(dd[static_cast<std::size_t>(sigma)]);
    for (int k = sigma - 1; k >= 0; --k) {
        acc = acc * Polynomial({-dir * static_cast<double>(k), 1.0}) +
              Polynomial::constant(dd[static_cast<std::size_t>(k)]);
    }
    return acc;
}

Polynomial interpolating_polynomial(const Summand& f, long n) {
    return local_interpolant(f, n).shifted(-static_cast<double>(n));
}

}  // namespace fracsum
