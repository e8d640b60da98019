#include "fracsum/complex.hpp"

#include <charconv>
#include <cmath>

#include "fracsum/errors.hpp"

namespace fracsum {

Complex principal_log(Complex z) {
    if (z.real() == 0.0 && z.imag() == 0.0) {
        throw DomainError("log of zero");
    }
    // Fold -0 onto +0 so the cut is approached from above.
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return std::log(Complex(z.real(), im));
}

Complex cpow(Complex z, Complex s, ZeroPower zero) {
    if (z == Complex(0.0, 0.0)) {
        if (zero == ZeroPower::Zero || s.real() > 0.0) {
            return {0.0, 0.0};
        }
        throw DomainError("0 raised to a power with nonpositive real part");
    }
    if (z.imag() == 0.0 && z.real() > 0.0 && s.imag() == 0.0) {
        return std::pow(z.real(), s.real());
    }
    // exp(s * (ln r + i theta)) split into modulus and phase, so a large |z|
    // does not cost the accuracy of exp on a large argument.
    const double r = std::abs(z);
    const double theta = principal_log(z).imag();
    const double modulus = std::pow(r, s.real()) * std::exp(-s.imag() * theta);
    const double phase = s.imag() * std::log(r) + s.real() * theta;
    return std::polar(modulus, phase);
}

bool is_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) {
        return false;
    }
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

bool is_nonpositive_integer(Complex z, double tol) {
    return is_integer(z, tol) && std::round(z.real()) <= 0.0;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, end);
}

std::string format_complex(Complex z) {
    std::string out = format_double(z.real());
    const double im = z.imag();
    if (std::signbit(im)) {
        out += "-" + format_double(-im) + "i";
    } else {
        out += "+" + format_double(im) + "i";
    }
    return out;
}

}  // namespace fracsum
