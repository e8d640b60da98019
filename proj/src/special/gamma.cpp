#include <cmath>

#include "fracsum/bernoulli.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/special.hpp"

namespace fracsum::special {
namespace {

constexpr double kStirlingRadius = 15.0;
constexpr int kStirlingTerms = 10;

void reject_pole(Complex z, const char* fn) {
    if (is_nonpositive_integer(z)) {
        throw PoleError(z, std::string(fn) + ": pole at nonpositive integer " + format_complex(z));
    }
}

// Number of unit shifts that move z to Re >= kStirlingRadius.
int shift_count(Complex z) {
    if (z.real() >= kStirlingRadius) {
        return 0;
    }
    return static_cast<int>(std::ceil(kStirlingRadius - z.real()));
}

}  // namespace

Complex ln_gamma(Complex z) {
    reject_pole(z, "ln_gamma");
    // Fold -0 so the negative axis is approached from above.
    if (z.imag() == 0.0) {
        z = Complex(z.real(), 0.0);
    }
    const int shifts = shift_count(z);
    Complex correction = 0.0;
    for (int k = 0; k < shifts; ++k) {
        correction += principal_log(z + static_cast<double>(k));
    }
    const Complex w = z + static_cast<double>(shifts);
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex pow_inv = inv;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        series += bernoulli(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * pow_inv;
        pow_inv *= inv2;
    }
    const Complex stirling = (w - 0.5) * principal_log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
    return stirling - correction;
}

Complex gamma(Complex z) { return std::exp(ln_gamma(z)); }

Complex digamma(Complex z) {
    reject_pole(z, "digamma");
    const int shifts = shift_count(z);
    Complex correction = 0.0;
    for (int k = 0; k < shifts; ++k) {
        correction += 1.0 / (z + static_cast<double>(k));
    }
    const Complex w = z + static_cast<double>(shifts);
    const Complex inv2 = 1.0 / (w * w);
    Complex series = 0.0;
    Complex pow_inv = inv2;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        series += bernoulli(2 * k) / (2.0 * k) * pow_inv;
        pow_inv *= inv2;
    }
    return principal_log(w) - 0.5 / w - series - correction;
}

}  // namespace fracsum::special
