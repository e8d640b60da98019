#pragma once

#include <complex>
#include <string>

namespace fracsum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// How cpow treats a zero base.
enum class ZeroPower {
    Undefined,  ///< 0^s is an error unless Re(s) > 0
    Zero,       ///< 0^s := 0 for every s (omits a nu = 0 term)
};

/// Principal logarithm with Im in (-pi, pi]. The negative real axis is reached
/// by continuity from above, so log(-1) = i*pi even when the imaginary part is -0.
Complex principal_log(Complex z);

/// z^s = exp(s * principal_log(z)).
Complex cpow(Complex z, Complex s, ZeroPower zero = ZeroPower::Undefined);

/// True when z is within `tol` of an integer on the real axis.
bool is_integer(Complex z, double tol = 0.0);

/// True when z is a nonpositive integer (0, -1, -2, ...), i.e. a pole of Gamma.
bool is_nonpositive_integer(Complex z, double tol = 0.0);

/// Shortest round-trip rendering of a double.
std::string format_double(double x);

/// "re+imi" rendering used by the CLI and reports.
std::string format_complex(Complex z);

}  // namespace fracsum
