#pragma once

#include <compare>
#include <string>

namespace fracsum {

/// Polynomial degree extended by -infinity, the degree of the zero polynomial
/// and of summands that tend to zero.
class Degree {
public:
    constexpr explicit Degree(int d) : d_(d < 0 ? kNegInf : d) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return d_ == kNegInf; }

    /// Only valid when !is_neg_infinity().
    constexpr int value() const { return d_; }

    /// Finite value or -1 for -infinity; handy for loop bounds.
    constexpr int value_or_minus_one() const { return is_neg_infinity() ? -1 : d_; }

    constexpr Degree operator+(int k) const {
        return is_neg_infinity() ? *this : Degree(d_ + k);
    }
    constexpr Degree operator-(int k) const {
        return is_neg_infinity() ? *this : Degree(d_ - k);
    }

    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr auto operator<=>(Degree a, Degree b) { return a.d_ <=> b.d_; }

    std::string to_string() const {
        return is_neg_infinity() ? std::string("neginf") : std::to_string(d_);
    }

private:
    static constexpr int kNegInf = -1;
    constexpr Degree() : d_(kNegInf) {}
    int d_;
};

}  // namespace fracsum
