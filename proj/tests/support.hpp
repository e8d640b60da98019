#pragma once

#include <complex>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "fracsum/complex.hpp"

namespace testing {

inline std::string show(fracsum::Complex z) { return fracsum::format_complex(z); }

// |got - want| <= tol, with a readable message on failure.
#define CHECK_NEAR(got, want, tol)                                                            \
    do {                                                                                      \
        const fracsum::Complex got_ = (got);                                                  \
        const fracsum::Complex want_ = (want);                                                \
        INFO("got " << testing::show(got_) << " want " << testing::show(want_) << " diff "   \
                    << std::abs(got_ - want_));                                               \
        CHECK(std::abs(got_ - want_) <= (tol));                                               \
    } while (0)

// Relative distance, falling back to absolute near zero.
#define CHECK_REL(got, want, tol)                                                             \
    do {                                                                                      \
        const fracsum::Complex got_ = (got);                                                  \
        const fracsum::Complex want_ = (want);                                                \
        INFO("got " << testing::show(got_) << " want " << testing::show(want_));             \
        CHECK(std::abs(got_ - want_) <= (tol) * std::max(1.0, std::abs(want_)));              \
    } while (0)

}  // namespace testing
