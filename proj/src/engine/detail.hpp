#pragma once

#include "fracsum/engine.hpp"

namespace fracsum::detail {

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
    void add(Complex x) {
        add_part(sum_re_, comp_re_, x.real());
        add_part(sum_im_, comp_im_, x.imag());
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

/// f(nu), with summand failures rethrown as errors that name nu.
Complex eval_at(const Summand& f, Complex nu);

}  // namespace fracsum::detail
