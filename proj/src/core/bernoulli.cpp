#include "fracsum/bernoulli.hpp"

#include <cmath>
#include <string>

#include "fracsum/errors.hpp"

namespace fracsum {

BernoulliTable BernoulliTable::compute(int max_index) {
    if (max_index < 0) {
        throw ContractError("bernoulli_numbers: max_index must be >= 0");
    }
    if (max_index > kMaxIndex) {
        throw ContractError("bernoulli_numbers: max_index " + std::to_string(max_index) +
                            " exceeds " + std::to_string(kMaxIndex) +
                            " (binary64 accuracy exhausted)");
    }
    // The defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 cancels
    // catastrophically past B_30 in floating point. The tangent numbers T_k
    // (Brent-Harvey) only ever add positive terms, and
    // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
    std::vector<double> b(static_cast<std::size_t>(max_index) + 1, 0.0);
    b[0] = 1.0;
    if (max_index >= 1) {
        b[1] = -0.5;
    }
    const int kmax = max_index / 2;
    std::vector<double> t(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (kmax >= 1) {
        t[1] = 1.0;
    }
    for (int k = 2; k <= kmax; ++k) {
        t[k] = (k - 1) * t[k - 1];
    }
    for (int k = 2; k <= kmax; ++k) {
        for (int j = k; j <= kmax; ++j) {
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
        }
    }
    for (int k = 1; k <= kmax; ++k) {
        const double four_k = std::ldexp(1.0, 2 * k);
        const double sign = k % 2 == 1 ? 1.0 : -1.0;
        b[static_cast<std::size_t>(2 * k)] = sign * 2.0 * k * t[k] / (four_k * (four_k - 1.0));
    }
    return BernoulliTable(std::move(b));
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table = BernoulliTable::compute(BernoulliTable::kMaxIndex);
    return table;
}

}  // namespace fracsum
