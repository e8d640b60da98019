#pragma once

#include <vector>

namespace fracsum {

/// Bernoulli numbers B_0..B_max with the B_1 = -1/2 convention.
class BernoulliTable {
public:
    static constexpr int kMaxIndex = 60;

    /// Builds B_0..B_max_index. The values satisfy
    /// sum_{j=0}^{m} C(m+1, j) B_j = 0; they are generated through tangent
    /// numbers, which keeps full binary64 accuracy up to kMaxIndex.
    /// Throws ContractError for max_index < 0 or > kMaxIndex.
    static BernoulliTable compute(int max_index);

    double operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }
    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

private:
    explicit BernoulliTable(std::vector<double> v) : values_(std::move(v)) {}
    std::vector<double> values_;
};

/// Shared table up to kMaxIndex, computed once.
const BernoulliTable& bernoulli_table();

inline double bernoulli(int k) { return bernoulli_table()[k]; }

}  // namespace fracsum
