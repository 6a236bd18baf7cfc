#include "aise/numeric.hpp"

#include <cassert>
#include <cmath>

namespace aise::numeric {

void Accumulator::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double compensated_sum(std::span<const double> values) {
    Accumulator acc;
    for (double v : values) {
        acc.add(v);
    }
    return acc.total();
}

double nearest_rank_quantile(const std::vector<double>& sorted_values, double q) {
    assert(!sorted_values.empty());
    const auto n = sorted_values.size();
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    if (rank < 1) rank = 1;
    if (rank > n) rank = n;
    return sorted_values[rank - 1];
}

std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t k) {
    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i) {
        ++sizes[i];
    }
    return sizes;
}

double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return compensated_sum(values) / static_cast<double>(values.size());
}

}  // namespace aise::numeric
