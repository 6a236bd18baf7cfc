#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aise::numeric {

// Neumaier-compensated summation; bit-stable across evaluation orders we use
// (inputs are always summed in a fixed order) and accurate for the 52-term
// weighted sums in the exposure formulas.
double compensated_sum(std::span<const double> values);

// Running compensated accumulator for loops that cannot materialize a span.
class Accumulator {
  public:
    void add(double x);
    double total() const { return sum_ + compensation_; }

  private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

// Nearest-rank quantile on an ascending-sorted vector: the ceil(q*n)-th order
// statistic, clamped to [1, n]. The single quantile convention shared by the
// region split and the box-plot statistics.
double nearest_rank_quantile(const std::vector<double>& sorted_values, double q);

// Splits n items into k contiguous parts whose sizes differ by at most one,
// earlier parts taking the remainder.
std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t k);

double mean(std::span<const double> values);

}  // namespace aise::numeric
