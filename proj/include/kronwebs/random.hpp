#pragma once

// Seeded generator for rational test data. Draws are reduced from the raw
// mt19937_64 stream by rejection, so a seed gives the same values everywhere.

#include <cstdint>
#include <random>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n);
    long uniform(long lo, long hi);
    bool coin() { return below(2) == 1; }
    // num in [-num_bound, num_bound], den in [1, den_bound]
    Scalar rational(long num_bound = 1000, long den_bound = 100);
    Scalar integer(long bound) { return Scalar(uniform(-bound, bound)); }
    Mat matrix(std::size_t rows, std::size_t cols, long num_bound = 1000, long den_bound = 100);
    Mat integer_matrix(std::size_t rows, std::size_t cols, long bound);
    Mat skew_matrix(std::size_t n, long num_bound, long den_bound);
    // Product of random integer elementary matrices; determinant +-1.
    Mat unimodular(std::size_t n, std::size_t steps = 0, long bound = 2);

private:
    std::mt19937_64 eng_;
};

}  // namespace kronwebs
