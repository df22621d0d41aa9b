#include "kronwebs/random.hpp"

#include <limits>

namespace kronwebs {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("Rng::below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x > limit);
    return x % n;
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw InvalidArgument("Rng::uniform: empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Rng::rational(long num_bound, long den_bound) {
    Scalar q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
}

Mat Rng::matrix(std::size_t rows, std::size_t cols, long num_bound, long den_bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(num_bound, den_bound);
    return m;
}

Mat Rng::integer_matrix(std::size_t rows, std::size_t cols, long bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(bound);
    return m;
}

Mat Rng::skew_matrix(std::size_t n, long num_bound, long den_bound) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rational(num_bound, den_bound);
            m(j, i) = -m(i, j);
        }
    return m;
}

Mat Rng::unimodular(std::size_t n, std::size_t steps, long bound) {
    Mat s = Mat::identity(n);
    if (n < 2) {
        if (n == 1 && coin()) s(0, 0) = -1;
        return s;
    }
    if (steps == 0) steps = 3 * n;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t i = below(n), j = below(n - 1);
        if (j >= i) ++j;
        long c = uniform(-bound, bound);
        if (c == 0) c = 1;
        // column i += c * column j
        for (std::size_t r = 0; r < n; ++r) s(r, i) += c * s(r, j);
    }
    // random column permutation and signs
    for (std::size_t i = n; i-- > 1;) {
        std::size_t j = below(i + 1);
        if (j != i)
            for (std::size_t r = 0; r < n; ++r) std::swap(s(r, i), s(r, j));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (coin())
            for (std::size_t r = 0; r < n; ++r) s(r, i) = -s(r, i);
    return s;
}

}  // namespace kronwebs
