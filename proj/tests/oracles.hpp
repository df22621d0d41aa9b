#pragma once

// Slow reference computations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include "kronwebs/exact_core.hpp"

namespace oracle {

using kronwebs::Mat;
using kronwebs::Scalar;
using kronwebs::UniPoly;

// Dimension of {v(l) : deg v <= d, (l*a + b) v(l) = 0}, from the coefficient equations.
inline std::size_t polynomial_kernel_dim(const Mat& a, const Mat& b, int d) {
    const std::size_t r = a.rows(), c = a.cols(), k = static_cast<std::size_t>(d) + 1;
    Mat sys(r * (k + 1), c * k);
    for (std::size_t i = 0; i < k; ++i) {
        sys.set_block(i * r, i * c, b);        // coefficient of l^i gets b v_i
        sys.set_block((i + 1) * r, i * c, a);  // coefficient of l^(i+1) gets a v_i
    }
    return c * k - kronwebs::rank(sys);
}

// Coefficients (index j for l1^(k-j) l2^j) of det of the k x k submatrix, by Leibniz.
inline std::vector<Scalar> minor_form(const Mat& a, const Mat& b, const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<Scalar> total(k + 1);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<Scalar> prod{Scalar(inv % 2 ? -1 : 1)};
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar& x = a(rows[i], cols[perm[i]]);
            const Scalar& y = b(rows[i], cols[perm[i]]);
            std::vector<Scalar> next(prod.size() + 1);
            for (std::size_t j = 0; j < prod.size(); ++j) {
                next[j] += prod[j] * x;
                next[j + 1] += prod[j] * y;
            }
            prod = std::move(next);
        }
        for (std::size_t j = 0; j <= k; ++j) total[j] += prod[j];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline kronwebs::BinaryForm gcd_of_minors_by_enumeration(const Mat& a, const Mat& b, std::size_t k) {
    if (k == 0) return kronwebs::BinaryForm::one();
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    UniPoly g;
    int min_e = static_cast<int>(k) + 1;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            auto f = minor_form(a, b, r, c);
            std::size_t e = 0;
            while (e <= k && f[e] == 0) ++e;
            if (e > k) continue;
            min_e = std::min(min_e, static_cast<int>(e));
            // dehomogenize at l2 = 1 after removing l2^e
            std::vector<Scalar> p(k - e + 1);
            for (std::size_t j = e; j <= k; ++j) p[k - j] = f[j];
            g = kronwebs::gcd(g, UniPoly(p));
        }
    if (min_e > static_cast<int>(k)) return kronwebs::BinaryForm();
    const int deg = g.degree() + min_e;
    std::vector<Scalar> out(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= g.degree(); ++i) out[static_cast<std::size_t>(deg - i)] = g.coeff(i);
    return kronwebs::BinaryForm(deg, out);
}

}  // namespace oracle
