#include <optional>

#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

CommAlgebra::CommAlgebra(std::size_t m, std::vector<Vec> products) : m_(m), p_(std::move(products)) {
    if (m == 0) throw InvalidArgument("algebra must be nonzero");
    if (p_.size() != m * m) throw DimensionMismatch("need m*m products");
    for (const auto& v : p_)
        if (v.size() != m) throw DimensionMismatch("product has the wrong length");
    for (std::size_t a = 0; a < m; ++a) {
        Vec ea(m);
        ea[a] = 1;
        if (product(0, a) != ea || product(a, 0) != ea) throw NotUnital("e_0 is not the unit");
        for (std::size_t b = 0; b < m; ++b)
            if (product(a, b) != product(b, a)) throw NotCommutative("e_a e_b != e_b e_a");
    }
    // (e_a e_b) e_c = e_a (e_b e_c)
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                Vec lhs(m), rhs(m);
                for (std::size_t d = 0; d < m; ++d) {
                    const Scalar& x = product(a, b)[d];
                    const Scalar& y = product(b, c)[d];
                    for (std::size_t e = 0; e < m; ++e) {
                        if (sgn(x) != 0) lhs[e] += x * product(d, c)[e];
                        if (sgn(y) != 0) rhs[e] += y * product(a, d)[e];
                    }
                }
                if (lhs != rhs) throw NotAssociative("(e_a e_b) e_c != e_a (e_b e_c)");
            }
}

CommAlgebra truncated_polynomial_algebra(std::size_t k) {
    if (k == 0) throw InvalidArgument("K[z]/z^k needs k >= 1");
    std::vector<Vec> p(k * k, Vec(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a + b < k) p[a * k + b][a + b] = 1;
    return CommAlgebra(k, std::move(p));
}

CommAlgebra b_algebra(std::size_t k) {
    if (k == 0) throw InvalidArgument("B_k needs k >= 1");
    // basis 1, z1..z1^(k-1), z2..z2^(k-1), w = z1^k = z2^k
    const std::size_t m = 2 * k;
    struct Mono {
        std::size_t e1, e2;
    };
    std::vector<Mono> basis{{0, 0}};
    for (std::size_t a = 1; a < k; ++a) basis.push_back({a, 0});
    for (std::size_t a = 1; a < k; ++a) basis.push_back({0, a});
    basis.push_back({k, 0});
    auto index = [&](Mono x) -> std::optional<std::size_t> {
        if (x.e1 > 0 && x.e2 > 0) return std::nullopt;  // z1 z2 = 0
        const std::size_t e = x.e1 + x.e2;
        if (e == 0) return 0;
        if (e > k) return std::nullopt;
        if (e == k) return m - 1;
        return x.e1 > 0 ? e : k - 1 + e;
    };
    std::vector<Vec> p(m * m, Vec(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (auto c = index({basis[a].e1 + basis[b].e1, basis[a].e2 + basis[b].e2})) p[a * m + b][*c] = 1;
    return CommAlgebra(m, std::move(p));
}

LieAlgebraData tensor_with_algebra(const LieAlgebraData& g, const CommAlgebra& a) {
    const std::size_t n = g.n(), m = a.dim(), dim = n * m;
    LieAlgebraData out(dim, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(g.c(i, j, k)) == 0) continue;
                for (std::size_t x = 0; x < m; ++x)
                    for (std::size_t y = 0; y < m; ++y)
                        for (std::size_t z = 0; z < m; ++z) {
                            const Scalar& mu = a.product(x, y)[z];
                            if (sgn(mu) == 0) continue;
                            // [x_i (x) e_x, x_j (x) e_y] += c_ij^k m_xy^z x_k (x) e_z
                            const std::size_t u = x * n + i, v = y * n + j, w = z * n + k;
                            out.set(u, v, w, out.c(u, v, w) + g.c(i, j, k) * mu);
                        }
            }
    return validate_lie(out);
}

LieAlgebraData semidirect_double(const LieAlgebraData& g) { return tensor_with_algebra(g, truncated_polynomial_algebra(2)); }

}  // namespace kronwebs
