#include <sstream>

#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

LieAlgebraData::LieAlgebraData(std::size_t n, const std::vector<BracketEntry>& brackets)
    : n_(n), c_(n * n * n) {
    for (const auto& b : brackets) {
        if (b.i >= n || b.j >= n) throw InvalidArgument("bracket index out of range");
        if (b.i == b.j) {
            for (const auto& [k, v] : b.coeffs)
                if (sgn(v) != 0) throw InvalidArgument("[x_i, x_i] must vanish");
            continue;
        }
        for (const auto& [k, v] : b.coeffs) {
            if (k >= n) throw InvalidArgument("bracket index out of range");
            set(b.i, b.j, k, c(b.i, b.j, k) + v);
        }
    }
}

void LieAlgebraData::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    c_[(i * n_ + j) * n_ + k] = value;
    c_[(j * n_ + i) * n_ + k] = -value;
}

Vec LieAlgebraData::bracket_basis(std::size_t i, std::size_t j) const {
    return Vec(c_.begin() + static_cast<long>((i * n_ + j) * n_), c_.begin() + static_cast<long>((i * n_ + j + 1) * n_));
}

Vec LieAlgebraData::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket arguments have the wrong length");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(y[j]) == 0 || i == j) continue;
            const Scalar s = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(c(i, j, k)) != 0) r[k] += s * c(i, j, k);
        }
    }
    return r;
}

std::vector<BracketEntry> LieAlgebraData::brackets() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            BracketEntry e{i, j, {}};
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(c(i, j, k)) != 0) e.coeffs.emplace_back(k, c(i, j, k));
            if (!e.coeffs.empty()) out.push_back(std::move(e));
        }
    return out;
}

LieAlgebraData validate_lie(const LieAlgebraData& g) {
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    // [[x_i,x_j],x_l] + [[x_j,x_l],x_i] + [[x_l,x_i],x_j], coordinate m
                    Scalar s = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        s += g.c(i, j, k) * g.c(k, l, m) + g.c(j, l, k) * g.c(k, i, m) + g.c(l, i, k) * g.c(k, j, m);
                    if (sgn(s) != 0) {
                        std::ostringstream os;
                        os << "Jacobi identity fails for (" << i << ", " << j << ", " << l << ") in coordinate " << m
                           << ": " << to_string(s);
                        throw JacobiViolation(os.str());
                    }
                }
    return g;
}

LieAlgebraData validate_lie(std::size_t n, const std::vector<BracketEntry>& brackets) {
    return validate_lie(LieAlgebraData(n, brackets));
}

LieAlgebraData abelian_algebra(std::size_t n) { return LieAlgebraData(n, {}); }

MPoly coadjoint_derivative(const LieAlgebraData& g, const MPoly& p, std::size_t i) {
    const std::size_t n = g.n();
    if (p.nvars() != n) throw DimensionMismatch("polynomial must be in dim g variables");
    MPoly r(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec lin(n);
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
            lin[k] = g.c(i, j, k);
            any = any || sgn(lin[k]) != 0;
        }
        if (!any) continue;
        MPoly d = p.derivative(j);
        if (!d.is_zero()) r += MPoly::linear(lin) * d;
    }
    return r;
}

bool is_invariant(const LieAlgebraData& g, const MPoly& p) {
    for (std::size_t i = 0; i < g.n(); ++i)
        if (!coadjoint_derivative(g, p, i).is_zero()) return false;
    return true;
}

InvariantPoly make_invariant(const LieAlgebraData& g, const MPoly& p) {
    for (std::size_t i = 0; i < g.n(); ++i)
        if (!coadjoint_derivative(g, p, i).is_zero())
            throw NotInvariant("polynomial is not invariant under basis element " + std::to_string(i));
    return InvariantPoly{p};
}

Mat lie_poisson_matrix(const LieAlgebraData& g, const Vec& beta) {
    const std::size_t n = g.n();
    if (beta.size() != n) throw DimensionMismatch("covector has the wrong length");
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar s = 0;
            for (std::size_t k = 0; k < n; ++k) s += g.c(i, j, k) * beta[k];
            m(i, j) = s;
            m(j, i) = -s;
        }
    return m;
}

Mat frozen_matrix(const LieAlgebraData& g, const Vec& c1) { return lie_poisson_matrix(g, c1); }

Mat cocycle_matrix(const LieAlgebraData& g, const Mat& c2) {
    const std::size_t n = g.n();
    if (c2.rows() != n || c2.cols() != n) throw DimensionMismatch("cocycle must be n x n");
    if (!c2.is_skew()) throw NotSkew("cocycle must be skew");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Scalar s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    s += g.c(i, j, l) * c2(l, k) + g.c(j, k, l) * c2(l, i) + g.c(k, i, l) * c2(l, j);
                if (sgn(s) != 0) {
                    std::ostringstream os;
                    os << "cocycle identity fails for (" << i << ", " << j << ", " << k << ")";
                    throw CocycleViolation(os.str());
                }
            }
    return c2;
}

std::vector<std::vector<MPoly>> symbolic_lie_poisson(const LieAlgebraData& g) {
    const std::size_t n = g.n();
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = MPoly::linear(g.bracket_basis(i, j));
    return m;
}

JacobiCompat jacobi_compat_check(const Mat& h1, const LieAlgebraData& g) {
    const std::size_t n = g.n();
    if (h1.rows() != n || h1.cols() != n) throw DimensionMismatch("h1 must be n x n");
    if (!h1.is_skew()) throw NotSkew("h1 must be skew");
    // Jacobiator of l1*h1 + l2*LP: the l1*l2 part is the cocycle condition on h1,
    // the l2^2 part (coefficient of beta_m) is the Jacobi identity of g.
    JacobiCompat r{true, true, true};
    for (std::size_t i = 0; i < n && r.cocycle_part; ++i)
        for (std::size_t j = i + 1; j < n && r.cocycle_part; ++j)
            for (std::size_t k = j + 1; k < n && r.cocycle_part; ++k) {
                Scalar s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    s += h1(i, l) * g.c(j, k, l) + h1(j, l) * g.c(k, i, l) + h1(k, l) * g.c(i, j, l);
                if (sgn(s) != 0) r.cocycle_part = false;
            }
    for (std::size_t i = 0; i < n && r.jacobi_part; ++i)
        for (std::size_t j = i + 1; j < n && r.jacobi_part; ++j)
            for (std::size_t k = j + 1; k < n && r.jacobi_part; ++k)
                for (std::size_t m = 0; m < n && r.jacobi_part; ++m) {
                    Scalar s = 0;
                    for (std::size_t l = 0; l < n; ++l)
                        s += g.c(i, l, m) * g.c(j, k, l) + g.c(j, l, m) * g.c(k, i, l) + g.c(k, l, m) * g.c(i, j, l);
                    if (sgn(s) != 0) r.jacobi_part = false;
                }
    r.ok = r.cocycle_part && r.jacobi_part;
    return r;
}

}  // namespace kronwebs
