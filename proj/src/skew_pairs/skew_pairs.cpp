#include "kronwebs/skew_pairs.hpp"

#include <algorithm>
#include <map>

namespace kronwebs {

SkewPair::SkewPair(Mat a, Mat b) : n(a.rows()), h1(std::move(a)), h2(std::move(b)) {
    if (!h1.is_square() || h1.rows() != h2.rows() || h1.cols() != h2.cols())
        throw DimensionMismatch("skew pair needs two n x n matrices");
    if (!h1.is_skew() || !h2.is_skew()) throw NotSkew("pair matrices must be skew-symmetric");
}

BlockSpec BlockSpec::kronecker(std::size_t dim) {
    if (dim % 2 == 0) throw InvalidArgument("Kronecker blocks have odd dimension");
    BlockSpec b;
    b.dim = dim;
    return b;
}

BlockSpec BlockSpec::jordan(std::size_t dim, const UniPoly& factor) {
    if (factor.degree() < 1) throw InvalidArgument("Jordan eigenvalue factor must be nonconstant");
    const std::size_t d = static_cast<std::size_t>(factor.degree());
    if (dim == 0 || dim % (2 * d) != 0) throw InvalidArgument("Jordan block dimension must be a multiple of 2*deg");
    BlockSpec b;
    b.kind = BlockKind::Jordan;
    b.dim = dim;
    b.factor = factor.monic();
    return b;
}

BlockSpec BlockSpec::jordan_infinity(std::size_t dim) {
    if (dim == 0 || dim % 2 != 0) throw InvalidArgument("Jordan blocks have even dimension");
    BlockSpec b;
    b.kind = BlockKind::Jordan;
    b.dim = dim;
    b.at_infinity = true;
    return b;
}

std::size_t BlockSpec::exponent() const {
    if (kind == BlockKind::Kronecker) return (dim + 1) / 2;
    const std::size_t d = at_infinity ? 1 : static_cast<std::size_t>(factor.degree());
    return dim / (2 * d);
}

std::string BlockSpec::str() const {
    if (kind == BlockKind::Kronecker) return "K" + std::to_string(dim);
    return "J" + std::to_string(dim) + "(" + (at_infinity ? std::string("inf") : factor.str("mu")) + ")";
}

bool BlockSpec::operator==(const BlockSpec& o) const {
    return kind == o.kind && dim == o.dim && at_infinity == o.at_infinity && factor == o.factor;
}

bool BlockSpec::operator<(const BlockSpec& o) const {
    if (kind != o.kind) return kind == BlockKind::Kronecker;
    if (dim != o.dim) return dim < o.dim;
    if (at_infinity != o.at_infinity) return !at_infinity;
    if (factor.degree() != o.factor.degree()) return factor.degree() < o.factor.degree();
    const auto& a = factor.coeffs();
    const auto& b = o.factor.coeffs();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SkewPair make_kron_pair(std::size_t k) {
    if (k == 0) throw InvalidArgument("Kronecker pair needs k >= 1");
    const std::size_t n = 2 * k - 1;
    Mat h1(n, n), h2(n, n);
    for (std::size_t l = 0; l + 1 < k; ++l) {
        h1(2 * l, 2 * l + 1) = 1;
        h1(2 * l + 1, 2 * l) = -1;
        h2(2 * l + 1, 2 * l + 2) = 1;
        h2(2 * l + 2, 2 * l + 1) = -1;
    }
    return SkewPair(h1, h2);
}

namespace {

// [[0, m], [-m^T, 0]]
Mat off_diagonal_form(const Mat& m) {
    const std::size_t k = m.rows();
    Mat h(2 * k, 2 * k);
    h.set_block(0, k, m);
    h.set_block(k, 0, -m.transpose());
    return h;
}

Mat companion(const UniPoly& q) {
    const std::size_t m = static_cast<std::size_t>(q.degree());
    Mat c(m, m);
    for (std::size_t j = 0; j + 1 < m; ++j) c(j + 1, j) = 1;
    for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -q.coeff(static_cast<int>(i));
    return c;
}

Mat poly_at(const UniPoly& p, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (int i = p.degree(); i >= 0; --i) r = r * a + Mat::identity(a.rows()).scaled(p.coeff(i));
    return r;
}

UniPoly charpoly(const Mat& a) { return PolyMat::pencil(Mat::identity(a.rows()), -a).det(); }

}  // namespace

SkewPair make_jordan_pair(std::size_t k, const ProjPoint& mu) {
    if (k == 0) throw InvalidArgument("Jordan pair needs k >= 1");
    const Mat id = off_diagonal_form(Mat::identity(k));
    if (sgn(mu.l1()) == 0) return SkewPair(id, off_diagonal_form(jordan_cell(k, 0)));
    return SkewPair(off_diagonal_form(jordan_cell(k, mu.l2())), id);
}

SkewPair canonical_pair(const BlockSpec& b) {
    if (b.kind == BlockKind::Kronecker) return make_kron_pair(b.exponent());
    if (b.at_infinity) return make_jordan_pair(b.exponent(), ProjPoint::infinity());
    if (b.factor.degree() == 1) return make_jordan_pair(b.exponent(), -b.factor.coeff(0));
    const UniPoly q = b.factor.pow(static_cast<int>(b.exponent()));
    return SkewPair(off_diagonal_form(companion(q)), off_diagonal_form(Mat::identity(b.dim / 2)));
}

SkewPair pair_direct_sum(const std::vector<SkewPair>& ps) {
    std::vector<Mat> a, b;
    for (const auto& p : ps) {
        a.push_back(p.h1);
        b.push_back(p.h2);
    }
    return SkewPair(Mat::block_diag(a), Mat::block_diag(b));
}

SkewPair conjugate(const SkewPair& p, const Mat& s) {
    if (s.rows() != p.n || !s.is_square()) throw DimensionMismatch("conjugating matrix must be n x n");
    if (det(s) == 0) throw SingularMatrix("conjugating matrix is singular");
    const Mat st = s.transpose();
    return SkewPair(st * p.h1 * s, st * p.h2 * s);
}

std::vector<BlockSpec> block_invariants(const SkewPair& p) {
    std::vector<BlockSpec> out;
    for (const auto& v : minimal_nullspace_basis(p.h1, p.h2))
        out.push_back(BlockSpec::kronecker(2 * static_cast<std::size_t>(v.degree) + 1));

    // finite part: h1 - mu*h2
    std::map<std::pair<std::vector<Scalar>, int>, int> finite;
    for (const auto& f : invariant_factors(PolyMat::pencil(-p.h2, p.h1)))
        for (const auto& pf : factor_over_q(f)) ++finite[{pf.factor.coeffs(), pf.multiplicity}];
    // infinite part: powers of nu in nu*h1 - h2
    std::map<int, int> infinite;
    for (const auto& f : invariant_factors(PolyMat::pencil(p.h1, -p.h2))) {
        int e = 0;
        while (e <= f.degree() && sgn(f.coeff(e)) == 0) ++e;
        if (e > 0) ++infinite[e];
    }
    for (const auto& [key, count] : finite) {
        if (count % 2 != 0) throw InternalVerificationFailure("elementary divisor with odd multiplicity");
        UniPoly g(key.first);
        for (int c = 0; c < count / 2; ++c)
            out.push_back(BlockSpec::jordan(2 * static_cast<std::size_t>(g.degree() * key.second), g));
    }
    for (const auto& [e, count] : infinite) {
        if (count % 2 != 0) throw InternalVerificationFailure("elementary divisor at infinity with odd multiplicity");
        for (int c = 0; c < count / 2; ++c) out.push_back(BlockSpec::jordan_infinity(2 * static_cast<std::size_t>(e)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct FoundBlock {
    BlockSpec spec;
    Mat basis;  // global coordinates
};

// Vectors x of the current space with a(b, x) = 0 for every column b of blk, for each form a.
Mat joint_orthogonal(const Mat& blk, const std::vector<const Mat*>& forms) {
    Mat rows(0, blk.rows());
    for (const Mat* a : forms) rows = Mat::vstack(rows, blk.transpose() * *a);
    return kernel(rows).basis();
}

// Peels one Kronecker block from a pair without joint kernel; q maps local to global.
FoundBlock peel_kronecker(const NullVector& v, const Mat& a1, const Mat& a2, const Mat& q, Mat& complement) {
    const std::size_t m = a1.rows();
    const std::size_t eps = static_cast<std::size_t>(v.degree);
    std::vector<Vec> e(eps + 1, Vec(m));
    for (std::size_t l = 0; l <= eps; ++l)
        for (std::size_t j = 0; j < m; ++j) e[l][j] = v.entries[j].coeff(static_cast<int>(l));

    // unknowns o_0..o_{eps-1}, stacked
    const std::size_t unknowns = m * eps;
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    for (std::size_t l = 1; l < eps; ++l)  // a1 o_l + a2 o_{l-1} = 0
        for (std::size_t i = 0; i < m; ++i) {
            Vec r(unknowns);
            for (std::size_t j = 0; j < m; ++j) {
                r[l * m + j] += a1(i, j);
                r[(l - 1) * m + j] += a2(i, j);
            }
            rows.push_back(std::move(r));
            rhs.push_back(0);
        }
    for (std::size_t l = 0; l <= eps; ++l) {
        Vec e1(m), e2(m);  // e_l^T a1, e_l^T a2
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                e1[j] += e[l][i] * a1(i, j);
                e2[j] += e[l][i] * a2(i, j);
            }
        for (std::size_t o = 0; o < eps; ++o) {
            Vec r1(unknowns), r2(unknowns);
            for (std::size_t j = 0; j < m; ++j) {
                r1[o * m + j] = e1[j];
                r2[o * m + j] = e2[j];
            }
            rows.push_back(std::move(r1));
            rhs.push_back(l == o ? 1 : 0);
            rows.push_back(std::move(r2));
            rhs.push_back(l == o + 1 ? -1 : 0);
        }
    }
    Mat sys(rows.size(), unknowns);
    Mat b(rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
        b(i, 0) = rhs[i];
    }
    auto sol = solve(sys, b);
    if (!sol) throw InternalVerificationFailure("no dual chain for a minimal null vector");

    Mat blk(m, 2 * eps + 1);
    for (std::size_t l = 0; l <= eps; ++l)
        for (std::size_t j = 0; j < m; ++j) blk(j, 2 * l) = e[l][j];
    for (std::size_t o = 0; o < eps; ++o)
        for (std::size_t j = 0; j < m; ++j) blk(j, 2 * o + 1) = (*sol)(o * m + j, 0);

    complement = joint_orthogonal(blk, {&a1, &a2});
    if (complement.cols() + blk.cols() != m) throw InternalVerificationFailure("Kronecker block has no orthogonal complement");
    return {BlockSpec::kronecker(2 * eps + 1), q * blk};
}

// Splits a primary component in which a is invertible and g = a^{-1} b has one
// irreducible characteristic factor. Blocks are appended to out.
void split_primary(Mat a, Mat b, Mat q, bool infinite, std::vector<FoundBlock>& out) {
    while (q.cols() > 0) {
        const std::size_t m = a.rows();
        const Mat g = inverse(a) * b;
        auto fac = factor_over_q(charpoly(g));
        if (fac.size() != 1) throw InternalVerificationFailure("primary component has several eigenvalue factors");
        const UniPoly f = fac[0].factor;
        const std::size_t d = static_cast<std::size_t>(f.degree());
        const Mat t = poly_at(f, g);
        std::vector<Mat> tp{Mat::identity(m)};
        while (!tp.back().is_zero()) tp.push_back(tp.back() * t);
        const std::size_t k = tp.size() - 1;
        const Mat pair = a * tp[k - 1];
        std::size_t zi = 0, wi = 0;
        bool found = false;
        for (std::size_t i = 0; i < m && !found; ++i)
            for (std::size_t j = 0; j < m && !found; ++j)
                if (sgn(pair(i, j)) != 0) {
                    zi = i;
                    wi = j;
                    found = true;
                }
        if (!found) throw InternalVerificationFailure("degenerate form on a primary component");
        const std::size_t len = d * k;
        Vec z(m), w(m);
        z[zi] = 1;
        w[wi] = 1;

        std::vector<Vec> zs{z}, ys;
        for (std::size_t i = 1; i < len; ++i) zs.push_back(g * zs.back());
        if (d == 1) {
            const Mat shift = g - Mat::identity(m).scaled(-f.coeff(0));
            ys.assign(k, Vec());
            ys[k - 1] = w;
            for (std::size_t j = k - 1; j-- > 0;) ys[j] = shift * ys[j + 1];
        } else {
            ys.push_back(w);
            for (std::size_t i = 1; i < len; ++i) ys.push_back(g * ys.back());
        }
        const Mat zb = Mat::from_columns(m, zs), yb = Mat::from_columns(m, ys);
        const Mat xb = zb * inverse(zb.transpose() * a * yb).transpose();

        const Mat blk = Mat::hstack(xb, yb);
        BlockSpec spec = infinite ? BlockSpec::jordan_infinity(2 * len) : BlockSpec::jordan(2 * len, f);
        out.push_back({spec, q * blk});

        const Mat comp = joint_orthogonal(blk, {&a});
        if (comp.cols() + blk.cols() != m) throw InternalVerificationFailure("Jordan block has no orthogonal complement");
        a = comp.transpose() * a * comp;
        b = comp.transpose() * b * comp;
        q = q * comp;
    }
}

}  // namespace

Decomposition decompose(const SkewPair& p) {
    const std::size_t n = p.n;
    std::vector<FoundBlock> found;

    // joint kernel: one-dimensional Kronecker blocks
    const Subspace radical = kernel(Mat::vstack(p.h1, p.h2));
    for (std::size_t c = 0; c < radical.dim(); ++c)
        found.push_back({BlockSpec::kronecker(1), radical.basis().select_columns({c})});
    Mat q = radical.standard_complement().basis();

    while (q.cols() > 0) {
        const Mat a1 = q.transpose() * p.h1 * q, a2 = q.transpose() * p.h2 * q;
        auto nb = minimal_nullspace_basis(a1, a2);
        if (nb.empty()) break;
        Mat comp;
        found.push_back(peel_kronecker(nb.front(), a1, a2, q, comp));
        q = q * comp;
    }

    if (q.cols() > 0) {
        // split the regular part into primary components of N = (h2 + t h1)^{-1} h1
        const Mat a1 = q.transpose() * p.h1 * q, a2 = q.transpose() * p.h2 * q;
        const std::size_t m = a1.rows();
        Scalar t = 0;
        for (long i = 0;; ++i) {
            t = (i % 2 == 0) ? Scalar(i / 2) : Scalar(-(i + 1) / 2);
            if (det(a2 + a1.scaled(t)) != 0) break;
            if (i > static_cast<long>(2 * m + 2)) throw InternalVerificationFailure("regular part has no invertible member");
        }
        const Mat nmat = inverse(a2 + a1.scaled(t)) * a1;
        for (const auto& pf : factor_over_q(charpoly(nmat))) {
            const Mat fn = poly_at(pf.factor, nmat);
            Mat power = Mat::identity(m);
            for (int e = 0; e < pf.multiplicity; ++e) power = power * fn;
            const Mat cq = kernel(power).basis();
            const Mat b1 = cq.transpose() * a1 * cq, b2 = cq.transpose() * a2 * cq;
            const bool infinite = det(b2) == 0;
            if (infinite)
                split_primary(b1, b2, q * cq, true, found);
            else
                split_primary(b2, b1, q * cq, false, found);
        }
    }

    std::stable_sort(found.begin(), found.end(),
                     [](const FoundBlock& x, const FoundBlock& y) { return x.spec < y.spec; });
    Decomposition out;
    out.basis = Mat(n, 0);
    std::vector<Mat> c1, c2;
    for (const auto& f : found) {
        out.blocks.push_back(f.spec);
        out.basis = Mat::hstack(out.basis, f.basis);
        const SkewPair c = canonical_pair(f.spec);
        c1.push_back(c.h1);
        c2.push_back(c.h2);
    }
    if (out.basis.cols() != n || det(out.basis) == 0)
        throw InternalVerificationFailure("adapted basis is not a basis");
    const Mat bt = out.basis.transpose();
    if (bt * p.h1 * out.basis != Mat::block_diag(c1) || bt * p.h2 * out.basis != Mat::block_diag(c2))
        throw InternalVerificationFailure("adapted basis does not produce the canonical blocks");
    if (out.blocks != block_invariants(p))
        throw InternalVerificationFailure("constructed blocks disagree with the pencil invariants");
    return out;
}

}  // namespace kronwebs
