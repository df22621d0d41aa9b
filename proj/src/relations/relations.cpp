#include "kronwebs/relations.hpp"

#include <algorithm>

namespace kronwebs {

ProjPoint::ProjPoint(const Scalar& l1, const Scalar& l2) {
    if (sgn(l1) == 0 && sgn(l2) == 0) throw InvalidArgument("projective point (0:0)");
    if (sgn(l1) != 0) {
        l1_ = 1;
        l2_ = l2 / l1;
    } else {
        l1_ = 0;
        l2_ = 1;
    }
}

LinearRelation::LinearRelation(std::size_t n, Subspace w_) : dim_v(n), w(std::move(w_)) {
    if (w.ambient_dim() != 2 * n) throw DimensionMismatch("relation subspace must live in V + V");
}

namespace {

// Columns of W's basis split into the left block X and the right block Y.
std::pair<Mat, Mat> halves(const LinearRelation& r) {
    const Mat& b = r.w.basis();
    return {b.block(0, 0, r.dim_v, b.cols()), b.block(r.dim_v, 0, r.dim_v, b.cols())};
}

}  // namespace

Subspace LinearRelation::ker_left() const {
    // (v, 0) in W: combinations of the basis with vanishing right half
    auto [x, y] = halves(*this);
    return Subspace::span(x * kernel(y).basis());
}

Subspace LinearRelation::ker_right() const {
    auto [x, y] = halves(*this);
    return Subspace::span(y * kernel(x).basis());
}

Subspace LinearRelation::image_left() const { return image(halves(*this).first); }
Subspace LinearRelation::image_right() const { return image(halves(*this).second); }

bool LinearRelation::is_bisurjective() const {
    return image_left().dim() == dim_v && image_right().dim() == dim_v;
}

Pencil::Pencil(Mat a, Mat b) : p1(std::move(a)), p2(std::move(b)) {
    if (p1.rows() != p2.rows() || p1.cols() != p2.cols()) throw DimensionMismatch("pencil maps differ in shape");
}

Mat Pencil::at(const ProjPoint& pt) const { return p1.scaled(pt.l1()) - p2.scaled(pt.l2()); }

Pencil relation_to_pencil(const LinearRelation& r) {
    if (!r.is_bisurjective()) throw NotBisurjective("relation projections are not both onto");
    const std::size_t n = r.dim_v;
    Mat p1 = r.ker_left().equations();
    if (p1.rows() == 0) p1 = Mat(0, n);
    auto [x, y] = halves(r);
    // Y is onto, so Y C = I has a solution; P2 v' = P1 x for any (x, v') in W.
    auto c = solve(y, Mat::identity(n));
    if (!c) throw InternalVerificationFailure("right projection lost surjectivity");
    return Pencil(p1, p1 * x * *c);
}

LinearRelation pencil_to_relation(const Pencil& p) {
    return LinearRelation(p.dim_v(), kernel(Mat::hstack(p.p1, -p.p2)));
}

Pencil equations_pencil(const LinearRelation& r) {
    const std::size_t n = r.dim_v;
    Mat eq = r.w.equations();
    if (eq.rows() == 0) return Pencil(Mat(0, n), Mat(0, n));
    return Pencil(eq.block(0, 0, eq.rows(), n), -eq.block(0, n, eq.rows(), n));
}

Subspace ker_point(const Pencil& p, const ProjPoint& pt) { return kernel(p.at(pt)); }

Subspace ker_point(const LinearRelation& r, const ProjPoint& pt) {
    return ker_point(equations_pencil(r), pt);
}

KroneckerCheck is_kronecker(const Pencil& p) {
    const Mat minus_p2 = -p.p2;
    const std::size_t g = generic_rank(p.p1, minus_p2);
    KroneckerCheck out{false, p.dim_v() - g, false, gcd_of_minors(p.p1, minus_p2, g)};
    out.degenerate = p.dim_target() > 0 && p.dim_v() > 0 && p.p1.is_zero() && p.p2.is_zero();
    out.kronecker = !out.degenerate && out.certificate.is_constant();
    return out;
}

KroneckerCheck is_kronecker(const LinearRelation& r) { return is_kronecker(equations_pencil(r)); }

SpectralCurve spectral_curve(const Pencil& p, const std::vector<ProjPoint>& pts) {
    auto check = is_kronecker(p);
    SpectralCurve out{{}, check.rank, check.kronecker, check.certificate, {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.kernels.push_back(ker_point(p, pts[i]));
        if (out.kernels.back().dim() > check.rank) out.jumps.push_back(i);
    }
    return out;
}

LinearRelation reconstruct_from_kernels(std::size_t dim_v, const std::vector<KernelSample>& data) {
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j)
            if (data[i].point == data[j].point) throw InvalidArgument("kernel samples repeat a point");
    std::vector<Vec> lifts;
    for (const auto& s : data) {
        if (s.kernel.ambient_dim() != dim_v) throw DimensionMismatch("kernel ambient differs from dim V");
        for (std::size_t c = 0; c < s.kernel.dim(); ++c) {
            Vec k = s.kernel.basis().column(c), lift(2 * dim_v);
            for (std::size_t i = 0; i < dim_v; ++i) {
                lift[i] = s.point.l1() * k[i];
                lift[dim_v + i] = s.point.l2() * k[i];
            }
            lifts.push_back(std::move(lift));
        }
    }
    return LinearRelation(dim_v, Subspace::span(2 * dim_v, lifts));
}

Pencil mobius_act(const Pencil& p, const Mat& g) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("Mobius transformation must be 2x2");
    if (det(g) == 0) throw SingularMatrix("Mobius transformation is singular");
    return Pencil(p.p1.scaled(g(0, 0)) + p.p2.scaled(g(0, 1)), p.p1.scaled(g(1, 0)) + p.p2.scaled(g(1, 1)));
}

ProjPoint mobius_pullback(const Mat& g, const ProjPoint& pt) {
    // l1 (aP1 + bP2) - l2 (cP1 + dP2) = (a l1 - c l2) P1 - (d l2 - b l1) P2
    return ProjPoint(g(0, 0) * pt.l1() - g(1, 0) * pt.l2(), g(1, 1) * pt.l2() - g(0, 1) * pt.l1());
}

LinearRelation relation_direct_sum(const std::vector<LinearRelation>& rs) {
    std::size_t n = 0;
    for (const auto& r : rs) n += r.dim_v;
    std::vector<Vec> vecs;
    std::size_t off = 0;
    for (const auto& r : rs) {
        for (std::size_t c = 0; c < r.w.dim(); ++c) {
            Vec b = r.w.basis().column(c), v(2 * n);
            for (std::size_t i = 0; i < r.dim_v; ++i) {
                v[off + i] = b[i];
                v[n + off + i] = b[r.dim_v + i];
            }
            vecs.push_back(std::move(v));
        }
        off += r.dim_v;
    }
    return LinearRelation(n, Subspace::span(2 * n, vecs));
}

LinearRelation kronecker_relation(std::size_t n) {
    if (n == 0) throw InvalidArgument("Kronecker block needs n >= 1");
    Mat eq(n - 1, 2 * n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        eq(k, k) = 1;
        eq(k, n + k + 1) = -1;
    }
    return LinearRelation(n, kernel(eq));
}

Mat jordan_cell(std::size_t n, const Scalar& mu) {
    Mat j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = mu;
        if (i + 1 < n) j(i, i + 1) = 1;
    }
    return j;
}

LinearRelation jordan_relation(std::size_t n, const ProjPoint& pt) {
    if (n == 0) throw InvalidArgument("Jordan block needs n >= 1");
    const Mat id = Mat::identity(n);
    if (sgn(pt.l1()) != 0) return LinearRelation(n, Subspace::span(Mat::vstack(id, jordan_cell(n, pt.l2()))));
    return LinearRelation(n, Subspace::span(Mat::vstack(jordan_cell(n, 0), id)));
}

LinearRelation transform_relation(const LinearRelation& r, const Mat& s) {
    if (s.rows() != r.dim_v || s.cols() != r.dim_v) throw DimensionMismatch("transform must be dim V square");
    return LinearRelation(r.dim_v, Subspace::span(Mat::block_diag({s, s}) * r.w.basis()));
}

LinearRelation restrict_relation(const LinearRelation& r, const Mat& basis) {
    if (basis.rows() != r.dim_v) throw DimensionMismatch("basis rows must equal dim V");
    const std::size_t k = basis.cols();
    Mat eq = r.w.equations();
    if (eq.rows() == 0) return LinearRelation(k, Subspace::full(2 * k));
    return LinearRelation(k, kernel(eq * Mat::block_diag({basis, basis})));
}

}  // namespace kronwebs
