#include "kronwebs/exact_core.hpp"

namespace kronwebs {

namespace {

// Pivot rows of a reduced column-echelon basis.
std::vector<std::size_t> pivot_rows(const Mat& basis) {
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::size_t i = 0;
        while (sgn(basis(i, j)) == 0) ++i;
        piv.push_back(i);
    }
    return piv;
}

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span(const Mat& columns) {
    Subspace s(columns.rows());
    if (columns.cols() == 0) return s;
    Rref r = rref(columns.transpose());
    const std::size_t k = r.pivots.size();
    s.basis_ = r.reduced.block(0, 0, k, columns.rows()).transpose();
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    return span(Mat::from_columns(ambient, vectors));
}

Subspace Subspace::full(std::size_t n) { return span(Mat::identity(n)); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
    return contains(span(Mat::column_vector(v)));
}

bool Subspace::contains(const Subspace& s) const {
    if (s.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
    if (s.dim() == 0) return true;
    return rank(Mat::hstack(basis_, s.basis_)) == dim();
}

Mat Subspace::equations() const {
    Subspace ann = kernel(basis_.transpose());
    return ann.basis().transpose();
}

Subspace Subspace::standard_complement() const {
    std::vector<bool> used(ambient_, false);
    for (auto p : pivot_rows(basis_)) used[p] = true;
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (used[i]) continue;
        Vec e(ambient_);
        e[i] = 1;
        vs.push_back(std::move(e));
    }
    return span(ambient_, vs);
}

bool Subspace::operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum of subspaces of different ambient spaces");
    return Subspace::span(Mat::hstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("intersection of subspaces of different ambient spaces");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
    // a*x = b*y  <=>  [a | -b] (x, y) = 0
    Subspace k = kernel(Mat::hstack(a.basis(), -b.basis()));
    Mat x = k.basis().block(0, 0, a.dim(), k.dim());
    return Subspace::span(a.basis() * x);
}

Subspace kernel(const Mat& m) {
    Rref r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> vs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(n, vs);
}

Subspace image(const Mat& m) { return Subspace::span(m); }

RankKernel rref_rank_kernel(const Mat& m) {
    Rref r = rref(m);
    const std::size_t k = r.pivots.size();
    Subspace rows = Subspace::span(r.reduced.block(0, 0, k, m.cols()).transpose());
    return {k, kernel(m), rows};
}

}  // namespace kronwebs
