#include <algorithm>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

PolyMat::PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

PolyMat PolyMat::identity(std::size_t n) {
    PolyMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = UniPoly(1);
    return m;
}

PolyMat PolyMat::pencil(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil matrices differ in shape");
    PolyMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = UniPoly(std::vector<Scalar>{b(i, j), a(i, j)});
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("polynomial matrix product: inner dimensions differ");
    PolyMat m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += (*this)(i, k) * o(k, j);
        }
    return m;
}

bool PolyMat::operator==(const PolyMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

Mat PolyMat::eval(const Scalar& t) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(t);
    return m;
}

UniPoly PolyMat::det() const {
    if (rows_ != cols_) throw DimensionMismatch("det of non-square polynomial matrix");
    // Fraction-free elimination: entries stay polynomial, exact division by the previous pivot.
    PolyMat m = *this;
    const std::size_t n = rows_;
    UniPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return UniPoly();
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = UniPoly();
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

bool PolyMat::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

namespace {

struct SnfWork {
    PolyMat a, left, right;
    bool track;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
        if (track)
            for (std::size_t j = 0; j < left.cols(); ++j) std::swap(left(i, j), left(k, j));
    }
    void swap_cols(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
        if (track)
            for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, k));
    }
    // row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const UniPoly& q) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(k, j).is_zero()) a(i, j) += q * a(k, j);
        if (track)
            for (std::size_t j = 0; j < left.cols(); ++j)
                if (!left(k, j).is_zero()) left(i, j) += q * left(k, j);
    }
    // col_i += q * col_k
    void add_col(std::size_t i, std::size_t k, const UniPoly& q) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (!a(r, k).is_zero()) a(r, i) += q * a(r, k);
        if (track)
            for (std::size_t r = 0; r < right.rows(); ++r)
                if (!right(r, k).is_zero()) right(r, i) += q * right(r, k);
    }
    void scale_row(std::size_t i, const Scalar& s) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j).scaled(s);
        if (track)
            for (std::size_t j = 0; j < left.cols(); ++j) left(i, j) = left(i, j).scaled(s);
    }

    std::vector<UniPoly> run() {
        const std::size_t m = a.rows(), n = a.cols();
        std::vector<UniPoly> factors;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            for (;;) {
                // lowest-degree nonzero entry, ties broken row-major
                std::size_t pi = m, pj = n;
                int best = -1;
                for (std::size_t i = t; i < m; ++i)
                    for (std::size_t j = t; j < n; ++j) {
                        const int d = a(i, j).degree();
                        if (d >= 0 && (best < 0 || d < best)) {
                            best = d;
                            pi = i;
                            pj = j;
                        }
                    }
                if (best < 0) return factors;
                swap_rows(t, pi);
                swap_cols(t, pj);
                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a(i, t).is_zero()) continue;
                    auto [q, r] = a(i, t).divmod(a(t, t));
                    add_row(i, t, -q);
                    if (!r.is_zero()) clean = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a(t, j).is_zero()) continue;
                    auto [q, r] = a(t, j).divmod(a(t, t));
                    add_col(j, t, -q);
                    if (!r.is_zero()) clean = false;
                }
                if (!clean) continue;
                // the pivot must divide the rest of the submatrix
                std::size_t bad = m;
                for (std::size_t i = t + 1; i < m && bad == m; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (!a(i, j).is_zero() && !(a(i, j) % a(t, t)).is_zero()) {
                            bad = i;
                            break;
                        }
                if (bad == m) break;
                add_row(t, bad, UniPoly(1));
            }
            scale_row(t, 1 / a(t, t).lead());
            factors.push_back(a(t, t));
        }
        return factors;
    }
};

}  // namespace

SmithForm smith_normal_form(const PolyMat& p) {
    SnfWork w{p, PolyMat::identity(p.rows()), PolyMat::identity(p.cols()), true};
    SmithForm out;
    out.invariant_factors = w.run();
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    return out;
}

std::vector<UniPoly> invariant_factors(const PolyMat& p) {
    SnfWork w{p, PolyMat(), PolyMat(), false};
    return w.run();
}

std::size_t generic_rank(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil matrices differ in shape");
    // Rank drops only at roots of a nonzero minor of degree <= min(rows, cols),
    // so the maximum over that many + 1 points of l1 = 1 plus l1 = 0 is exact.
    const std::size_t k = std::min(a.rows(), a.cols());
    std::size_t best = rank(b);
    for (std::size_t t = 0; t <= k && best < k; ++t) best = std::max(best, rank(a + b.scaled(Scalar(static_cast<long>(t)))));
    return best;
}

std::vector<NullVector> minimal_nullspace_basis(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil matrices differ in shape");
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t want = n - generic_rank(a, b);
    std::vector<NullVector> out;
    if (want == 0) return out;
    // stacked coefficient vectors (v_0, ..., v_d) of each chosen vector
    std::vector<std::pair<int, Vec>> chosen;
    for (std::size_t d = 0; d <= n && out.size() < want; ++d) {
        const std::size_t blocks = d + 1;
        // (l a + b) sum l^i v_i = 0: b v_0 = 0, a v_{i-1} + b v_i = 0, a v_d = 0
        Mat sys(m * (d + 2), n * blocks);
        for (std::size_t i = 0; i <= d; ++i) {
            sys.set_block(m * i, n * i, b);
            sys.set_block(m * (i + 1), n * i, a);
        }
        Subspace ker = kernel(sys);
        // shifts l^s * u of the vectors already chosen
        std::vector<Vec> span_vecs;
        for (const auto& [deg, coeffs] : chosen)
            for (std::size_t s = 0; s + static_cast<std::size_t>(deg) <= d; ++s) {
                Vec v(n * blocks);
                std::copy(coeffs.begin(), coeffs.end(), v.begin() + static_cast<long>(s * n));
                span_vecs.push_back(std::move(v));
            }
        std::size_t current = span_vecs.empty() ? 0 : rank(Mat::from_columns(n * blocks, span_vecs));
        for (std::size_t c = 0; c < ker.dim() && out.size() < want; ++c) {
            Vec cand = ker.basis().column(c);
            span_vecs.push_back(cand);
            std::size_t r = rank(Mat::from_columns(n * blocks, span_vecs));
            if (r == current) {
                span_vecs.pop_back();
                continue;
            }
            current = r;
            chosen.push_back({static_cast<int>(d), cand});
            NullVector nv{static_cast<int>(d), std::vector<UniPoly>(n)};
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Scalar> cs(blocks);
                for (std::size_t i = 0; i < blocks; ++i) cs[i] = cand[i * n + j];
                nv.entries[j] = UniPoly(std::move(cs));
            }
            out.push_back(std::move(nv));
        }
    }
    if (out.size() != want) throw InternalVerificationFailure("minimal nullspace search exceeded its degree cap");
    return out;
}

BinaryForm gcd_of_minors(const Mat& a, const Mat& b, std::size_t r) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil matrices differ in shape");
    if (r > std::min(a.rows(), a.cols())) throw InvalidArgument("minor order exceeds matrix size");
    if (r == 0) return BinaryForm::one();
    // gcd of r x r minors = product of the first r invariant factors. Two
    // dehomogenizations recover the form: l2 = 1 gives the affine part, l1 = 1
    // gives the multiplicity of the point (1:0).
    auto f12 = invariant_factors(PolyMat::pencil(a, b));
    if (f12.size() < r) return BinaryForm();
    UniPoly d(1);
    for (std::size_t i = 0; i < r; ++i) d = d * f12[i];
    auto f21 = invariant_factors(PolyMat::pencil(b, a));
    int e = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const UniPoly& f = f21[i];
        int k = 0;
        while (sgn(f.coeff(k)) == 0) ++k;
        e += k;
    }
    return BinaryForm::homogenize(d, e).normalized();
}

}  // namespace kronwebs
