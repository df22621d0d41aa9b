#include "kronwebs/exact_core.hpp"

#include <regex>

namespace kronwebs {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
    static const std::regex pattern(R"(\s*([+-]?\d+)(/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw ParseError("malformed rational: '" + text + "'");
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    mpz_class den(1);
    if (m[3].matched) den = mpz_class(m[3].str());
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::column_vector(const Vec& v) { return from_columns(v.size(), {v}); }

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row counts differ");
    Mat m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column counts differ");
    Mat m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows_;
        c += b.cols_;
    }
    Mat m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows_;
        c += b.cols_;
    }
    return m;
}

Vec Mat::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(std::size_t i) const {
    return Vec(e_.begin() + static_cast<long>(i * cols_), e_.begin() + static_cast<long>((i + 1) * cols_));
}

Mat Mat::select_columns(const std::vector<std::size_t>& idx) const {
    Mat m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Mat m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Mat::is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    Mat m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    Mat m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
    return m;
}

Mat Mat::operator-() const {
    Mat m(*this);
    for (auto& x : m.e_) x = -x;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Mat m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) m(i, j) += a * o(k, j);
        }
    return m;
}

Vec Mat::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v[k]) != 0) r[i] += (*this)(i, k) * v[k];
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m(*this);
    for (auto& x : m.e_) x *= s;
    return m;
}

Mat operator*(const Scalar& s, const Mat& m) { return m.scaled(s); }

bool Mat::operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

Rref rref(Mat m) {
    Rref out;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Scalar det(const Mat& m0) {
    if (!m0.is_square()) throw DimensionMismatch("det of non-square matrix");
    Mat m = m0;
    const std::size_t n = m.rows();
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Rref r = rref(Mat::hstack(m, Mat::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    return r.reduced.block(0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    const std::size_t n = a.cols(), k = b.cols();
    Rref r = rref(Mat::hstack(a, b));
    Mat x(n, k);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::size_t p = r.pivots[i];
        if (p >= n) return std::nullopt;
        for (std::size_t j = 0; j < k; ++j) x(p, j) = r.reduced(i, n + j);
    }
    return x;
}

}  // namespace kronwebs
