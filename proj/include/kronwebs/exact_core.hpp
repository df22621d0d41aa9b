#pragma once

/*
 * Exact linear algebra over the rationals.
 *
 * Scalars are GMP rationals. Matrices are dense and row-major. A Subspace
 * stores its basis as the columns of a reduced column-echelon matrix, so two
 * Subspace values compare equal exactly when they span the same space.
 *
 * Univariate polynomials are stored lowest degree first. Binary forms in
 * (l1, l2) keep index j for the monomial l1^(d-j) l2^j. Polynomial matrices
 * serve the pencil l*A + B and carry the Smith normal form.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronwebs/errors.hpp"

namespace kronwebs {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Mat column_vector(const Vec& v);
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);
    static Mat block_diag(const std::vector<Mat>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Scalar>& entries() const { return e_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    Mat select_columns(const std::vector<std::size_t>& idx) const;
    Mat select_rows(const std::vector<std::size_t>& idx) const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& m);

    Mat transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_skew() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat scaled(const Scalar& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> e_;
};

Mat operator*(const Scalar& s, const Mat& m);

struct Rref {
    Mat reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(Mat m);
std::size_t rank(const Mat& m);
Scalar det(const Mat& m);
Mat inverse(const Mat& m);
// Some x with a*x = b, or nothing when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0);
    // Column span of m, canonicalized.
    static Subspace span(const Mat& columns);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    // Matrix whose kernel is this subspace (rows form a basis of the annihilator).
    Mat equations() const;
    // Canonical complement spanned by standard basis vectors.
    Subspace standard_complement() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    Mat basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);

struct RankKernel {
    std::size_t rank;
    Subspace kernel;
    Subspace rowspace;
};

RankKernel rref_rank_kernel(const Mat& m);

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Scalar& constant);
    UniPoly(int constant) : UniPoly(Scalar(constant)) {}
    explicit UniPoly(std::vector<Scalar> coeffs);

    static UniPoly x();
    static UniPoly monomial(const Scalar& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    const Scalar& lead() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Scalar& s) const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Quotient and remainder; throws on division by zero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    Scalar eval(const Scalar& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(int e) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);
// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtGcd {
    UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

// Distinct rational roots, ascending.
std::vector<Scalar> rational_roots(const UniPoly& p);

// Factorization into monic pairwise coprime factors with multiplicities.
// Linear factors come from rational roots; the remaining parts come from the
// squarefree decomposition and are irreducible when certified is true
// (always the case for degree <= 3).
struct PolyFactor {
    UniPoly factor;
    int multiplicity;
    bool certified;
};
std::vector<PolyFactor> factor_over_q(const UniPoly& p);

class BinaryForm {
public:
    BinaryForm();  // the zero form
    BinaryForm(int degree, std::vector<Scalar> coeffs);

    static BinaryForm one() { return BinaryForm(0, {Scalar(1)}); }
    // p(l1/l2) * l2^degree for a polynomial in l1, times l2^extra.
    static BinaryForm homogenize(const UniPoly& p, int extra_l2_power = 0);

    int degree() const { return degree_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return zero_; }
    bool is_constant() const { return !zero_ && degree_ == 0; }
    Scalar eval(const Scalar& l1, const Scalar& l2) const;
    // Divides out l2 and dehomogenizes at l2 = 1: returns (power of l2, polynomial in l1).
    std::pair<int, UniPoly> split_l2() const;
    BinaryForm normalized() const;
    std::string str() const;
    bool operator==(const BinaryForm& o) const;

private:
    int degree_;
    std::vector<Scalar> c_;
    bool zero_;
};

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

class PolyMat {
public:
    PolyMat() = default;
    PolyMat(std::size_t rows, std::size_t cols);
    static PolyMat identity(std::size_t n);
    // The pencil l*a + b.
    static PolyMat pencil(const Mat& a, const Mat& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    UniPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const UniPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    PolyMat operator*(const PolyMat& o) const;
    bool operator==(const PolyMat& o) const;
    Mat eval(const Scalar& t) const;
    UniPoly det() const;
    bool is_diagonal() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<UniPoly> e_;
};

struct SmithForm {
    std::vector<UniPoly> invariant_factors;  // nonzero factors only, monic, each divides the next
    PolyMat left;
    PolyMat right;
};

SmithForm smith_normal_form(const PolyMat& p);
// Same factors without accumulating the transforms.
std::vector<UniPoly> invariant_factors(const PolyMat& p);

struct NullVector {
    int degree;
    std::vector<UniPoly> entries;
};

// Minimal polynomial basis of the right kernel of l*a + b over K(l).
std::vector<NullVector> minimal_nullspace_basis(const Mat& a, const Mat& b);

// Rank of l1*a + l2*b over the rational function field.
std::size_t generic_rank(const Mat& a, const Mat& b);

// gcd of the r x r minors of l1*a + l2*b, first nonzero coefficient 1.
BinaryForm gcd_of_minors(const Mat& a, const Mat& b, std::size_t r);

}  // namespace kronwebs
