#pragma once

// Sparse multivariate polynomials over the rationals, lex order with the
// first variable most significant.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

class MPoly {
public:
    using Monomial = std::vector<std::uint16_t>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, const Scalar& c);
    static MPoly variable(std::size_t nvars, std::size_t i);
    // sum_k coeffs[k] x_k
    static MPoly linear(const Vec& coeffs);

    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;  // -1 for zero
    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Scalar& s) const;
    MPoly& operator+=(const MPoly& o);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Quotient when o divides this exactly; throws InvalidArgument otherwise.
    MPoly divide_exact(const MPoly& o) const;
    MPoly derivative(std::size_t i) const;
    // Directional derivative sum_k v_k d/dx_k.
    MPoly directional(const Vec& v) const;
    Scalar eval(const Vec& x) const;
    // p(images[0], ..., images[n-1]); all images share one variable count.
    MPoly compose(const std::vector<MPoly>& images) const;
    MPoly pow(int e) const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check(const MPoly& o) const;
    std::size_t nvars_;
    std::map<Monomial, Scalar> t_;
};

// Rank of a matrix of polynomials over the rational function field,
// by fraction-free elimination.
std::size_t symbolic_rank(std::vector<std::vector<MPoly>> m);

}  // namespace kronwebs
