#include <sstream>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

BinaryForm::BinaryForm() : degree_(0), c_{Scalar(0)}, zero_(true) {}

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
        throw InvalidArgument("binary form needs degree+1 coefficients");
    zero_ = true;
    for (const auto& x : c_)
        if (sgn(x) != 0) zero_ = false;
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, int extra_l2_power) {
    if (p.is_zero()) return BinaryForm();
    const int d = p.degree() + extra_l2_power;
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    // coefficient of l1^i l2^(d-i) sits at index d-i
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(d - i)] = p.coeff(i);
    return BinaryForm(d, std::move(c));
}

Scalar BinaryForm::eval(const Scalar& l1, const Scalar& l2) const {
    if (zero_) return 0;
    Scalar r = 0;
    for (int j = 0; j <= degree_; ++j) {
        Scalar t = c_[static_cast<std::size_t>(j)];
        if (sgn(t) == 0) continue;
        for (int a = 0; a < degree_ - j; ++a) t *= l1;
        for (int b = 0; b < j; ++b) t *= l2;
        r += t;
    }
    return r;
}

std::pair<int, UniPoly> BinaryForm::split_l2() const {
    if (zero_) return {0, UniPoly()};
    int e = 0;
    while (sgn(c_[static_cast<std::size_t>(e)]) == 0) ++e;
    std::vector<Scalar> p(static_cast<std::size_t>(degree_ - e) + 1);
    for (int j = e; j <= degree_; ++j) p[static_cast<std::size_t>(degree_ - j)] = c_[static_cast<std::size_t>(j)];
    // index j holds l1^(d-j) l2^j; after removing l2^e the l1 power is d-j
    return {e, UniPoly(std::move(p))};
}

BinaryForm BinaryForm::normalized() const {
    if (zero_) return *this;
    std::size_t k = 0;
    while (sgn(c_[k]) == 0) ++k;
    Scalar inv = 1 / c_[k];
    std::vector<Scalar> c = c_;
    for (auto& x : c) x *= inv;
    return BinaryForm(degree_, std::move(c));
}

std::string BinaryForm::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= degree_; ++j) {
        Scalar a = c_[static_cast<std::size_t>(j)];
        if (sgn(a) == 0) continue;
        const int p1 = degree_ - j, p2 = j;
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        bool mono = p1 > 0 || p2 > 0;
        if (!mono || a != 1) {
            os << a.get_str();
            if (mono) os << "*";
        }
        if (p1 > 0) os << "l1" << (p1 > 1 ? "^" + std::to_string(p1) : "");
        if (p1 > 0 && p2 > 0) os << "*";
        if (p2 > 0) os << "l2" << (p2 > 1 ? "^" + std::to_string(p2) : "");
        first = false;
    }
    return os.str();
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return degree_ == o.degree_ && c_ == o.c_;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return BinaryForm();
    const int d = a.degree() + b.degree();
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeffs()[static_cast<std::size_t>(i)] * b.coeffs()[static_cast<std::size_t>(j)];
    return BinaryForm(d, std::move(c));
}

}  // namespace kronwebs
