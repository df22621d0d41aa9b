#include "kronwebs/mpoly.hpp"

#include <sstream>

namespace kronwebs {

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
    MPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InvalidArgument("variable index out of range");
    MPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

MPoly MPoly::linear(const Vec& coeffs) {
    MPoly p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial m(coeffs.size(), 0);
        m[k] = 1;
        p.add_term(m, coeffs[k]);
    }
    return p;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Scalar MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) throw DimensionMismatch("monomial has the wrong number of variables");
    if (sgn(c) == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

void MPoly::check(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::scaled(const Scalar& s) const {
    if (sgn(s) == 0) return MPoly(nvars_);
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c *= s;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check(o);
    MPoly r(nvars_);
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            for (std::size_t i = 0; i < nvars_; ++i) prod[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            r.add_term(prod, ca * cb);
        }
    return r;
}

MPoly MPoly::divide_exact(const MPoly& o) const {
    check(o);
    if (o.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const auto& [lm, lc] = *o.t_.rbegin();
    MPoly rem = *this, q(nvars_);
    Monomial qm(nvars_);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.t_.rbegin();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rm[i] < lm[i]) throw InvalidArgument("polynomial division is not exact");
            qm[i] = static_cast<std::uint16_t>(rm[i] - lm[i]);
        }
        const Scalar qc = rc / lc;
        q.add_term(qm, qc);
        // rem -= qc * x^qm * o
        Monomial prod(nvars_);
        for (const auto& [m, c] : o.t_) {
            for (std::size_t i = 0; i < nvars_; ++i) prod[i] = static_cast<std::uint16_t>(m[i] + qm[i]);
            rem.add_term(prod, -qc * c);
        }
    }
    return q;
}

MPoly MPoly::derivative(std::size_t i) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : t_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        r.add_term(d, c * m[i]);
    }
    return r;
}

MPoly MPoly::directional(const Vec& v) const {
    if (v.size() != nvars_) throw DimensionMismatch("direction has the wrong length");
    MPoly r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        if (sgn(v[i]) != 0) r += derivative(i).scaled(v[i]);
    return r;
}

Scalar MPoly::eval(const Vec& x) const {
    if (x.size() != nvars_) throw DimensionMismatch("evaluation point has the wrong length");
    Scalar total = 0;
    for (const auto& [m, c] : t_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint16_t e = 0; e < m[i]; ++e) term *= x[i];
        total += term;
    }
    return total;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (images.size() != nvars_) throw DimensionMismatch("compose needs one image per variable");
    const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
    // cache powers of each image
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly r(out_vars);
    for (const auto& [m, c] : t_) {
        MPoly term = constant(out_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(out_vars, 1));
            while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
            term = term * pw[m[i]];
        }
        r += term;
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Scalar c = it->second;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        bool mono = false;
        for (auto e : it->first) mono = mono || e > 0;
        if (!mono || c != 1) {
            os << c.get_str();
            if (mono) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            if (!first_var) os << "*";
            os << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (it->first[i] > 1) os << "^" << it->first[i];
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

std::size_t symbolic_rank(std::vector<std::vector<MPoly>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    const std::size_t nv = cols > 0 ? m[0][0].nvars() : 0;
    MPoly prev = MPoly::constant(nv, 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).divide_exact(prev);
            m[i][c] = MPoly(nv);
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace kronwebs
