#include <algorithm>
#include <map>
#include <sstream>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

UniPoly::UniPoly(const Scalar& constant) {
    if (sgn(constant) != 0) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Scalar>{0, 1}); }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
    if (sgn(c) == 0) return UniPoly();
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Scalar& UniPoly::lead() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r(*this);
    r += o;
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r(*this);
    r -= o;
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (sgn(o.c_[j]) != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    if (sgn(s) == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const Scalar inv = 1 / d.lead();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        Scalar f = rem[k + dd] * inv;
        q[k] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            if (sgn(d.c_[j]) != 0) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(dd);
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

Scalar UniPoly::eval(const Scalar& t) const {
    Scalar r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

UniPoly UniPoly::pow(int e) const {
    UniPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        Scalar a = c_[i];
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        } else if (sgn(a) < 0 && i > 0 && a == -1) {
            os << "-";
            a = 1;
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = 1 / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            mpz_class diff = abs(mpz_class(x - y));
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void prime_factors(mpz_class n, std::map<mpz_class, int>& out) {
    n = abs(n);
    if (n <= 1) return;
    for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= n; ++p) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    prime_factors(d, out);
    prime_factors(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> pf;
    prime_factors(n, pf);
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : pf) {
        std::size_t k = ds.size();
        mpz_class pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) ds.push_back(ds[j] * pk);
        }
    }
    return ds;
}

// Integer coefficients with the same roots.
std::vector<mpz_class> integer_coeffs(const UniPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : p.coeffs()) z.push_back(mpz_class(c.get_num() * (l / c.get_den())));
    return z;
}

// Yun's squarefree decomposition of a monic polynomial: p = prod s_i^i.
std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    UniPoly a = p.monic();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = a / c;
    UniPoly y = b / c;
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.push_back({g, i});
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const UniPoly& p) {
    std::vector<Scalar> roots;
    if (p.degree() <= 0) return roots;
    UniPoly q = p;
    // Divide out the root at zero first.
    int low = 0;
    while (sgn(q.coeff(low)) == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        q = q / UniPoly::monomial(1, low);
    }
    if (q.degree() > 0) {
        std::vector<mpz_class> z = integer_coeffs(q);
        std::vector<mpz_class> num = divisors(z.front()), den = divisors(z.back());
        std::vector<Scalar> cands;
        for (const auto& a : num)
            for (const auto& b : den) {
                Scalar r(a, b);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& r : cands)
            if (sgn(q.eval(r)) == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<PolyFactor> factor_over_q(const UniPoly& p) {
    std::vector<PolyFactor> out;
    for (auto& [s, mult] : squarefree(p)) {
        UniPoly rest = s;
        for (const auto& r : rational_roots(s)) {
            UniPoly lin(std::vector<Scalar>{-r, 1});
            out.push_back({lin, mult, true});
            rest = rest / lin;
        }
        if (rest.degree() > 0) out.push_back({rest.monic(), mult, rest.degree() <= 3});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

}  // namespace kronwebs
