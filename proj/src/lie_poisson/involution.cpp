#include <sstream>

#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

namespace {

Vec scale(const Vec& v, const Scalar& s) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec random_in(const Subspace& s, Rng& rng) {
    Vec c(s.dim());
    for (auto& x : c) x = rng.integer(10);
    return s.basis() * c;
}

}  // namespace

AntiInvolutionData check_antiinvolution(const LieAlgebraData& g, const Mat& iota) {
    const std::size_t n = g.n();
    if (iota.rows() != n || iota.cols() != n) throw DimensionMismatch("iota must be n x n");
    if (iota * iota != Mat::identity(n)) throw NotInvolution("iota^2 is not the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec lhs = g.bracket(iota.column(i), iota.column(j));
            const Vec rhs = iota * g.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (lhs[k] != -rhs[k]) {
                    std::ostringstream os;
                    os << "[iota x_" << i << ", iota x_" << j << "] != -iota [x_" << i << ", x_" << j << "]";
                    throw NotAntiAutomorphism(os.str());
                }
        }
    return AntiInvolutionData{iota};
}

AntiInvolutionData cartan_from_generators(const LieAlgebraData& g, const std::vector<Vec>& e,
                                          const std::vector<Vec>& f, const std::vector<Vec>& h) {
    const std::size_t n = g.n();
    if (e.size() != f.size()) throw InvalidArgument("need as many e's as f's");
    // Pairs (X, iota X), closed under brackets via iota[X, Y] = -[iota X, iota Y].
    std::vector<Vec> xs, ys;
    Subspace span(n);
    auto push = [&](const Vec& x, const Vec& y) {
        if (x.size() != n || y.size() != n) throw DimensionMismatch("generator has the wrong length");
        if (span.contains(x)) return;
        xs.push_back(x);
        ys.push_back(y);
        span = subspace_sum(span, Subspace::span(n, {x}));
    };
    for (std::size_t i = 0; i < e.size(); ++i) {
        push(e[i], f[i]);
        push(f[i], e[i]);
    }
    for (const auto& v : h) push(v, v);
    for (std::size_t a = 0; a < xs.size() && span.dim() < n; ++a)
        for (std::size_t b = 0; b < a && span.dim() < n; ++b)
            push(g.bracket(xs[b], xs[a]), scale(g.bracket(ys[b], ys[a]), -1));
    if (span.dim() < n) throw GeneratorsDontSpan("generators span a subalgebra of dimension " + std::to_string(span.dim()));
    const Mat x = Mat::from_columns(n, xs), y = Mat::from_columns(n, ys);
    return check_antiinvolution(g, y * inverse(x));
}

Subspace fixed_subspace(const Mat& iota) { return kernel(iota.transpose() - Mat::identity(iota.rows())); }

AdmissibilityReport admissibility_probe(const LieAlgebraData& g, const Mat& iota, std::size_t samples, Rng& rng,
                                        const std::optional<Subspace>& fix_override,
                                        const std::vector<std::pair<Vec, Vec>>& planes) {
    check_antiinvolution(g, iota);
    const std::size_t n = g.n();
    const Subspace fix = fix_override ? *fix_override : fixed_subspace(iota);
    if (fix.ambient_dim() != n) throw DimensionMismatch("Fix must live in the dual space");
    const std::size_t r = algebra_rank(g).rank;

    AdmissibilityReport rep{fix.dim(), fix.dim() == 0, {}, {}, true, true, false};
    if (rep.vacuous) {
        rep.passed = true;
        return rep;
    }

    // Codimension of the irregular locus inside Fix.
    if (fix.dim() == 1) {
        // The origin is a codimension-one point of the line; it is irregular unless g is abelian.
        rep.codim_two_certified = r == n;
    } else {
        std::vector<std::pair<Vec, Vec>> ps = planes;
        for (std::size_t s = 0; s < samples; ++s) ps.emplace_back(random_in(fix, rng), random_in(fix, rng));
        for (const auto& [u, v] : ps) {
            if (!fix.contains(u) || !fix.contains(v)) throw InvalidArgument("probe plane is not inside Fix");
            const Mat a = lie_poisson_matrix(g, u), b = lie_poisson_matrix(g, v);
            const std::size_t gr = generic_rank(a, b);
            PlaneCertificate pc{u, v, n - gr == r, BinaryForm::one(), false, {}};
            if (pc.generic_regular && gr > 0) pc.gcd = gcd_of_minors(a, b, gr);
            pc.certified = pc.generic_regular && pc.gcd.is_constant();
            if (pc.generic_regular && !pc.certified) {
                // rational roots (l1:l2) of the gcd give irregular points l1*u + l2*v
                auto [l2pow, poly] = pc.gcd.split_l2();
                if (l2pow > 0) pc.irregular_points.push_back(u);
                for (const auto& rho : rational_roots(poly)) pc.irregular_points.push_back(add(scale(u, rho), v));
            }
            rep.codim_two_certified = rep.codim_two_certified && pc.certified;
            rep.planes.push_back(std::move(pc));
        }
    }

    // Orbit tangent im LP(alpha) plus Fix spans the dual space at regular fixed points.
    bool any_regular = false;
    for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
        const Vec alpha = random_in(fix, rng);
        const Mat lp = lie_poisson_matrix(g, alpha);
        TransversalityCheck tc{alpha, n - rank(lp) == r, false};
        if (tc.regular) {
            any_regular = true;
            tc.transversal = rank(Mat::hstack(lp, fix.basis())) == n;
            rep.transversal = rep.transversal && tc.transversal;
        }
        rep.transversality.push_back(std::move(tc));
    }
    rep.transversal = rep.transversal && any_regular;
    rep.passed = rep.codim_two_certified && rep.transversal;
    return rep;
}

}  // namespace kronwebs
