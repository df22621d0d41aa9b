#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

std::vector<MPoly> translation_coefficients(const MPoly& p, const Vec& c1) {
    if (c1.size() != p.nvars()) throw DimensionMismatch("c1 has the wrong length");
    // a_j = (D_c1)^j p / j!
    std::vector<MPoly> a;
    MPoly d = p;
    Scalar fact = 1;
    for (int j = 0; j <= std::max(p.degree(), 0); ++j) {
        if (j > 0) {
            d = d.directional(c1);
            fact *= j;
        }
        a.push_back(d.scaled(Scalar(1) / fact));
    }
    return a;
}

namespace {

// p(beta + l*c1) in n+1 variables, l last.
MPoly translated(const MPoly& p, const Vec& c1) {
    const std::size_t n = p.nvars();
    std::vector<MPoly> images;
    for (std::size_t k = 0; k < n; ++k) {
        Vec lin(n + 1);
        lin[k] = 1;
        lin[n] = c1[k];
        images.push_back(MPoly::linear(lin));
    }
    return p.compose(images);
}

MPoly lift(const MPoly& p, std::size_t extra) {
    MPoly r(p.nvars() + extra);
    for (const auto& [m, c] : p.terms()) {
        MPoly::Monomial mm = m;
        mm.resize(p.nvars() + extra, 0);
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace

CasimirWebReport casimir_web(const LieAlgebraData& g, const Vec& c1, const std::vector<InvariantPoly>& polys,
                             const std::vector<Vec>& points) {
    const std::size_t n = g.n();
    if (c1.size() != n) throw DimensionMismatch("c1 has the wrong length");
    const std::size_t r = algebra_rank(g).rank;
    if (polys.size() != r)
        throw WrongPolyCount("need " + std::to_string(r) + " invariants, got " + std::to_string(polys.size()));
    for (const auto& p : polys) make_invariant(g, p.poly);

    CasimirWebReport rep{n, r, r, r, false, {}, true, true, {}};
    for (const auto& p : polys) {
        rep.identity_web += 2 * static_cast<std::size_t>(p.web_degree());
        rep.identity_literal += 2 * static_cast<std::size_t>(p.degree());
    }
    rep.identity_holds = rep.identity_web == n;
    if (!rep.identity_holds)
        throw DimensionIdentityFailure("dim g = " + std::to_string(n) + ", 2*sum(deg-1)+r = " +
                                       std::to_string(rep.identity_web) + ", 2*sum(deg)+r = " +
                                       std::to_string(rep.identity_literal));

    std::size_t chart_vars = 0;
    for (const auto& p : polys) {
        rep.coefficients.push_back(translation_coefficients(p.poly, c1));
        chart_vars += rep.coefficients.back().size();
    }

    // p(beta + l c1) = sum_j a_j(beta) l^j as polynomials in (beta, l).
    for (std::size_t i = 0; i < polys.size(); ++i) {
        MPoly rhs(n + 1);
        MPoly lpow = MPoly::constant(n + 1, 1);
        const MPoly l = MPoly::variable(n + 1, n);
        for (const auto& a : rep.coefficients[i]) {
            rhs += lift(a, 1) * lpow;
            lpow = lpow * l;
        }
        if (translated(polys[i].poly, c1) != rhs) rep.leaf_equations_verified = false;
    }

    // Leaf equation i: sum_j A_ij l^j - C_i in chart variables A, with l and C_i as parameters.
    // Affine means every term has total degree at most one in the A's.
    {
        std::size_t offset = 0;
        const std::size_t nv = chart_vars + 1 + polys.size();  // A's, l, C's
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const MPoly l = MPoly::variable(nv, chart_vars);
            MPoly eq = -MPoly::variable(nv, chart_vars + 1 + i);
            MPoly lpow = MPoly::constant(nv, 1);
            for (std::size_t j = 0; j < rep.coefficients[i].size(); ++j) {
                eq += MPoly::variable(nv, offset + j) * lpow;
                lpow = lpow * l;
            }
            offset += rep.coefficients[i].size();
            for (const auto& [m, c] : eq.terms()) {
                int deg = 0;
                for (std::size_t v = 0; v < chart_vars; ++v) deg += m[v];
                if (deg > 1) rep.leaf_equations_affine = false;
            }
        }
    }

    // Gradients of all coefficient functions, symbolic once.
    std::vector<std::vector<MPoly>> grads;
    for (const auto& row : rep.coefficients)
        for (const auto& a : row) {
            std::vector<MPoly> gr;
            for (std::size_t k = 0; k < n; ++k) gr.push_back(a.derivative(k));
            grads.push_back(std::move(gr));
        }
    for (const auto& beta : points) {
        if (beta.size() != n) throw DimensionMismatch("sample point has the wrong length");
        Mat jac(grads.size(), n);
        for (std::size_t a = 0; a < grads.size(); ++a)
            for (std::size_t k = 0; k < n; ++k) jac(a, k) = grads[a][k].eval(beta);
        const std::size_t jr = rank(jac);
        rep.points.push_back({beta, jr, 2 * jr == n + r});
    }
    return rep;
}

}  // namespace kronwebs
