#include <algorithm>

#include "kronwebs/skew_pairs.hpp"

namespace kronwebs {

MicroKronecker is_micro_kronecker(const SkewPair& p) {
    const std::size_t g = generic_rank(p.h1, p.h2);
    return {gcd_of_minors(p.h1, p.h2, g).is_constant(), p.n - g};
}

Subspace pair_kernel(const SkewPair& p, const ProjPoint& pt) {
    return kernel(p.h1.scaled(pt.l1()) + p.h2.scaled(pt.l2()));
}

std::vector<ProjPoint> action_sample_points(std::size_t count) {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0)
            pts.push_back(ProjPoint::infinity());
        else
            pts.push_back(ProjPoint::finite(static_cast<long>(i - 1)));
    }
    return pts;
}

Subspace action_subspace(const SkewPair& p) {
    const auto mk = is_micro_kronecker(p);
    if (!mk.flag) throw NotMicroKronecker("pair has Jordan blocks");
    std::size_t needed = 0;
    for (const auto& v : minimal_nullspace_basis(p.h1, p.h2))
        needed = std::max(needed, static_cast<std::size_t>(v.degree) + 1);
    Subspace a(p.n);
    std::size_t used = 0;
    for (std::size_t i = 0; used < needed; ++i) {
        const ProjPoint pt = action_sample_points(i + 1).back();
        Subspace k = pair_kernel(p, pt);
        if (k.dim() != mk.rank) continue;  // exceptional point
        a = subspace_sum(a, k);
        ++used;
    }
    return a;
}

LinearRelation induced_relation(const SkewPair& p) {
    const Mat a = action_subspace(p).basis();
    // h_i(a, .) as covectors; A is isotropic, so these vanish on A
    return pencil_to_relation(Pencil(p.h1.transpose() * a, p.h2.transpose() * a));
}

CorankProfile corank_profile(const SkewPair& p) {
    const std::size_t g = generic_rank(p.h1, p.h2);
    CorankProfile out{p.n - g, {}};
    const BinaryForm f = gcd_of_minors(p.h1, p.h2, g);
    if (f.is_constant()) return out;
    auto [e, poly] = f.split_l2();
    if (poly.degree() > 0) {
        const auto factors = invariant_factors(PolyMat::pencil(p.h1, p.h2));
        for (const auto& pf : factor_over_q(poly)) {
            std::size_t hit = 0;
            for (const auto& d : factors)
                if ((d % pf.factor).is_zero()) ++hit;
            out.exceptional.push_back({BinaryForm::homogenize(pf.factor), out.generic_corank + hit});
        }
    }
    if (e > 0) out.exceptional.push_back({BinaryForm(1, {0, 1}), p.n - rank(p.h1)});
    return out;
}

}  // namespace kronwebs
