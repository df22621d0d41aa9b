#include <algorithm>
#include <map>

#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

TranslationPencil translation_pencil(const LieAlgebraData& g, const Vec& c1, const Vec& beta) {
    return TranslationPencil{SkewPair(frozen_matrix(g, c1), lie_poisson_matrix(g, beta)), beta, c1};
}

AlgebraRank algebra_rank(const LieAlgebraData& g) {
    const std::size_t n = g.n();
    if (n <= 12) return {n - symbolic_rank(symbolic_lie_poisson(g)), true};
    Rng rng(0);
    std::map<std::size_t, int> votes;
    for (int s = 0; s < 5; ++s) {
        Vec beta(n);
        for (auto& x : beta) x = rng.rational();
        ++votes[n - rank(lie_poisson_matrix(g, beta))];
    }
    auto best = std::max_element(votes.begin(), votes.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    return {best->first, false};
}

bool is_regular(const LieAlgebraData& g, const Vec& alpha, std::size_t algebra_rank) {
    return g.n() - rank(lie_poisson_matrix(g, alpha)) == algebra_rank;
}

bool is_regular(const LieAlgebraData& g, const Vec& alpha) { return is_regular(g, alpha, algebra_rank(g).rank); }

bool compatible(const LieAlgebraData& g, const Vec& alpha, const Vec& beta, std::size_t algebra_rank) {
    const std::size_t n = g.n();
    // l1*LP(beta) + l2*LP(alpha) = LP(l1*beta + l2*alpha); (0:1) is alpha itself.
    const Mat b = lie_poisson_matrix(g, beta), a = lie_poisson_matrix(g, alpha);
    const std::size_t r = generic_rank(b, a);
    if (n - r != algebra_rank) return false;
    if (r == 0) return true;  // abelian: every point regular
    return gcd_of_minors(b, a, r).is_constant();
}

bool compatible(const LieAlgebraData& g, const Vec& alpha, const Vec& beta) {
    return compatible(g, alpha, beta, algebra_rank(g).rank);
}

ScanPoint scan_point(const LieAlgebraData& g, const Vec& c1, const Vec& beta) {
    const TranslationPencil tp = translation_pencil(g, c1, beta);
    const MicroKronecker mk = is_micro_kronecker(tp.base);
    return ScanPoint{beta, mk.flag, mk.rank, decompose(tp.base).blocks};
}

std::vector<ScanPoint> micro_kronecker_scan(const LieAlgebraData& g, const Vec& c1, const std::vector<Vec>& points) {
    std::vector<ScanPoint> out;
    out.reserve(points.size());
    for (const auto& beta : points) out.push_back(scan_point(g, c1, beta));
    return out;
}

}  // namespace kronwebs
