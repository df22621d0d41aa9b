#include "kronwebs/webtools.hpp"

#include <algorithm>
#include <optional>

namespace kronwebs {

namespace {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec add_scaled(Vec a, const Vec& b, const Scalar& c) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

void require_kronecker(const LinearRelation& r) {
    if (!is_kronecker(r).kronecker) throw NotKronecker("relation has Jordan blocks");
}

// Linear system for W-chains v_1..v_l with v_t = B x_t, except v_fixed = u when given.
// Pairs (v_t, v_{t+1}) for t = 0..l with v_0 = v_{l+1} = 0 must satisfy E_L a + E_R b = 0.
struct ChainSystem {
    Mat a, rhs;
};

ChainSystem chain_system(const LinearRelation& r, const Mat& b, std::size_t l, std::optional<std::size_t> fixed,
                         const Vec& u) {
    const std::size_t n = r.dim_v, f = b.cols();
    const Mat eq = r.w.equations();
    const std::size_t e = eq.rows();
    const Mat el = eq.block(0, 0, e, n), er = eq.block(0, n, e, n);
    const Mat elb = el * b, erb = er * b;
    const Vec elu = fixed ? el * u : Vec{}, eru = fixed ? er * u : Vec{};
    // column offset of free vector s (1-based)
    auto col = [&](std::size_t s) { return (fixed && s - 1 > *fixed ? s - 2 : s - 1) * f; };
    const std::size_t nfree = fixed ? l - 1 : l;
    ChainSystem cs{Mat(e * (l + 1), f * nfree), Mat(e * (l + 1), 1)};
    for (std::size_t t = 0; t <= l; ++t) {
        for (std::size_t s : {t, t + 1}) {
            if (s == 0 || s > l) continue;
            const bool left = s == t;
            if (fixed && s - 1 == *fixed) {
                const Vec& m = left ? elu : eru;
                for (std::size_t i = 0; i < e; ++i) cs.rhs(t * e + i, 0) -= m[i];
            } else {
                cs.a.set_block(t * e, col(s), left ? elb : erb);
            }
        }
    }
    return cs;
}

// Chain of length l inside span(b) with v_{pos+1} = u.
std::optional<std::vector<Vec>> chain_through(const LinearRelation& r, const Mat& b, std::size_t l, std::size_t pos,
                                              const Vec& u) {
    const ChainSystem cs = chain_system(r, b, l, pos, u);
    std::optional<Mat> x = cs.a.cols() == 0 ? (cs.rhs.is_zero() ? std::optional<Mat>(Mat(0, 1)) : std::nullopt)
                                            : solve(cs.a, cs.rhs);
    if (!x) return std::nullopt;
    std::vector<Vec> vs;
    std::size_t off = 0;
    for (std::size_t t = 0; t < l; ++t) {
        if (t == pos) {
            vs.push_back(u);
            continue;
        }
        vs.push_back(b * x->block(off, 0, b.cols(), 1).column(0));
        off += b.cols();
    }
    return vs;
}

// Span of every vector of every W-chain of length l inside span(b).
Subspace chain_span(const LinearRelation& r, const Mat& b, std::size_t l) {
    const ChainSystem cs = chain_system(r, b, l, std::nullopt, {});
    const Subspace sols = kernel(cs.a);
    std::vector<Vec> vs;
    for (std::size_t j = 0; j < sols.dim(); ++j) {
        const Vec x = sols.basis().column(j);
        for (std::size_t t = 0; t < l; ++t)
            vs.push_back(b * Vec(x.begin() + static_cast<long>(t * b.cols()),
                                 x.begin() + static_cast<long>((t + 1) * b.cols())));
    }
    return Subspace::span(r.dim_v, vs);
}

Subspace lower_step(const Filtration& f, std::size_t k) {
    return k >= 2 ? f.steps[k - 2] : Subspace(f.ambient_dim);
}

// Adds vectors of `from` (in order) that are independent of `base`, until `count` are chosen.
std::vector<Vec> echelon_lines(const Subspace& from, Subspace base, std::size_t count) {
    std::vector<Vec> out;
    for (std::size_t j = 0; j < from.dim() && out.size() < count; ++j) {
        const Vec v = from.basis().column(j);
        if (base.contains(v)) continue;
        out.push_back(v);
        base = subspace_sum(base, Subspace::span(from.ambient_dim(), {v}));
    }
    return out;
}

}  // namespace

std::vector<ProjPoint> point_schedule(std::size_t count, long offset) {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(ProjPoint::finite(offset + static_cast<long>(i)));
    return pts;
}

Filtration isotypic_filtration(const LinearRelation& r) { return isotypic_filtration(r, point_schedule(r.dim_v + 1)); }

Filtration isotypic_filtration(const LinearRelation& r, const std::vector<ProjPoint>& points) {
    require_kronecker(r);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw InvalidArgument("filtration points must be distinct");
    const std::size_t n = r.dim_v;
    Filtration f{n, {}};
    std::vector<Subspace> kers;
    for (std::size_t k = 1; n > 0; ++k) {
        if (points.size() < k + 1) throw InvalidArgument("not enough points for the filtration");
        while (kers.size() < k + 1) kers.push_back(ker_point(r, points[kers.size()]));
        // F_k Ker_i = Ker_i meet the sum of the other k kernels; F_k V = sum over i = 1..k
        Subspace fk(n);
        for (std::size_t i = 1; i <= k; ++i) {
            Subspace others(n);
            for (std::size_t j = 0; j <= k; ++j)
                if (j != i) others = subspace_sum(others, kers[j]);
            fk = subspace_sum(fk, subspace_intersect(kers[i], others));
        }
        f.steps.push_back(fk);
        if (fk.dim() == n) break;
    }
    return f;
}

bool is_w_chain(const LinearRelation& r, const std::vector<Vec>& vs) {
    const std::size_t n = r.dim_v;
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionMismatch("chain vector has the wrong length");
    Vec prev = zero_vec(n);
    for (std::size_t i = 0; i <= vs.size(); ++i) {
        const Vec& next = i < vs.size() ? vs[i] : zero_vec(n);
        if (!r.w.contains(concat(prev, next))) return false;
        prev = next;
    }
    return true;
}

WChain elementary_op(const LinearRelation& r, const WChain& chain, const WChain& other, std::size_t n_shift,
                     const Scalar& c) {
    if (!is_w_chain(r, chain.vectors) || !is_w_chain(r, other.vectors)) throw NotWChain("input is not a W-chain");
    const std::size_t l = chain.vectors.size(), m = other.vectors.size();
    if (m > l || n_shift > l - m) throw InvalidArgument("shift must satisfy 0 <= n <= l - m");
    WChain out = chain;
    for (std::size_t j = 0; j < m; ++j) out.vectors[j + n_shift] = add_scaled(out.vectors[j + n_shift], other.vectors[j], c);
    if (!is_w_chain(r, out.vectors)) throw InternalVerificationFailure("elementary operation left the W-chains");
    return out;
}

std::vector<RelationBlock> split_into_blocks(const LinearRelation& r, const std::vector<Vec>& lines) {
    const Filtration f = isotypic_filtration(r);
    const std::size_t n = r.dim_v;
    const Subspace k0 = ker_point(r, ProjPoint::finite(0));

    // lines per layer k
    std::vector<std::vector<Vec>> layer(f.steps.size() + 1);
    for (std::size_t k = 1; k <= f.steps.size(); ++k) {
        const Subspace top = subspace_intersect(k0, f.steps[k - 1]), low = subspace_intersect(k0, lower_step(f, k));
        if (lines.empty()) {
            layer[k] = echelon_lines(top, low, top.dim() - low.dim());
            continue;
        }
        for (const auto& u : lines) {
            if (u.size() != n || !k0.contains(u)) throw InvalidArgument("line is not in Ker_(1:0)");
            if (f.steps[k - 1].contains(u) && !lower_step(f, k).contains(u)) layer[k].push_back(u);
        }
        Subspace s = low;
        for (const auto& u : layer[k]) s = subspace_sum(s, Subspace::span(n, {u}));
        if (layer[k].size() != top.dim() - low.dim() || s != top)
            throw InvalidArgument("lines are not adapted to the isotypic filtration");
    }

    std::vector<RelationBlock> blocks;
    for (std::size_t k = f.steps.size(); k >= 1; --k) {
        for (const auto& u : layer[k]) {
            auto chain = chain_through(r, f.steps[k - 1].basis(), k, k - 1, u);
            if (!chain) throw InternalVerificationFailure("no W-chain ends at a kernel line");
            const Mat c = Mat::from_columns(n, *chain);
            RelationBlock b{Subspace::span(c), c, restrict_relation(r, c)};
            if (b.space.dim() != k || b.relation != kronecker_relation(k))
                throw InternalVerificationFailure("lifted chain does not span a single block");
            blocks.push_back(std::move(b));
        }
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const RelationBlock& a, const RelationBlock& b) { return a.space.dim() < b.space.dim(); });
    Subspace total(n);
    std::size_t dims = 0;
    for (const auto& b : blocks) {
        total = subspace_sum(total, b.space);
        dims += b.space.dim();
    }
    if (dims != n || total.dim() != n) throw InternalVerificationFailure("blocks do not form a direct sum");
    return blocks;
}

std::vector<Subspace> split_isotypic_by_projections(const LinearRelation& r, const std::vector<Vec>& lines) {
    const Filtration f = isotypic_filtration(r);
    const std::size_t n = r.dim_v;
    if (n == 0) return {};
    const std::size_t k = f.steps.size();
    if (lower_step(f, k).dim() != 0) throw InvalidArgument("relation is not isotypic");
    const auto pts = point_schedule(k + 1);
    std::vector<Subspace> kers;
    for (const auto& p : pts) kers.push_back(ker_point(r, p));
    const std::size_t m = kers[0].dim();

    // V = K_0 + ... + K_{k-1}; coordinates of K_k in that splitting
    Mat big(n, 0);
    for (std::size_t i = 0; i < k; ++i) big = Mat::hstack(big, kers[i].basis());
    const Mat y = inverse(big) * kers[k].basis();
    auto proj = [&](std::size_t i) { return kers[i].basis() * y.block(i * m, 0, m, m); };  // pi_i on K_k

    std::vector<Vec> us = lines;
    if (us.empty())
        for (std::size_t j = 0; j < m; ++j) us.push_back(kers[0].basis().column(j));
    if (us.size() != m) throw InvalidArgument("need one line per block");
    for (const auto& u : us)
        if (u.size() != n || !kers[0].contains(u)) throw InvalidArgument("line is not in Ker_(1:0)");
    if (Subspace::span(n, us).dim() != m) throw InvalidArgument("lines must be independent");

    std::vector<Subspace> out;
    const Mat p0 = proj(0);
    for (const auto& u : us) {
        // the vector of K_k projecting to u
        const auto c = solve(p0, Mat::column_vector(u));
        if (!c) throw InternalVerificationFailure("projection from the extra kernel is not onto");
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(proj(i) * c->column(0));
        out.push_back(Subspace::span(n, vs));
    }
    return out;
}

bool verify_isotypic_block(const LinearRelation& r, const Subspace& s) {
    const Filtration f = isotypic_filtration(r);
    const std::size_t n = r.dim_v;
    if (s.ambient_dim() != n) throw DimensionMismatch("block must live in V");
    if (n == 0) return s.dim() == 0;
    const std::size_t k = f.steps.size();
    const Subspace low = lower_step(f, k);
    if (s.dim() + low.dim() != n || subspace_intersect(s, low).dim() != 0) return false;
    if (chain_span(r, s.basis(), k) != s) return false;
    const Pencil p = equations_pencil(r);
    const Subspace p1s = image(p.p1 * s.basis()), p2s = image(p.p2 * s.basis());
    if (p1s != p2s) return false;
    return subspace_intersect(image(p.p1 * low.basis()), p1s).dim() == 0;
}

BlockPath reach_isotypic_block(const LinearRelation& r, const std::vector<WChain>& from, const Subspace& target) {
    const Filtration f = isotypic_filtration(r);
    const std::size_t n = r.dim_v, k = f.steps.size();
    std::vector<Vec> fvs;
    for (const auto& c : from) {
        if (c.vectors.size() != k || !is_w_chain(r, c.vectors)) throw NotWChain("source chains must have length k");
        fvs.insert(fvs.end(), c.vectors.begin(), c.vectors.end());
    }
    if (!verify_isotypic_block(r, Subspace::span(n, fvs)) || !verify_isotypic_block(r, target))
        throw InvalidArgument("source and target must be isotypic blocks");

    BlockPath path;
    const Subspace low = lower_step(f, k);
    if (low.dim() > 0)
        for (const auto& b : split_into_blocks(restrict_relation(r, low.basis()))) {
            WChain w;
            for (std::size_t j = 0; j < b.chain.cols(); ++j) w.vectors.push_back(low.basis() * b.chain.column(j));
            path.lower.push_back(std::move(w));
        }
    path.result = from;

    auto apply = [&](std::size_t j, std::size_t a, std::size_t shift, const Scalar& c) {
        if (sgn(c) == 0) return;
        path.result[j] = elementary_op(r, path.result[j], path.lower[a], shift, c);
        path.steps.push_back({j, a, shift, c});
    };

    // First kind: move each start vector into target meet Ker_(0:1).
    const Subspace t0 = subspace_intersect(target, ker_point(r, ProjPoint::infinity()));
    Mat starts = t0.basis();
    for (const auto& w : path.lower) starts = Mat::hstack(starts, Mat::column_vector(w.vectors[0]));
    for (std::size_t j = 0; j < path.result.size(); ++j) {
        const auto x = solve(starts, Mat::column_vector(path.result[j].vectors[0]));
        if (!x) throw InternalVerificationFailure("start vector outside Ker_(0:1)");
        for (std::size_t a = 0; a < path.lower.size(); ++a) apply(j, a, 0, -(*x)(t0.dim() + a, 0));
    }

    // Remaining difference p' - p = l q with q a chain in F_{k-1}, split over the lower blocks.
    Mat lower_basis(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> where;  // column -> (block, position)
    for (std::size_t a = 0; a < path.lower.size(); ++a)
        for (std::size_t s = 0; s < path.lower[a].vectors.size(); ++s) {
            lower_basis = Mat::hstack(lower_basis, Mat::column_vector(path.lower[a].vectors[s]));
            where.emplace_back(a, s);
        }
    for (std::size_t j = 0; j < path.result.size(); ++j) {
        const auto goal = chain_through(r, target.basis(), k, 0, path.result[j].vectors[0]);
        if (!goal) throw InternalVerificationFailure("no target chain through the start vector");
        // coordinates of the differences at positions 2..k
        std::vector<Vec> coords;
        for (std::size_t i = 1; i < k; ++i) {
            Vec d = add_scaled((*goal)[i], path.result[j].vectors[i], -1);
            const auto x = solve(lower_basis, Mat::column_vector(d));
            if (!x) throw InternalVerificationFailure("chain difference leaves F_{k-1}");
            coords.push_back(x->column(0));
        }
        // q_a has coefficient c_t read off the first vector of block a at position t+1
        for (std::size_t col = 0; col < where.size(); ++col) {
            const auto [a, s] = where[col];
            if (s != 0) continue;
            const std::size_t d = path.lower[a].vectors.size();
            for (std::size_t t = 0; t + d < k; ++t) apply(j, a, t + 1, coords[t][col]);
        }
        if (path.result[j].vectors != *goal) throw InternalVerificationFailure("elementary operations missed the target");
    }
    return path;
}

SkewPair flat_model(const std::vector<std::size_t>& ks) {
    std::vector<SkewPair> parts;
    for (auto k : ks) {
        if (k == 0) throw InvalidArgument("flat model blocks need k >= 1");
        parts.push_back(make_kron_pair(k));
    }
    return pair_direct_sum(parts);
}

}  // namespace kronwebs
