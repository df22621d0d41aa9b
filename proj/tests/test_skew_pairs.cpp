#include <doctest.h>

#include <algorithm>

#include "kronwebs/random.hpp"
#include "kronwebs/skew_pairs.hpp"

using namespace kronwebs;

namespace {

std::vector<BlockSpec> sorted(std::vector<BlockSpec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_decomposition(const SkewPair& p, const std::vector<BlockSpec>& expect) {
    Decomposition d = decompose(p);
    CHECK(d.blocks == sorted(expect));
    std::vector<SkewPair> parts;
    for (const auto& b : d.blocks) parts.push_back(canonical_pair(b));
    SkewPair canon = pair_direct_sum(parts);
    CHECK(conjugate(p, d.basis) == canon);
}

BlockSpec random_block(Rng& rng, std::size_t room) {
    while (true) {
        std::size_t pick = rng.below(6);
        if (pick < 3) {
            std::size_t dim = 2 * rng.below(4) + 1;
            if (dim <= room) return BlockSpec::kronecker(dim);
        } else {
            std::size_t dim = rng.coin() ? 2 : 4;
            if (dim > room) continue;
            std::size_t mu = rng.below(6);
            if (mu == 5) return BlockSpec::jordan_infinity(dim);
            static const long mus[] = {0, 1, -1, 2, -2};
            return BlockSpec::jordan_at(dim, mus[mu]);
        }
    }
}

}  // namespace

TEST_CASE("canonical pairs") {
    CHECK(make_kron_pair(1).h1 == Mat(1, 1));
    auto k2 = make_kron_pair(2);
    CHECK(k2.h1 == Mat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    CHECK(k2.h2 == Mat{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}});
    auto k3 = make_kron_pair(3);
    CHECK(rank(k3.h1) == 4);
    CHECK(rank(k3.h2) == 4);

    auto j5 = make_jordan_pair(1, 5);
    CHECK(j5.h1 == Mat{{0, 5}, {-5, 0}});
    CHECK(j5.h2 == Mat{{0, 1}, {-1, 0}});
    auto jinf = make_jordan_pair(1, ProjPoint::infinity());
    CHECK(jinf.h1 == Mat{{0, 1}, {-1, 0}});
    CHECK(jinf.h2.is_zero());
    auto j20 = make_jordan_pair(2, 0);
    CHECK(j20.h1.block(0, 2, 2, 2) == Mat{{0, 1}, {0, 0}});

    CHECK(pair_direct_sum({make_kron_pair(2), make_jordan_pair(1, 0)}).n == 5);
    CHECK(conjugate(k2, Mat::identity(3)) == k2);
    CHECK_THROWS_AS(SkewPair(Mat{{1}}, Mat{{0}}), NotSkew);
}

TEST_CASE("decomposition examples") {
    check_decomposition(make_kron_pair(2), {BlockSpec::kronecker(3)});
    check_decomposition(make_jordan_pair(1, 5), {BlockSpec::jordan_at(2, 5)});
    CHECK(decompose(make_jordan_pair(1, 5)).blocks[0].factor.str("mu") == "mu - 5");
    check_decomposition(make_jordan_pair(3, ProjPoint::infinity()), {BlockSpec::jordan_infinity(6)});
    check_decomposition(pair_direct_sum({make_kron_pair(1), make_kron_pair(1)}),
                        {BlockSpec::kronecker(1), BlockSpec::kronecker(1)});
    check_decomposition(SkewPair(Mat(0, 0), Mat(0, 0)), {});

    Rng rng(8);
    auto sum = pair_direct_sum({make_kron_pair(2), make_kron_pair(3), make_jordan_pair(1, 0)});
    check_decomposition(conjugate(sum, rng.unimodular(sum.n)),
                        {BlockSpec::kronecker(3), BlockSpec::kronecker(5), BlockSpec::jordan_at(2, 0)});
    check_decomposition(conjugate(make_kron_pair(2), rng.unimodular(3)), {BlockSpec::kronecker(3)});
}

TEST_CASE("equal eigenvalues and nonlinear factors") {
    Rng rng(9);
    auto same = pair_direct_sum({make_jordan_pair(2, 1), make_jordan_pair(1, 1), make_jordan_pair(2, 1)});
    check_decomposition(conjugate(same, rng.unimodular(same.n)),
                        {BlockSpec::jordan_at(4, 1), BlockSpec::jordan_at(4, 1), BlockSpec::jordan_at(2, 1)});

    // mu^2 + 1 has no rational root
    UniPoly g(std::vector<Scalar>{1, 0, 1});
    auto irr = BlockSpec::jordan(4, g);
    auto irr2 = BlockSpec::jordan(8, g);
    auto p = pair_direct_sum({canonical_pair(irr), canonical_pair(irr2), make_kron_pair(2)});
    check_decomposition(conjugate(p, rng.unimodular(p.n)), {irr, irr2, BlockSpec::kronecker(3)});
}

TEST_CASE("decomposition recovers random block sums") {
    Rng rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BlockSpec> blocks;
        std::size_t total = 0, cap = 2 + rng.below(9);
        while (total < cap) {
            auto b = random_block(rng, 12 - total);
            blocks.push_back(b);
            total += b.dim;
            if (rng.below(3) == 0) break;
        }
        std::vector<SkewPair> parts;
        for (const auto& b : blocks) parts.push_back(canonical_pair(b));
        auto p = pair_direct_sum(parts);
        auto conj = conjugate(p, rng.unimodular(p.n));
        CHECK(block_invariants(conj) == sorted(blocks));
        check_decomposition(conj, blocks);
    }
}

TEST_CASE("micro-Kronecker test") {
    auto k3 = is_micro_kronecker(make_kron_pair(3));
    CHECK(k3.flag);
    CHECK(k3.rank == 1);
    auto j = is_micro_kronecker(make_jordan_pair(2, 1));
    CHECK_FALSE(j.flag);
    CHECK(j.rank == 0);
    auto kk = is_micro_kronecker(pair_direct_sum({make_kron_pair(2), make_kron_pair(2)}));
    CHECK(kk.flag);
    CHECK(kk.rank == 2);
}

TEST_CASE("action subspaces") {
    CHECK(action_subspace(make_kron_pair(2)) == Subspace::span(3, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(action_subspace(make_kron_pair(1)) == Subspace::full(1));
    CHECK_THROWS_AS(action_subspace(make_jordan_pair(1, 1)), NotMicroKronecker);

    Rng rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<SkewPair> parts;
        std::size_t n = 0, r = 0;
        while (n < 9) {
            std::size_t k = 1 + rng.below(3);
            parts.push_back(make_kron_pair(k));
            n += 2 * k - 1;
            ++r;
            if (rng.coin()) break;
        }
        auto p = conjugate(pair_direct_sum(parts), rng.unimodular(n));
        auto a = action_subspace(p);
        CHECK(a.dim() == (n + r) / 2);
        for (int s = 0; s < 10; ++s) {
            Mat h = p.h1.scaled(rng.rational(50, 7)) + p.h2.scaled(rng.rational(50, 7));
            CHECK((a.basis().transpose() * h * a.basis()).is_zero());
        }
        // maximal: no vector outside A is orthogonal to A for every member
        auto comp = a.standard_complement();
        for (std::size_t c = 0; c < comp.dim(); ++c) {
            Mat ext = Mat::hstack(a.basis(), comp.basis().select_columns({c}));
            bool isotropic = (ext.transpose() * p.h1 * ext).is_zero() && (ext.transpose() * p.h2 * ext).is_zero();
            CHECK_FALSE(isotropic);
        }
    }
}

TEST_CASE("kernels at the minimal number of points span the action subspace") {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto p = make_kron_pair(k);
        auto a = action_subspace(p);
        auto pts = action_sample_points(k + 2);
        for (std::size_t start = 0; start + k <= pts.size(); ++start) {
            Subspace s(p.n), fewer(p.n);
            for (std::size_t i = start; i < start + k; ++i) {
                s = subspace_sum(s, pair_kernel(p, pts[i]));
                if (i + 1 < start + k) fewer = subspace_sum(fewer, pair_kernel(p, pts[i]));
            }
            CHECK(s == a);
            CHECK(fewer.dim() == k - 1);
            // a further point adds nothing new to the preceding k-1 kernels on a single block
            CHECK(subspace_intersect(pair_kernel(p, pts[(start + k) % pts.size()]), fewer).dim() == 0);
        }
    }
}

TEST_CASE("induced relations") {
    auto r = induced_relation(make_kron_pair(2));
    // A has coordinates (x, z) for x w0 + z w2; relation x = -z'
    CHECK(r == LinearRelation(2, Subspace::span(4, {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
    auto one = induced_relation(make_kron_pair(1));
    CHECK(one.w == Subspace::full(2));
    auto two = induced_relation(pair_direct_sum({make_kron_pair(2), make_kron_pair(2)}));
    auto c = is_kronecker(two);
    CHECK(c.kronecker);
    CHECK(c.rank == 2);
    auto mixed = induced_relation(pair_direct_sum({make_kron_pair(2), make_kron_pair(3)}));
    CHECK(mixed.dim_v == 5);
    CHECK(is_kronecker(mixed).kronecker);
}

TEST_CASE("corank profiles") {
    auto k = corank_profile(make_kron_pair(3));
    CHECK(k.generic_corank == 1);
    CHECK(k.exceptional.empty());

    auto j = corank_profile(make_jordan_pair(1, 2));
    CHECK(j.generic_corank == 0);
    REQUIRE(j.exceptional.size() == 1);
    CHECK(j.exceptional[0].corank == 2);
    // l1*h1 + l2*h2 degenerates at 2 l1 + l2 = 0
    CHECK(j.exceptional[0].factor.eval(1, -2) == 0);

    auto jj = corank_profile(pair_direct_sum({make_jordan_pair(2, 3), make_jordan_pair(2, 3)}));
    REQUIRE(jj.exceptional.size() == 1);
    CHECK(jj.exceptional[0].corank == 4);

    auto inf = corank_profile(pair_direct_sum({make_jordan_pair(1, ProjPoint::infinity()), make_kron_pair(2)}));
    CHECK(inf.generic_corank == 1);
    REQUIRE(inf.exceptional.size() == 1);
    CHECK(inf.exceptional[0].corank == 3);
    CHECK(inf.exceptional[0].factor.eval(0, 1) == 0);

    UniPoly g(std::vector<Scalar>{1, 0, 1});
    auto irr = corank_profile(canonical_pair(BlockSpec::jordan(4, g)));
    REQUIRE(irr.exceptional.size() == 1);
    CHECK(irr.exceptional[0].factor.degree() == 2);
    CHECK(irr.exceptional[0].corank == 2);
}
