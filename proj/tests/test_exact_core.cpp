#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kronwebs/exact_core.hpp"
#include "kronwebs/random.hpp"
#include "oracles.hpp"

using namespace kronwebs;

TEST_CASE("rank and kernel of small matrices") {
    auto id = rref_rank_kernel(Mat::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.dim() == 0);

    auto z = rref_rank_kernel(Mat(2, 4));
    CHECK(z.rank == 0);
    CHECK(z.kernel == Subspace::full(4));

    Mat m{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    auto r = rref_rank_kernel(m);
    CHECK(r.rank == 2);
    CHECK(r.kernel == Subspace::span(3, {{0, 0, 1}}));
    CHECK(r.rank + r.kernel.dim() == 3);
    CHECK((m * r.kernel.basis()).is_zero());
}

TEST_CASE("subspace sum and intersection") {
    auto e1 = Subspace::span(3, {{1, 0, 0}});
    auto e2 = Subspace::span(3, {{0, 1, 0}});
    CHECK(subspace_sum(e1, e2) == Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
    auto v = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
    CHECK(subspace_intersect(v, v) == v);
    auto a = Subspace::span(3, {{1, 0, 0}, {0, 0, 1}});
    auto b = Subspace::span(3, {{1, 0, 1}, {0, 1, 0}});
    CHECK(subspace_intersect(a, b) == Subspace::span(3, {{1, 0, 1}}));
    CHECK_THROWS_AS(subspace_sum(a, Subspace(4)), DimensionMismatch);
}

TEST_CASE("subspace canonical form is independent of the spanning set") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.below(7), k = rng.below(n + 1);
        Mat basis = rng.matrix(n, k, 20, 5);
        Subspace s = Subspace::span(basis);
        Mat mixed = basis * rng.unimodular(k);
        if (k > 0) mixed = Mat::hstack(mixed, basis.select_columns({0}).scaled(Scalar(3, 7)));
        CHECK(Subspace::span(mixed) == s);
        CHECK(subspace_intersect(s, subspace_sum(s, Subspace::span(rng.matrix(n, 1, 9, 3)))) == s);
    }
}

TEST_CASE("kernel, image and equations agree") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6);
        Mat m = rng.matrix(r, 2, 10, 3) * rng.matrix(2, c, 10, 3);
        Subspace k = kernel(m);
        CHECK(rank(m) + k.dim() == c);
        CHECK((m * k.basis()).is_zero());
        Subspace im = image(m);
        CHECK((im.equations() * m).is_zero());
        CHECK(kernel(im.equations()) == im);
    }
}

TEST_CASE("solve and inverse") {
    Mat a{{2, 1}, {1, 1}};
    CHECK(inverse(a) * a == Mat::identity(2));
    CHECK(det(a) == 1);
    auto x = solve(a, Mat{{3}, {2}});
    REQUIRE(x);
    CHECK(*x == Mat{{1}, {1}});
    CHECK_FALSE(solve(Mat{{1, 1}, {1, 1}}, Mat{{1}, {2}}));
    CHECK_THROWS_AS(inverse(Mat{{1, 1}, {1, 1}}), SingularMatrix);
}

TEST_CASE("polynomial arithmetic and rational roots") {
    UniPoly x = UniPoly::x();
    UniPoly p = (x - 2) * (x + Scalar(1, 3)) * (x * x + 1);
    auto [q, r] = p.divmod(x - 2);
    CHECK(r.is_zero());
    CHECK(q * (x - 2) == p);
    CHECK(rational_roots(p) == std::vector<Scalar>{Scalar(-1, 3), 2});
    CHECK(gcd(p, (x - 2) * (x - 5)) == x - 2);
    auto eg = ext_gcd(x * x - 1, x * x - x * 3 + 2);
    CHECK(eg.g == x - 1);
    CHECK(eg.s * (x * x - 1) + eg.t * (x * x - x * 3 + 2) == eg.g);

    auto f = factor_over_q((x - 1).pow(3) * (x + 2) * (x * x - 2).pow(2));
    REQUIRE(f.size() == 3);
    CHECK(f[0].factor == x - 1);
    CHECK(f[0].multiplicity == 3);
    CHECK(f[1].factor == x + 2);
    CHECK(f[1].multiplicity == 1);
    CHECK(f[2].factor == x * x - 2);
    CHECK(f[2].multiplicity == 2);
    CHECK(f[2].certified);
}

TEST_CASE("binary forms") {
    BinaryForm f(2, {1, 0, 0});  // l1^2
    CHECK(f.eval(0, 1) == 0);
    CHECK(f.eval(2, 5) == 4);
    auto [e, p] = BinaryForm(3, {0, 2, 1, 0}).split_l2();  // 2 l1^2 l2 + l1 l2^2
    CHECK(e == 1);
    CHECK(p == UniPoly(std::vector<Scalar>{0, 1, 2}));
    CHECK(BinaryForm::homogenize(p, e) == BinaryForm(3, {0, 2, 1, 0}));
    CHECK(BinaryForm().is_zero());
    CHECK(BinaryForm::one().is_constant());
}

TEST_CASE("Smith normal form examples") {
    UniPoly x = UniPoly::x();
    PolyMat d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = x;
    auto s = smith_normal_form(d);
    CHECK(s.invariant_factors == std::vector<UniPoly>{UniPoly(1), x});

    // [[0, l mu + 1], [-(l mu + 1), 0]] with mu = 3
    PolyMat j(2, 2);
    j(0, 1) = x * 3 + 1;
    j(1, 0) = -(x * 3 + 1);
    auto sj = smith_normal_form(j);
    REQUIRE(sj.invariant_factors.size() == 2);
    CHECK(sj.invariant_factors[0] == x + Scalar(1, 3));
    CHECK(sj.invariant_factors[1] == x + Scalar(1, 3));

    CHECK(smith_normal_form(PolyMat(3, 2)).invariant_factors.empty());
}

TEST_CASE("Smith normal form round trip on random pencils") {
    Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        Mat a = rng.integer_matrix(r, c, 3), b = rng.integer_matrix(r, c, 3);
        if (rng.coin() && r > 1) {  // force a rank defect
            for (std::size_t j = 0; j < c; ++j) {
                a(r - 1, j) = a(0, j) * 2;
                b(r - 1, j) = b(0, j) * 2;
            }
        }
        PolyMat p = PolyMat::pencil(a, b);
        auto s = smith_normal_form(p);
        PolyMat dmat = s.left * p * s.right;
        CHECK(dmat.is_diagonal());
        for (std::size_t i = 0; i < std::min(r, c); ++i) {
            UniPoly expect = i < s.invariant_factors.size() ? s.invariant_factors[i] : UniPoly();
            CHECK(dmat(i, i) == expect);
        }
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK((s.invariant_factors[i + 1] % s.invariant_factors[i]).is_zero());
        for (const auto& f : s.invariant_factors) CHECK(f.lead() == 1);
        CHECK(s.left.det().degree() == 0);
        CHECK(s.right.det().degree() == 0);
        CHECK(s.invariant_factors == invariant_factors(p));
        CHECK(s.invariant_factors.size() == generic_rank(a, b));
    }
}

TEST_CASE("minimal nullspace basis examples") {
    // skew pair of the three-dimensional Kronecker block
    Mat h1{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    Mat h2{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}};
    auto nb = minimal_nullspace_basis(h1, h2);
    REQUIRE(nb.size() == 1);
    CHECK(nb[0].degree == 1);
    // (l h1 + h2) v(l) = 0 forces v = c (1, 0, l)
    CHECK(nb[0].entries[1].is_zero());
    CHECK(nb[0].entries[0].degree() == 0);
    CHECK(nb[0].entries[2].degree() == 1);

    CHECK(minimal_nullspace_basis(Mat::identity(3), Mat(3, 3)).empty());
    auto zero = minimal_nullspace_basis(Mat(2, 2), Mat(2, 2));
    REQUIRE(zero.size() == 2);
    CHECK(zero[0].degree == 0);
    CHECK(zero[1].degree == 0);
}

TEST_CASE("minimal nullspace basis property on random pencils") {
    Rng rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(8);
        std::size_t k = 1 + rng.below(std::min(r, c));
        // low-rank pencils have room for nontrivial minimal indices
        Mat a = rng.integer_matrix(r, k, 3) * rng.integer_matrix(k, c, 3);
        Mat b = rng.integer_matrix(r, k, 3) * rng.integer_matrix(k, c, 3);
        auto nb = minimal_nullspace_basis(a, b);
        std::size_t grank = generic_rank(a, b);
        CHECK(nb.size() == c - grank);
        std::vector<int> eps;
        for (const auto& v : nb) {
            eps.push_back(v.degree);
            for (int s = 0; s < 5; ++s) {
                Scalar t = rng.rational(50, 7);
                Vec ev(c);
                for (std::size_t j = 0; j < c; ++j) ev[j] = v.entries[j].eval(t);
                CHECK(((a.scaled(t) + b) * ev) == Vec(r));
            }
        }
        CHECK(std::is_sorted(eps.begin(), eps.end()));
        CHECK(std::accumulate(eps.begin(), eps.end(), 0) <= static_cast<int>(grank));
        // the kernel dimension at every degree bound matches the minimal indices
        for (int d = 0; d <= static_cast<int>(c); ++d) {
            std::size_t expect = 0;
            for (int e : eps)
                if (d >= e) expect += static_cast<std::size_t>(d - e + 1);
            CHECK(oracle::polynomial_kernel_dim(a, b, d) == expect);
        }
    }
}

TEST_CASE("gcd of minors examples") {
    auto f = gcd_of_minors(Mat::identity(2), Mat(2, 2), 2);
    CHECK(f == BinaryForm(2, {1, 0, 0}));
    Mat h1{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    Mat h2{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}};
    CHECK(gcd_of_minors(h1, h2, 2).is_constant());
    CHECK(gcd_of_minors(h1, h2, 0) == BinaryForm::one());
    CHECK(gcd_of_minors(h1, h2, 3).is_zero());
}

TEST_CASE("gcd of minors matches enumeration of all minors") {
    Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        Mat a = rng.integer_matrix(r, c, 2), b = rng.integer_matrix(r, c, 2);
        if (rng.coin()) {
            // plant a common linear factor in a row
            Scalar s = rng.integer(3);
            for (std::size_t j = 0; j < c; ++j) {
                a(0, j) = rng.integer(2);
                b(0, j) = a(0, j) * s;
            }
        }
        for (std::size_t k = 0; k <= std::min(r, c); ++k)
            CHECK(gcd_of_minors(a, b, k) == oracle::gcd_of_minors_by_enumeration(a, b, k));
    }
}

TEST_CASE("gcd of minors vanishes exactly where the rank drops") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        std::size_t k = 1 + rng.below(std::min(r, c));
        Mat a = rng.integer_matrix(r, k, 2) * rng.integer_matrix(k, c, 2);
        Mat b = rng.integer_matrix(r, k, 2) * rng.integer_matrix(k, c, 2);
        std::size_t grank = generic_rank(a, b);
        auto f = gcd_of_minors(a, b, grank);
        REQUIRE_FALSE(f.is_zero());
        auto [e, p] = f.split_l2();
        CHECK((rank(a) < grank) == (e > 0));
        for (const auto& t : rational_roots(p)) CHECK(rank(a.scaled(t) + b) < grank);
        for (int s = 0; s < 5; ++s) {
            Scalar t = rng.rational(1000, 97);
            if (p.eval(t) != 0) CHECK(rank(a.scaled(t) + b) == grank);
        }
    }
}
