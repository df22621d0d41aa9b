#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "kronwebs/io.hpp"
#include "kronwebs/lie_poisson.hpp"

using namespace kronwebs;

namespace {

Vec random_vec(Rng& rng, std::size_t n, long bound = 10) {
    Vec v(n);
    for (auto& x : v) x = rng.integer(bound);
    return v;
}

// Generic corank by sampling: the minimum over many random points.
std::size_t sampled_corank(const LieAlgebraData& g, Rng& rng) {
    std::size_t best = g.n();
    for (int s = 0; s < 8; ++s) best = std::min(best, g.n() - rank(lie_poisson_matrix(g, random_vec(rng, g.n(), 1000))));
    return best;
}

std::vector<std::size_t> dims(const std::vector<BlockSpec>& bs) {
    std::vector<std::size_t> d;
    for (const auto& b : bs) d.push_back(b.dim);
    std::sort(d.begin(), d.end());
    return d;
}

Vec compatible_point(const LieAlgebraData& g, const Vec& c1, std::size_t r, Rng& rng) {
    while (true) {
        Vec b = random_vec(rng, g.n());
        if (compatible(g, c1, b, r)) return b;
    }
}

}  // namespace

TEST_CASE("bracket validation") {
    CHECK_NOTHROW(validate_lie(abelian_algebra(4)));
    const LieTable sl2 = builtin_table("sl2");
    CHECK(sl2.algebra.c(0, 1, 2) == 1);   // [e, f] = h
    CHECK(sl2.algebra.c(2, 0, 0) == 2);   // [h, e] = 2e
    CHECK(sl2.algebra.c(2, 1, 1) == -2);  // [h, f] = -2f
    CHECK_NOTHROW(validate_lie(sl2.algebra));

    LieAlgebraData bad = sl2.algebra;
    bad.set(0, 1, 0, 1);  // [e, f] = h + e
    CHECK_THROWS_AS(validate_lie(bad), JacobiViolation);

    for (const auto& name : builtin_table_names()) {
        const LieTable t = builtin_table(name);
        CHECK_NOTHROW(validate_lie(t.algebra));
        CHECK(t.names.size() == t.algebra.n());
        for (const auto& p : t.invariants) CHECK(is_invariant(t.algebra, p.poly));
    }
    CHECK_THROWS_AS(builtin_table("e8"), InvalidArgument);
}

TEST_CASE("json round trip of algebras") {
    const LieTable sl3 = builtin_table("sl3");
    const LieAlgebraData back = io::lie_from_json(io::to_json(sl3.algebra));
    CHECK(back.brackets().size() == sl3.algebra.brackets().size());
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(back.bracket_basis(i, j) == sl3.algebra.bracket_basis(i, j));
    CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"n": 2})")), SchemaError);
    CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"n": 2, "brackets": [{"i": 0, "j": 5, "coeffs": []}]})")),
                    SchemaError);
    CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"n": 2, "brackets": [{"i": 0, "j": 1, "coeffs": [[0, "1/0"]]}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse("{not json"), ParseError);
}

TEST_CASE("Lie-Poisson matrices") {
    const LieAlgebraData g = builtin_table("sl2").algebra;
    const Scalar be = 3, bf = 5, bh = 7;
    CHECK(lie_poisson_matrix(g, {be, bf, bh}) == Mat{{0, bh, -2 * be}, {-bh, 0, 2 * bf}, {2 * be, -2 * bf, 0}});
    CHECK(lie_poisson_matrix(abelian_algebra(3), {1, 2, 3}).is_zero());

    // the coboundary of c1 is a cocycle equal to the frozen matrix
    const Vec c1{0, 0, 1};
    CHECK(cocycle_matrix(g, frozen_matrix(g, c1)) == frozen_matrix(g, c1));
    // every skew form on sl2 is a coboundary; use the Heisenberg algebra and sl2 + K instead
    const LieAlgebraData heis = validate_lie(3, {{0, 1, {{2, 1}}}});
    Mat c2(3, 3);
    c2(0, 2) = 1;
    c2(2, 0) = -1;
    CHECK_NOTHROW(cocycle_matrix(heis, c2));
    const LieAlgebraData sl2xk = validate_lie(4, {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}});
    Mat bad(4, 4);
    bad(2, 3) = 1;
    bad(3, 2) = -1;
    CHECK_THROWS_AS(cocycle_matrix(sl2xk, bad), CocycleViolation);
}

TEST_CASE("translation pencil and the shift identity") {
    const LieAlgebraData g = builtin_table("sl2").algebra;
    const TranslationPencil tp = translation_pencil(g, {0, 0, 1}, {1, 1, 0});
    CHECK(tp.base.h1 == Mat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    CHECK(tp.base.h2 == Mat{{0, 0, -2}, {0, 0, 2}, {2, -2, 0}});
    CHECK(translation_pencil(g, {0, 0, 0}, {1, 2, 3}).base.h1.is_zero());

    Rng rng(11);
    for (const auto& name : builtin_table_names()) {
        const LieAlgebraData a = builtin_table(name).algebra;
        for (int s = 0; s < 20; ++s) {
            const Vec beta = random_vec(rng, a.n(), 100), c1 = random_vec(rng, a.n(), 100);
            const Scalar l = rng.rational(50, 7);
            const TranslationPencil t = translation_pencil(a, c1, beta);
            Vec shifted = beta;
            for (std::size_t k = 0; k < a.n(); ++k) shifted[k] += l * c1[k];
            CHECK(t.base.h2 + l * t.base.h1 == lie_poisson_matrix(a, shifted));
        }
    }
}

TEST_CASE("algebra rank and regularity") {
    Rng rng(3);
    const LieAlgebraData sl2 = builtin_table("sl2").algebra;
    CHECK(algebra_rank(sl2).rank == 1);
    CHECK(algebra_rank(sl2).certified);
    CHECK(algebra_rank(abelian_algebra(4)).rank == 4);
    CHECK(is_regular(abelian_algebra(4), {0, 0, 0, 0}));
    CHECK_FALSE(is_regular(sl2, {0, 0, 0}));
    CHECK(is_regular(sl2, {0, 0, 1}));

    const std::pair<const char*, std::size_t> expected[] = {{"sl2", 1}, {"so3", 1}, {"gl2", 2}, {"sl3", 2}, {"gl3", 3}};
    for (const auto& [name, r] : expected) {
        const LieAlgebraData g = builtin_table(name).algebra;
        CHECK(algebra_rank(g).rank == r);
        CHECK(sampled_corank(g, rng) == r);
    }
}

TEST_CASE("symbolic rank cost on the larger tables") {
    for (const char* name : {"sl3", "gl3"}) {
        const LieAlgebraData g = builtin_table(name).algebra;
        const auto t0 = std::chrono::steady_clock::now();
        algebra_rank(g);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        MESSAGE(std::string(name) << " symbolic rank: " << secs << " s");
        CHECK(secs < 10.0);
    }
}

TEST_CASE("compatibility") {
    const LieAlgebraData sl2 = builtin_table("sl2").algebra;
    CHECK(compatible(sl2, {0, 0, 1}, {1, 1, 0}));
    CHECK_FALSE(compatible(sl2, {0, 0, 1}, {0, 0, 0}));
    // beta on the line of alpha: beta - alpha = 0 is irregular
    CHECK_FALSE(compatible(sl2, {0, 0, 1}, {0, 0, 2}));
    // alpha itself irregular
    CHECK_FALSE(compatible(sl2, {0, 0, 0}, {1, 1, 0}));
    // h* + l e* never vanishes
    CHECK(compatible(sl2, {1, 0, 0}, {0, 0, 1}));

    // sl2's only irregular covector is 0, so compatibility means independence
    Rng rng(5);
    for (int s = 0; s < 30; ++s) {
        const Vec a = random_vec(rng, 3, 3), b = random_vec(rng, 3, 3);
        const bool independent = rank(Mat::from_columns(3, {a, b})) == 2;
        CHECK(compatible(sl2, a, b) == independent);
    }
}

TEST_CASE("micro-Kronecker scans") {
    const LieAlgebraData sl2 = builtin_table("sl2").algebra;
    const ScanPoint p = scan_point(sl2, {0, 0, 1}, {1, 1, 0});
    CHECK(p.micro_kronecker);
    CHECK(p.rank == 1);
    CHECK(dims(p.blocks) == std::vector<std::size_t>{3});

    // beta = c1 gives collinear forms
    const ScanPoint q = scan_point(sl2, {0, 0, 1}, {0, 0, 1});
    CHECK_FALSE(q.micro_kronecker);

    Rng rng(21);
    const std::pair<const char*, std::vector<std::size_t>> cases[] = {
        {"sl2", {3}}, {"so3", {3}}, {"gl2", {1, 3}}, {"sl3", {3, 5}}};
    for (const auto& [name, blocks] : cases) {
        const LieTable t = builtin_table(name);
        const std::size_t r = algebra_rank(t.algebra).rank;
        REQUIRE(is_regular(t.algebra, t.c1, r));
        const int count = t.algebra.n() > 4 ? 10 : 50;
        std::vector<Vec> pts;
        for (int s = 0; s < count; ++s) pts.push_back(compatible_point(t.algebra, t.c1, r, rng));
        for (const auto& sp : micro_kronecker_scan(t.algebra, t.c1, pts)) {
            CHECK(sp.micro_kronecker);
            CHECK(sp.rank == r);
            CHECK(dims(sp.blocks) == blocks);
        }
    }
}

TEST_CASE("anti-involutions") {
    const LieTable sl2 = builtin_table("sl2");
    const AntiInvolutionData c = cartan_from_generators(sl2.algebra, sl2.cartan_e, sl2.cartan_f, sl2.cartan_h);
    CHECK(c.iota == Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(fixed_subspace(c.iota) == Subspace::span(3, {{1, 1, 0}, {0, 0, 1}}));
    CHECK_NOTHROW(check_antiinvolution(abelian_algebra(3), -Mat::identity(3)));
    CHECK_THROWS_AS(check_antiinvolution(sl2.algebra, Mat::identity(3)), NotAntiAutomorphism);
    CHECK_THROWS_AS(check_antiinvolution(sl2.algebra, Mat{{0, 2, 0}, {1, 0, 0}, {0, 0, 1}}), NotInvolution);
    CHECK_THROWS_AS(cartan_from_generators(sl2.algebra, {}, {}, sl2.cartan_h), GeneratorsDontSpan);

    const LieTable sl3 = builtin_table("sl3");
    const AntiInvolutionData c3 = cartan_from_generators(sl3.algebra, sl3.cartan_e, sl3.cartan_f, sl3.cartan_h);
    CHECK(fixed_subspace(c3.iota).dim() == 5);

    // iota* = iota^T is anti-Poisson for both brackets when it fixes c1:
    // LP(iota* b) + l LP(c1) = -iota^T (LP(b) + l LP(c1)) iota, so kernels move by iota.
    Rng rng(8);
    for (const LieTable* t : {&sl2, &sl3}) {
        const Mat iota = cartan_from_generators(t->algebra, t->cartan_e, t->cartan_f, t->cartan_h).iota;
        const Mat it = iota.transpose();
        REQUIRE(it * t->c1 == t->c1);
        const Mat h1 = frozen_matrix(t->algebra, t->c1);
        for (int s = 0; s < 10; ++s) {
            const Vec beta = random_vec(rng, t->algebra.n(), 20);
            const Scalar l = rng.rational(20, 5);
            const Mat at_beta = lie_poisson_matrix(t->algebra, beta) + l * h1;
            const Mat at_image = lie_poisson_matrix(t->algebra, it * beta) + l * h1;
            CHECK(at_image == -(it * at_beta * iota));
            CHECK(kernel(at_image) == Subspace::span(iota * kernel(at_beta).basis()));
        }
    }
}

TEST_CASE("admissibility probe") {
    Rng rng(2);
    const LieTable sl2 = builtin_table("sl2");
    const Mat iota = cartan_from_generators(sl2.algebra, sl2.cartan_e, sl2.cartan_f, sl2.cartan_h).iota;
    // the plane spanned by h* and e* + f*
    const AdmissibilityReport rep = admissibility_probe(sl2.algebra, iota, 3, rng, std::nullopt, {{{0, 0, 1}, {1, 1, 0}}});
    CHECK(rep.fix_dim == 2);
    CHECK(rep.planes.front().certified);
    CHECK(rep.planes.front().gcd.is_constant());
    CHECK(rep.codim_two_certified);
    CHECK(rep.transversal);
    CHECK(rep.passed);

    const AdmissibilityReport ab = admissibility_probe(abelian_algebra(3), -Mat::identity(3), 3, rng);
    CHECK(ab.vacuous);
    CHECK(ab.passed);

    // Fix replaced by the line through h*: its origin is an irregular point of codimension one
    const AdmissibilityReport line =
        admissibility_probe(sl2.algebra, iota, 3, rng, Subspace::span(3, {{0, 0, 1}}));
    CHECK_FALSE(line.codim_two_certified);
    CHECK_FALSE(line.passed);

    const LieTable sl3 = builtin_table("sl3");
    const Mat iota3 = cartan_from_generators(sl3.algebra, sl3.cartan_e, sl3.cartan_f, sl3.cartan_h).iota;
    const AdmissibilityReport r3 = admissibility_probe(sl3.algebra, iota3, 2, rng);
    CHECK(r3.fix_dim == 5);
    CHECK(r3.passed);
}

TEST_CASE("irregular witnesses on a degenerate plane") {
    // gl2 with iota = transpose: the diagonal plane meets the irregular set along the centre.
    const LieTable gl2 = builtin_table("gl2");
    const Mat iota = Mat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    REQUIRE_NOTHROW(check_antiinvolution(gl2.algebra, iota));
    Rng rng(1);
    const Vec center{1, 0, 0, 1}, diag{1, 0, 0, -1};
    const Subspace fix = Subspace::span(4, {center, diag, {0, 1, 1, 0}});
    const AdmissibilityReport rep = admissibility_probe(gl2.algebra, iota, 0, rng, fix, {{center, diag}});
    REQUIRE(rep.planes.size() == 1);
    CHECK(rep.planes[0].generic_regular);
    CHECK_FALSE(rep.planes[0].certified);
    REQUIRE(rep.planes[0].irregular_points.size() == 1);
    CHECK_FALSE(is_regular(gl2.algebra, rep.planes[0].irregular_points[0]));
}

TEST_CASE("Casimir web") {
    const LieTable sl2 = builtin_table("sl2");
    const MPoly p = sl2.invariants.at(0).poly;
    const std::vector<std::string> names{"be", "bf", "bh"};
    CHECK(p.str(names) == "4*be*bf + bh^2");
    const CasimirWebReport rep = casimir_web(sl2.algebra, {0, 0, 1}, sl2.invariants, {{1, 1, 0}});
    REQUIRE(rep.coefficients.size() == 1);
    REQUIRE(rep.coefficients[0].size() == 3);
    CHECK(rep.coefficients[0][0] == p);
    CHECK(rep.coefficients[0][1] == MPoly::variable(3, 2).scaled(2));
    CHECK(rep.coefficients[0][2] == MPoly::constant(3, 1));
    CHECK(rep.identity_web == 3);
    CHECK(rep.identity_literal == 5);
    CHECK(rep.identity_holds);
    CHECK(rep.leaf_equations_verified);
    CHECK(rep.leaf_equations_affine);
    CHECK(rep.points.at(0).jacobian_rank == 2);
    CHECK(rep.points.at(0).expected);

    CHECK_THROWS_AS(casimir_web(sl2.algebra, {0, 0, 1}, {}, {}), WrongPolyCount);
    CHECK_THROWS_AS(make_invariant(sl2.algebra, MPoly::variable(3, 2)), NotInvariant);

    // abelian: linear invariants, each coordinate is one
    std::vector<InvariantPoly> lin;
    for (std::size_t i = 0; i < 2; ++i) lin.push_back(make_invariant(abelian_algebra(2), MPoly::variable(2, i)));
    const CasimirWebReport ab = casimir_web(abelian_algebra(2), {1, 1}, lin, {{3, 4}});
    CHECK(ab.identity_holds);
    CHECK(ab.points[0].jacobian_rank == 2);

    // the square of the Casimir breaks the identity under either reading
    CHECK_THROWS_AS(casimir_web(sl2.algebra, {0, 0, 1}, {InvariantPoly{p * p}}, {}), DimensionIdentityFailure);

    const LieTable sl3 = builtin_table("sl3");
    Rng rng(4);
    std::vector<Vec> pts;
    const std::size_t r = algebra_rank(sl3.algebra).rank;
    for (int s = 0; s < 5; ++s) pts.push_back(compatible_point(sl3.algebra, sl3.c1, r, rng));
    const CasimirWebReport r3 = casimir_web(sl3.algebra, sl3.c1, sl3.invariants, pts);
    CHECK(r3.identity_web == 8);
    CHECK(r3.leaf_equations_verified);
    for (const auto& pt : r3.points) CHECK(pt.jacobian_rank == 5);
}

TEST_CASE("Jacobi compatibility of constant and linear brackets") {
    Rng rng(9);
    for (const auto& name : builtin_table_names()) {
        const LieAlgebraData g = builtin_table(name).algebra;
        CHECK(jacobi_compat_check(frozen_matrix(g, random_vec(rng, g.n())), g).ok);
    }
    const LieAlgebraData sl2xk = validate_lie(4, {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}});
    Mat bad(4, 4);
    bad(2, 3) = 1;
    bad(3, 2) = -1;
    const JacobiCompat jc = jacobi_compat_check(bad, sl2xk);
    CHECK_FALSE(jc.ok);
    CHECK_FALSE(jc.cocycle_part);
    CHECK(jc.jacobi_part);
    CHECK(jacobi_compat_check(rng.skew_matrix(4, 10, 3), abelian_algebra(4)).ok);
}

TEST_CASE("commutative algebras and mapping algebras") {
    const CommAlgebra t3 = truncated_polynomial_algebra(3);
    CHECK(t3.product(1, 1) == Vec{0, 0, 1});
    CHECK(t3.product(1, 2) == Vec{0, 0, 0});
    CHECK(b_algebra(3).dim() == 6);
    CHECK(b_algebra(1).dim() == 2);
    CHECK_THROWS_AS(CommAlgebra(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                    {0, 1, 0}, {0, 0, 0}, {0, 1, 0},
                                    {0, 0, 1}, {0, 0, 1}, {0, 0, 0}}),
                    NotCommutative);
    CHECK_THROWS_AS(CommAlgebra(2, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}), NotUnital);
    // e1 e1 = e2, e1 e2 = 0, e2 e2 = e1
    CHECK_THROWS_AS(CommAlgebra(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                    {0, 1, 0}, {0, 0, 1}, {0, 0, 0},
                                    {0, 0, 1}, {0, 0, 0}, {0, 1, 0}}),
                    NotAssociative);

    const LieAlgebraData sl2 = builtin_table("sl2").algebra;
    const LieAlgebraData d = semidirect_double(sl2);
    CHECK(d.n() == 6);
    CHECK_NOTHROW(validate_lie(d));
    CHECK(algebra_rank(d).rank == 2);

    const LieAlgebraData unit = tensor_with_algebra(sl2, truncated_polynomial_algebra(1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(unit.bracket_basis(i, j) == sl2.bracket_basis(i, j));

    const LieAlgebraData t = tensor_with_algebra(sl2, t3);
    CHECK(t.n() == 9);
    CHECK(algebra_rank(t).rank == 3);
    Rng rng(6);
    CHECK(sampled_corank(t, rng) == 3);

    const LieAlgebraData b = tensor_with_algebra(sl2, b_algebra(2));
    CHECK(b.n() == 12);
    CHECK(algebra_rank(b).rank == sampled_corank(b, rng));
}
