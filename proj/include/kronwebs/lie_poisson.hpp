#pragma once

// Lie algebras given by structure constants and the argument-translation
// pencil on the dual space: h1 = bracket frozen at c1, h2 = Lie-Poisson
// matrix at beta, with h2(beta) + l*h1 = h2(beta + l*c1).

#include <optional>
#include <string>
#include <vector>

#include "kronwebs/exact_core.hpp"
#include "kronwebs/mpoly.hpp"
#include "kronwebs/random.hpp"
#include "kronwebs/skew_pairs.hpp"

namespace kronwebs {

struct BracketEntry {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Scalar>> coeffs;  // [x_i, x_j] = sum c_k x_k
};

class LieAlgebraData {
public:
    LieAlgebraData() = default;
    // Builds the dense table from brackets with i < j; does not check Jacobi.
    LieAlgebraData(std::size_t n, const std::vector<BracketEntry>& brackets);

    std::size_t n() const { return n_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    std::vector<BracketEntry> brackets() const;  // nonzero, i < j
    // Set c_ij^k and c_ji^k = -value.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

// Returns the data when every Jacobiator vanishes; JacobiViolation names the triple otherwise.
LieAlgebraData validate_lie(const LieAlgebraData& g);
LieAlgebraData validate_lie(std::size_t n, const std::vector<BracketEntry>& brackets);
LieAlgebraData abelian_algebra(std::size_t n);

// Multivariate polynomial in the dual coordinates beta_0..beta_{n-1}.
struct InvariantPoly {
    MPoly poly;
    int degree() const { return poly.degree(); }
    int web_degree() const { return poly.degree() - 1; }
};

// Coadjoint derivative of p along x_i: sum_{j,k} c_ij^k beta_k dp/dbeta_j.
MPoly coadjoint_derivative(const LieAlgebraData& g, const MPoly& p, std::size_t i);
bool is_invariant(const LieAlgebraData& g, const MPoly& p);
InvariantPoly make_invariant(const LieAlgebraData& g, const MPoly& p);  // throws NotInvariant

struct LieTable {
    std::string name;
    std::vector<std::string> names;
    LieAlgebraData algebra;
    Vec c1;
    std::vector<InvariantPoly> invariants;
    // Chevalley generators e_i, f_i, h_i as coordinate vectors, when shipped.
    std::vector<Vec> cartan_e, cartan_f, cartan_h;
};

std::vector<std::string> builtin_table_names();
LieTable builtin_table(const std::string& name);

Mat lie_poisson_matrix(const LieAlgebraData& g, const Vec& beta);
Mat frozen_matrix(const LieAlgebraData& g, const Vec& c1);
// Checks c2([X,Y],Z) + cyclic = 0; throws CocycleViolation.
Mat cocycle_matrix(const LieAlgebraData& g, const Mat& c2);
// Lie-Poisson matrix with the coordinates as indeterminates.
std::vector<std::vector<MPoly>> symbolic_lie_poisson(const LieAlgebraData& g);

struct TranslationPencil {
    SkewPair base;  // h1 frozen at c1, h2 Lie-Poisson at beta
    Vec beta, c1;
};
TranslationPencil translation_pencil(const LieAlgebraData& g, const Vec& c1, const Vec& beta);

struct AlgebraRank {
    std::size_t rank;
    bool certified;  // false when the sampling fallback was used
};
// Generic corank of the Lie-Poisson matrix. Exact for n <= 12; sampled above.
AlgebraRank algebra_rank(const LieAlgebraData& g);
bool is_regular(const LieAlgebraData& g, const Vec& alpha, std::size_t algebra_rank);
bool is_regular(const LieAlgebraData& g, const Vec& alpha);
// beta + l*alpha regular for every l, including the direction alpha itself.
bool compatible(const LieAlgebraData& g, const Vec& alpha, const Vec& beta, std::size_t algebra_rank);
bool compatible(const LieAlgebraData& g, const Vec& alpha, const Vec& beta);

struct ScanPoint {
    Vec beta;
    bool micro_kronecker;
    std::size_t rank;
    std::vector<BlockSpec> blocks;
};
std::vector<ScanPoint> micro_kronecker_scan(const LieAlgebraData& g, const Vec& c1, const std::vector<Vec>& points);
ScanPoint scan_point(const LieAlgebraData& g, const Vec& c1, const Vec& beta);

// Anti-involutions: iota^2 = id and [iota X, iota Y] = -iota [X, Y].
struct AntiInvolutionData {
    Mat iota;
};
AntiInvolutionData check_antiinvolution(const LieAlgebraData& g, const Mat& iota);
AntiInvolutionData cartan_from_generators(const LieAlgebraData& g, const std::vector<Vec>& e,
                                          const std::vector<Vec>& f, const std::vector<Vec>& h);
// Fix(iota*) = ker(iota^T - I) in dual coordinates.
Subspace fixed_subspace(const Mat& iota);

struct PlaneCertificate {
    Vec u, v;               // spanning the plane inside Fix
    bool generic_regular;   // the plane contains regular points
    BinaryForm gcd;         // gcd of the maximal nonvanishing minors of LP(s u + t v)
    bool certified;         // gcd constant: only the origin of the plane is irregular
    std::vector<Vec> irregular_points;  // rational witnesses when not certified
};
struct TransversalityCheck {
    Vec alpha;
    bool regular;
    bool transversal;  // orbit tangent + Fix = whole dual space
};
struct AdmissibilityReport {
    std::size_t fix_dim;
    bool vacuous;
    std::vector<PlaneCertificate> planes;
    std::vector<TransversalityCheck> transversality;
    bool codim_two_certified;
    bool transversal;
    bool passed;
};
// Heuristic: probes random planes and points of Fix(iota*). fix_override replaces Fix.
AdmissibilityReport admissibility_probe(const LieAlgebraData& g, const Mat& iota, std::size_t samples, Rng& rng,
                                        const std::optional<Subspace>& fix_override = std::nullopt,
                                        const std::vector<std::pair<Vec, Vec>>& planes = {});

// Casimir web chart from invariants translated along c1.
struct CasimirWebPoint {
    Vec beta;
    std::size_t jacobian_rank;
    bool expected;  // equals (dim g + rank)/2
};
struct CasimirWebReport {
    std::size_t dim, rank;
    std::size_t identity_web;      // 2*sum(deg-1) + rank
    std::size_t identity_literal;  // 2*sum(deg) + rank
    bool identity_holds;           // dim == identity_web
    std::vector<std::vector<MPoly>> coefficients;  // a_ij: p_i(beta + l c1) = sum_j a_ij l^j
    bool leaf_equations_verified;  // the expansion identity holds as polynomials
    bool leaf_equations_affine;    // each leaf equation is affine in the coefficient chart
    std::vector<CasimirWebPoint> points;
};
CasimirWebReport casimir_web(const LieAlgebraData& g, const Vec& c1, const std::vector<InvariantPoly>& polys,
                             const std::vector<Vec>& points);
std::vector<MPoly> translation_coefficients(const MPoly& p, const Vec& c1);

// Jacobi identity of l1*h1 + l2*LP as a polynomial identity.
struct JacobiCompat {
    bool ok;
    bool cocycle_part;  // l1*l2 terms
    bool jacobi_part;   // l2^2 terms
};
JacobiCompat jacobi_compat_check(const Mat& h1, const LieAlgebraData& g);

// Commutative associative unital algebra by structure constants m_ab^c.
class CommAlgebra {
public:
    CommAlgebra(std::size_t m, std::vector<Vec> products);  // products[a*m+b] = e_a e_b
    std::size_t dim() const { return m_; }
    const Vec& product(std::size_t a, std::size_t b) const { return p_[a * m_ + b]; }

private:
    std::size_t m_;
    std::vector<Vec> p_;
};
CommAlgebra truncated_polynomial_algebra(std::size_t k);  // K[z]/z^k
// K[z1, z2]/(z1 z2, z1^k - z2^k)
CommAlgebra b_algebra(std::size_t k);

// Basis x_i (x) a_a at index a*n + i.
LieAlgebraData tensor_with_algebra(const LieAlgebraData& g, const CommAlgebra& a);
LieAlgebraData semidirect_double(const LieAlgebraData& g);

}  // namespace kronwebs
