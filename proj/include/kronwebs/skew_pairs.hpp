#pragma once

// Pairs of skew-symmetric forms (h1, h2) and their block decomposition.
//
// A Jordan block has eigenvalue mu when h1 - mu*h2 degenerates on it; the
// point at infinity is the case where h2 degenerates. Eigenvalues are given
// as monic irreducible factors in mu over the rationals. The canonical block
// matrices are
//   K_{2k-1}: (w_2l, w_2l+1)_1 = 1, (w_2l+1, w_2l+2)_2 = 1
//   J_{2k,mu}: h1 = [[0, J], [-J^T, 0]], h2 = [[0, I], [-I, 0]], J upper Jordan
//   J_{2k,inf}: h1 = [[0, I], [-I, 0]], h2 = [[0, J_0], [-J_0^T, 0]]
// An irreducible factor g of degree d > 1 with exponent k uses the companion
// matrix of g^k in place of J (subdiagonal ones, last column -coefficients).

#include <string>
#include <vector>

#include "kronwebs/exact_core.hpp"
#include "kronwebs/relations.hpp"

namespace kronwebs {

struct SkewPair {
    std::size_t n = 0;
    Mat h1, h2;

    SkewPair() = default;
    SkewPair(Mat h1, Mat h2);
    bool operator==(const SkewPair& o) const { return h1 == o.h1 && h2 == o.h2; }
};

enum class BlockKind { Kronecker, Jordan };

struct BlockSpec {
    BlockKind kind = BlockKind::Kronecker;
    std::size_t dim = 1;
    UniPoly factor;  // monic irreducible in mu; zero for Kronecker and infinite blocks
    bool at_infinity = false;

    static BlockSpec kronecker(std::size_t dim);
    static BlockSpec jordan(std::size_t dim, const UniPoly& factor);
    static BlockSpec jordan_at(std::size_t dim, const Scalar& mu) { return jordan(dim, UniPoly(std::vector<Scalar>{-mu, Scalar(1)})); }
    static BlockSpec jordan_infinity(std::size_t dim);

    // Exponent of the elementary divisor (k in J_{2k}).
    std::size_t exponent() const;
    std::string str() const;
    bool operator==(const BlockSpec& o) const;
    bool operator!=(const BlockSpec& o) const { return !(*this == o); }
    bool operator<(const BlockSpec& o) const;
};

struct Decomposition {
    std::vector<BlockSpec> blocks;
    Mat basis;  // columns: adapted basis, blocks in the listed order
};

SkewPair make_kron_pair(std::size_t k);  // dimension 2k-1
SkewPair make_jordan_pair(std::size_t k, const ProjPoint& mu);
inline SkewPair make_jordan_pair(std::size_t k, const Scalar& mu) { return make_jordan_pair(k, ProjPoint::finite(mu)); }
SkewPair canonical_pair(const BlockSpec& b);
SkewPair pair_direct_sum(const std::vector<SkewPair>& ps);
// (s^T h1 s, s^T h2 s)
SkewPair conjugate(const SkewPair& p, const Mat& s);

// Sorted block multiset from the minimal indices of l*h1 + h2 and the
// elementary divisors of h1 - mu*h2 and nu*h1 - h2.
std::vector<BlockSpec> block_invariants(const SkewPair& p);
Decomposition decompose(const SkewPair& p);

struct MicroKronecker {
    bool flag;
    std::size_t rank;
};
MicroKronecker is_micro_kronecker(const SkewPair& p);

// Span of the kernels of l1*h1 + l2*h2 at the points (0:1), (1:0), (1:1), (1:2), ...
Subspace action_subspace(const SkewPair& p);
std::vector<ProjPoint> action_sample_points(std::size_t count);
Subspace pair_kernel(const SkewPair& p, const ProjPoint& pt);  // ker(l1*h1 + l2*h2)

// {(a, a') in A + A : h1(a, .) = h2(a', .)} in the echelon basis of the action subspace A.
LinearRelation induced_relation(const SkewPair& p);

struct ExceptionalFactor {
    BinaryForm factor;  // irreducible, in (l1, l2) for l1*h1 + l2*h2
    std::size_t corank;
};
struct CorankProfile {
    std::size_t generic_corank;
    std::vector<ExceptionalFactor> exceptional;
};
CorankProfile corank_profile(const SkewPair& p);

}  // namespace kronwebs
