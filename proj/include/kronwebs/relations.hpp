#pragma once

// Linear relations W in V + V and the pencils (P1, P2) that present them as
// W = {(v1, v2) : P1 v1 = P2 v2}.
//
// Kernel convention: Ker_(l1:l2) = ker(l1 P1 - l2 P2) = {k : (l1 k, l2 k) in W},
// so every lifted kernel vector lies in W.

#include <vector>

#include "kronwebs/exact_core.hpp"

namespace kronwebs {

// A point of the projective line, stored as (1 : l) or (0 : 1).
class ProjPoint {
public:
    ProjPoint(const Scalar& l1, const Scalar& l2);
    static ProjPoint finite(const Scalar& l) { return ProjPoint(1, l); }
    static ProjPoint infinity() { return ProjPoint(0, 1); }

    const Scalar& l1() const { return l1_; }
    const Scalar& l2() const { return l2_; }
    bool operator==(const ProjPoint& o) const { return l1_ == o.l1_ && l2_ == o.l2_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

private:
    Scalar l1_, l2_;
};

struct LinearRelation {
    std::size_t dim_v = 0;
    Subspace w;  // ambient 2*dim_v, left copy first

    LinearRelation() = default;
    LinearRelation(std::size_t n, Subspace w);

    Subspace ker_left() const;   // {v : (v, 0) in W}
    Subspace ker_right() const;  // {v : (0, v) in W}
    Subspace image_left() const;
    Subspace image_right() const;
    bool is_bisurjective() const;
    bool operator==(const LinearRelation& o) const { return dim_v == o.dim_v && w == o.w; }
    bool operator!=(const LinearRelation& o) const { return !(*this == o); }
};

struct Pencil {
    Mat p1, p2;

    Pencil() = default;
    Pencil(Mat p1, Mat p2);
    std::size_t dim_v() const { return p1.cols(); }
    std::size_t dim_target() const { return p1.rows(); }
    // l1 P1 - l2 P2
    Mat at(const ProjPoint& pt) const;
};

Pencil relation_to_pencil(const LinearRelation& r);
LinearRelation pencil_to_relation(const Pencil& p);
// Any relation, bisurjective or not: P1, P2 read off the equations of W.
Pencil equations_pencil(const LinearRelation& r);

Subspace ker_point(const Pencil& p, const ProjPoint& pt);
Subspace ker_point(const LinearRelation& r, const ProjPoint& pt);

struct KroneckerCheck {
    bool kronecker;
    std::size_t rank;        // generic kernel dimension
    bool degenerate;         // both maps zero on a nonzero space
    BinaryForm certificate;  // gcd of the maximal nonvanishing minors
};

KroneckerCheck is_kronecker(const Pencil& p);
KroneckerCheck is_kronecker(const LinearRelation& r);

struct SpectralCurve {
    std::vector<Subspace> kernels;
    std::size_t generic_dim;
    bool kronecker;
    BinaryForm exceptional;       // vanishes exactly on the points where the kernel jumps
    std::vector<std::size_t> jumps;  // indices of samples with a larger kernel
};

SpectralCurve spectral_curve(const Pencil& p, const std::vector<ProjPoint>& pts);

struct KernelSample {
    ProjPoint point;
    Subspace kernel;
};

// Span of the lifts (l1 k, l2 k) of all supplied kernels.
LinearRelation reconstruct_from_kernels(std::size_t dim_v, const std::vector<KernelSample>& data);

// (a P1 + b P2, c P1 + d P2) for g = [[a, b], [c, d]].
Pencil mobius_act(const Pencil& p, const Mat& g);
// Point whose kernel for p equals the kernel at pt for mobius_act(p, g).
ProjPoint mobius_pullback(const Mat& g, const ProjPoint& pt);

LinearRelation relation_direct_sum(const std::vector<LinearRelation>& rs);
// Relation of the dimension-n shift block: v_k = v'_(k+1).
LinearRelation kronecker_relation(std::size_t n);
// Graph of the n x n Jordan cell at (1 : mu); at (0 : 1) the inverse {(J_0 v, v)}.
LinearRelation jordan_relation(std::size_t n, const ProjPoint& pt);
// Image of W under v -> s v on both copies.
LinearRelation transform_relation(const LinearRelation& r, const Mat& s);
// Restriction of W to S + S, expressed in the given basis of S.
LinearRelation restrict_relation(const LinearRelation& r, const Mat& basis);

// Upper Jordan cell with mu on the diagonal.
Mat jordan_cell(std::size_t n, const Scalar& mu);

}  // namespace kronwebs
