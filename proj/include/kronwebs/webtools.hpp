#pragma once

// Structure of Kronecker relations: the isotypic filtration, splitting into
// blocks, W-chains and the elementary operations that move isotypic blocks.
//
// A W-chain v_1, ..., v_l has (0, v_1), (v_i, v_{i+1}), (v_l, 0) in W, so v_1
// lies in Ker_(0:1) and v_l in Ker_(1:0). Lines are chosen in Ker_(1:0), the
// kernel at the first point of the default schedule (1:0), (1:1), (1:2), ...

#include <vector>

#include "kronwebs/relations.hpp"
#include "kronwebs/skew_pairs.hpp"

namespace kronwebs {

struct Filtration {
    std::size_t ambient_dim = 0;
    std::vector<Subspace> steps;  // steps[k-1] = F_k, up to the largest block dimension
    bool operator==(const Filtration& o) const { return ambient_dim == o.ambient_dim && steps == o.steps; }
};

// Points (1:offset), (1:offset+1), ...
std::vector<ProjPoint> point_schedule(std::size_t count, long offset = 0);

// F_k V = sum of the blocks of dimension <= k, from kernels at distinct points.
// Needs at least (largest block dimension + 1) points; throws NotKronecker.
Filtration isotypic_filtration(const LinearRelation& r);
Filtration isotypic_filtration(const LinearRelation& r, const std::vector<ProjPoint>& points);

struct WChain {
    std::vector<Vec> vectors;
};

struct RelationBlock {
    Subspace space;
    Mat chain;                 // columns v_1..v_k, a W-chain spanning the block
    LinearRelation relation;   // restriction in the chain basis (the standard block)
};

// Direct sum decomposition into single blocks, ordered by dimension. Lines, when
// given, are r vectors of Ker_(1:0) adapted to the filtration; each block meets
// Ker_(1:0) in its line.
std::vector<RelationBlock> split_into_blocks(const LinearRelation& r, const std::vector<Vec>& lines = {});

// Splitting of a relation whose blocks all have one dimension k by projections:
// V = sum of the kernels at k points, and the kernel at one more point identifies
// them. Throws InvalidArgument if the relation is not isotypic.
std::vector<Subspace> split_isotypic_by_projections(const LinearRelation& r, const std::vector<Vec>& lines = {});

bool is_w_chain(const LinearRelation& r, const std::vector<Vec>& vs);
// v_i -> v_i + C v'_{i-n} (1-based, v' padded with zeros); needs 0 <= n <= l - m.
// Throws NotWChain when an input is not a W-chain.
WChain elementary_op(const LinearRelation& r, const WChain& chain, const WChain& other, std::size_t n_shift,
                     const Scalar& c);

// For r of type <= k: s complements F_{k-1}, is spanned by W-chains of length k,
// and P1 s = P2 s with P1 F_{k-1} meeting P1 s only in 0.
bool verify_isotypic_block(const LinearRelation& r, const Subspace& s);

struct ElementaryStep {
    std::size_t chain;        // index of the modified chain of the top block
    std::size_t lower_block;  // index into the lower decomposition
    std::size_t n_shift;
    Scalar c;
};
struct BlockPath {
    std::vector<WChain> lower;   // chains of a block decomposition of F_{k-1}
    std::vector<ElementaryStep> steps;
    std::vector<WChain> result;  // chains spanning the target block
};
// Elementary operations taking the k-isotypic block spanned by `from` to `target`,
// for r of type <= k: first-kind steps match the (0:1) pivots, then the chain
// differences are factored as shifts of lower chains.
BlockPath reach_isotypic_block(const LinearRelation& r, const std::vector<WChain>& from, const Subspace& target);

// Direct sum of the pairs make_kron_pair(k) over ks.
SkewPair flat_model(const std::vector<std::size_t>& ks);

}  // namespace kronwebs
